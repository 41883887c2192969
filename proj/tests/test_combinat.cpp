#include <doctest.h>

#include <random>

#include "jetdiff/combinat.hpp"

using namespace jetdiff;
using namespace jetdiff::combinat;

namespace {

// All partitions of n (any number of parts).
void partitions_of(long n, long max_part, std::vector<long>& stack,
                   std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(Partition(stack));
    return;
  }
  for (long p = std::min(n, max_part); p >= 1; --p) {
    stack.push_back(p);
    partitions_of(n - p, p, stack, out);
    stack.pop_back();
  }
}

std::vector<Partition> all_partitions(long n) {
  std::vector<Partition> out;
  std::vector<long> stack;
  partitions_of(n, n, stack, out);
  return out;
}

}  // namespace

TEST_CASE("partition canonical form and views") {
  Partition p({3, 1, 0, 0});
  CHECK(p.length() == 2);
  CHECK(p == Partition({3, 1}));
  CHECK(p.padded(4) == std::vector<long>({3, 1, 0, 0}));
  CHECK(p.size() == 4);
  CHECK_THROWS(Partition({1, 2}));
  CHECK_THROWS(Partition({2, -1}));
}

TEST_CASE("conjugate") {
  CHECK(conjugate(Partition({1})) == Partition({1}));
  CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
  CHECK(conjugate(Partition({2, 2, 1})) == Partition({3, 2}));
}

TEST_CASE("conjugate is an involution on random partitions") {
  std::mt19937 rng(20240817);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<long> parts;
    int len = 1 + rng() % 6;
    long prev = 1 + rng() % 12;
    for (int i = 0; i < len; ++i) {
      parts.push_back(prev);
      prev = 1 + rng() % prev;
    }
    Partition p(parts);
    CHECK(conjugate(conjugate(p)) == p);
  }
}

TEST_CASE("standard tableau counts") {
  CHECK(count_standard_tableaux(Partition({5})) == 1);
  CHECK(count_standard_tableaux(Partition({1, 1, 1})) == 1);
  CHECK(count_standard_tableaux(Partition({2, 1})) == 2);
  CHECK(count_standard_tableaux_brute(Partition({2, 1})) == 2);
}

TEST_CASE("closed formula == hook length == brute force, |p| <= 8") {
  for (long n = 1; n <= 8; ++n)
    for (const auto& p : all_partitions(n)) {
      Int closed = count_standard_tableaux(p);
      CHECK(closed == count_standard_tableaux_hook(p));
      CHECK(closed == count_standard_tableaux_brute(p));
    }
}

TEST_CASE("sum of v^2 over partitions of r equals r!") {
  for (long r = 1; r <= 8; ++r) {
    Int total = 0;
    for (const auto& p : all_partitions(r)) {
      Int v = count_standard_tableaux(p);
      total += v * v;
    }
    CHECK(total == factorial(r));
  }
}

TEST_CASE("tensor-space decomposition: sum v * rank = r'^r") {
  for (long rp : {2L, 3L, 4L}) {
    for (long r = 1; r <= 8; ++r) {
      Int total = 0;
      for (const auto& p : all_partitions(r)) {
        if (static_cast<long>(p.length()) > rp) continue;  // zero functor
        total += count_standard_tableaux(p) * schur_rank(p, rp);
      }
      CHECK(total == int_pow(Int(rp), r));
    }
  }
}

TEST_CASE("yamanouchi words") {
  // every suffix read from the end has at least as many k as k+1
  CHECK(is_yamanouchi({2, 1, 1}));
  CHECK(is_yamanouchi({2, 1}));
  CHECK(is_yamanouchi({3, 2, 1, 2, 1}));
  CHECK_FALSE(is_yamanouchi({1, 1, 2}));  // the suffix "2" is unbalanced
  CHECK_FALSE(is_yamanouchi({2, 2, 1}));
  CHECK_FALSE(is_yamanouchi({1, 2, 1, 2, 3}));
  CHECK_FALSE(is_yamanouchi({1, 2, 2}));
  CHECK(is_yamanouchi({}));
  // row words of valid LR fillings are Yamanouchi
  SkewTableau t{SkewShape(Partition({3, 2}), Partition({1})), {{1, 1}, {1, 2}}};
  CHECK(t.valid());
  CHECK(is_yamanouchi(t.row_word()));
}

TEST_CASE("skew tableau validity and row word") {
  SkewTableau t{SkewShape(Partition({2, 2}), Partition({1})),
                {{1}, {1, 2}}};
  CHECK(t.valid());
  CHECK(t.row_word() == std::vector<long>({1, 2, 1}));
  SkewTableau bad{SkewShape(Partition({2, 2}), Partition({1})),
                  {{1}, {2, 1}}};
  CHECK_FALSE(bad.valid());
}

TEST_CASE("LR coefficients: spec examples") {
  // lambda=(1), mu=(b1-1,b2), nu=(b1,b2) -> 1
  CHECK(lr_coefficient(Partition({1}), Partition({2, 1}), Partition({3, 1})) == 1);
  CHECK(lr_coefficient(Partition({1}), Partition({1}), Partition({2, 2})) == 0);
  CHECK(lr_coefficient(Partition({1, 1}), Partition({1}), Partition({2, 1})) == 1);
  // classical: c_{(2,1),(2,1)}^{(3,2,1)} = 2
  CHECK(lr_coefficient(Partition({2, 1}), Partition({2, 1}),
                       Partition({3, 2, 1})) == 2);
}

TEST_CASE("LR symmetry in the first two arguments") {
  for (long a = 1; a <= 5; ++a)
    for (long b = 1; b <= 5 - a + 1; ++b) {
      auto las = all_partitions(a);
      auto mus = all_partitions(b);
      for (const auto& la : las)
        for (const auto& mu : mus)
          for (const auto& nu : all_partitions(a + b))
            CHECK(lr_coefficient(la, mu, nu) == lr_coefficient(mu, la, nu));
    }
}

TEST_CASE("schur ranks") {
  CHECK(schur_rank(Partition({1}), 3) == 3);
  CHECK(schur_rank(Partition({2, 1}), 3) == 8);
  CHECK(schur_rank(Partition({1, 1}), 4) == 6);
  CHECK(schur_rank(Partition({1, 0}), 5) == 5);
  // s(a,b) = rank of Gamma^(a,b,0,0,0) on rank 5: s(1,1) = 10, s(2,1) = 40
  CHECK(schur_rank(Partition({1, 1}), 5) == 10);
  CHECK(schur_rank(Partition({2, 1}), 5) == 40);
  CHECK_THROWS(schur_rank(Partition({1, 1, 1, 1}), 3));
  CHECK(schur_rank_or_zero(Partition({1, 1, 1, 1}), 3) == 0);
}

TEST_CASE("det twists do not change the rank") {
  SchurWeight w({3, 1, -2});
  auto norm = w.normalize();
  CHECK(norm.det_twist == -2);
  CHECK(norm.partition == Partition({5, 3}));
  CHECK(schur_rank(w, 3) == schur_rank(Partition({5, 3}), 3));
  // a short weight pads with zeros before any twist normalization
  CHECK(schur_rank(SchurWeight({3, 1}), 3) == schur_rank(Partition({3, 1}), 3));
  CHECK_THROWS(schur_rank(SchurWeight({1, -1}), 3));
}

TEST_CASE("GT pattern weights") {
  auto std3 = enumerate_gt_patterns(Partition({1}), 3);
  CHECK(std3.size() == 3);
  CHECK(std3.at({1, 0, 0}) == 1);
  CHECK(std3.at({0, 1, 0}) == 1);
  CHECK(std3.at({0, 0, 1}) == 1);

  auto det = enumerate_gt_patterns(Partition({1, 1, 1}), 3);
  CHECK(det.size() == 1);
  CHECK(det.at({1, 1, 1}) == 1);

  auto adj = enumerate_gt_patterns(Partition({2, 1}), 3);
  Int total = 0;
  for (const auto& [w, mult] : adj) total += mult;
  CHECK(total == 8);
  CHECK(adj.at({1, 1, 1}) == 2);
}

TEST_CASE("GT totals match ranks; weights sum to |p|") {
  for (long n = 0; n <= 5; ++n)
    for (const auto& p : all_partitions(n == 0 ? 1 : n))
      for (size_t r = p.length(); r <= 5; ++r) {
        if (p.part(0) > 5) continue;
        auto ws = enumerate_gt_patterns(p, r);
        Int total = 0;
        for (const auto& [w, mult] : ws) {
          long coord_sum = 0;
          for (long c : w) coord_sum += c;
          CHECK(coord_sum == p.size());
          total += mult;
        }
        CHECK(total == schur_rank(p, r));
      }
}
