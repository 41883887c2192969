#include <doctest.h>

#include "jetdiff/vanish.hpp"

#include "jetdiff/jets.hpp"

using namespace jetdiff;
using namespace jetdiff::vanish;
using combinat::Partition;
using combinat::SchurWeight;

TEST_CASE("hypersurface resolution structure") {
  auto res = resolution_hypersurface(1, 1);
  // (1,1): Gamma^(0,0) (x) O(-2d), Gamma^(1,0) (x) O(-d), Gamma^(1,1)
  REQUIRE(res.terms.size() == 3);
  CHECK(res.terms[0].j == 0);
  CHECK(res.terms[1].j == 1);
  CHECK(res.terms[2].j == 2);
  for (const auto& t : res.terms) CHECK(t.multiplicity == 1);

  auto res32 = resolution_hypersurface(3, 2);
  CHECK(res32.terms.size() == 4);  // both j=1 partners survive
  for (const auto& t : res32.terms) CHECK(t.multiplicity == 1);
  CHECK_THROWS(resolution_hypersurface(1, 2));
  CHECK_THROWS(resolution_hypersurface(1, 0));
}

TEST_CASE("hypersurface resolution multiplicities are all 1 (b <= 4)") {
  for (long b1 = 1; b1 <= 4; ++b1)
    for (long b2 = 1; b2 <= b1; ++b2)
      for (const auto& t : resolution_hypersurface(b1, b2).terms)
        CHECK(t.multiplicity == 1);
}

TEST_CASE("alternating chi of the hypersurface resolution vanishes") {
  // symbolic d, the full spec sweep b1 <= 4, b2 <= 3
  for (long b1 = 1; b1 <= 4; ++b1)
    for (long b2 = 1; b2 <= std::min(b1, 3L); ++b2) {
      auto res = resolution_hypersurface(b1, b2);
      CHECK(res.alternating_chi_defect().is_zero());
      CHECK(res.alternating_rank_defect() == 0);
    }
}

TEST_CASE("alternating chi at a numeric degree") {
  auto res = resolution_hypersurface(3, 2);
  Poly defect = res.alternating_chi_defect();
  CHECK(defect.is_zero());
  // spot value at d = 7 for good measure
  CHECK(defect.eval({{VD, Rat(7)}}) == 0);
}

TEST_CASE("euler resolution: ranks and exactness") {
  CHECK(s_rank(1, 0) == 5);
  CHECK(s_rank(0, 0) == 1);
  CHECK(s_rank(0, 1) == 0);  // not a partition shape
  CHECK(s_rank(1, 1) == 10);

  auto res = resolution_euler(1, 1);
  // ranks (1, 5, 10) after the vanishing middle partner is dropped
  REQUIRE(res.terms.size() == 3);
  CHECK(res.terms[0].multiplicity == 10);
  CHECK(res.terms[1].multiplicity == 5);
  CHECK(res.terms[2].multiplicity == 1);
  CHECK(res.alternating_rank_defect() == 0);
  CHECK(res.alternating_chi_defect().is_zero());

  for (long b1 = 1; b1 <= 4; ++b1)
    for (long b2 = 1; b2 <= b1; ++b2) {
      auto r = resolution_euler(b1, b2);
      CHECK(r.alternating_rank_defect() == 0);
      CHECK(r.alternating_chi_defect().is_zero());
    }
}

TEST_CASE("ambient vanishing cases") {
  long d = 11;
  CHECK(vanish_ambient(0, 3, 2, 4, d));
  CHECK_FALSE(vanish_ambient(2, 3, 2, 4, d));
  CHECK(vanish_ambient(3, 1, 1, 10, 6));
  CHECK_FALSE(vanish_ambient(0, 3, 2, 5, d));
  CHECK(vanish_ambient(1, 3, 2, 3, d));
  CHECK_THROWS(vanish_ambient(4, 3, 2, 4, d));
}

TEST_CASE("h0 vanishing on the hypersurface") {
  CHECK(vanish_h0_hypersurface(5, 1, 3, 2));
  CHECK_FALSE(vanish_h0_hypersurface(1, 1, 2, 2));
  CHECK_THROWS(vanish_h0_hypersurface(5, 1, 3, 1));
}

TEST_CASE("symmetric power vanishing") {
  CHECK(vanish_sym(1));
  CHECK_FALSE(vanish_sym(0));
  CHECK(vanish_sym(10));
}

TEST_CASE("teo1: every order-2 graded piece is certified, m <= 200") {
  for (long m = 1; m <= 200; ++m)
    for (const auto& piece : jets::decompose_gr2(m).pieces) {
      long l1 = piece.lambda.part(0), l2 = piece.lambda.part(1);
      bool ok = l2 == 0 ? vanish_sym(l1) : vanish_h0_hypersurface(l1, l2, 0, 2);
      CHECK(ok);
    }
}

TEST_CASE("positive-twist Hq vanishing predicate") {
  CHECK(vanish_hq_positive(SchurWeight({10, 10, 10}), 10, HqVariant::Demailly));
  CHECK_FALSE(vanish_hq_positive(SchurWeight({7, 0, 0}), 100, HqVariant::Demailly));
  // for fixed a with a3 = 4 > 3 the inequality eventually holds in d
  CHECK(vanish_hq_positive(SchurWeight({5, 5, 4}), 100, HqVariant::Demailly));
  CHECK_FALSE(vanish_hq_positive(SchurWeight({5, 5, 3}), 100000, HqVariant::Demailly));
  // Bruckmann variant differs by the constant
  CHECK(vanish_hq_positive(SchurWeight({5, 5, 3}), 10, HqVariant::Bruckmann) ==
        (3 * 9 > 2 * 10 + 30 - 8));
}

TEST_CASE("Bruckmann-Rackwitz column criterion") {
  CHECK(vanish_bruckmann_rackwitz(Partition({7}), 4, 3));
  CHECK_FALSE(vanish_bruckmann_rackwitz(Partition({1, 1, 1}), 4, 3));
  CHECK(vanish_bruckmann_rackwitz(Partition({2, 1}), 4, 3));
}

TEST_CASE("t10 pseudoeffective / big branches") {
  CHECK(vanish_t10(SchurWeight({7, -2, -2}), 0));   // |a| = 3 > 0, k >= 0
  CHECK_FALSE(vanish_t10(SchurWeight({0, 0, 0}), 0));
  CHECK(vanish_t10(SchurWeight({1, 0, 0}), 0));
  CHECK(vanish_t10(SchurWeight({0, 0, 0}), 1));     // big branch
}

TEST_CASE("chi equals h0 under the positivity inequality") {
  auto val = chi_equals_h0(SchurWeight({10, 10, 10}), 10);
  REQUIRE(val.has_value());
  CHECK(is_integer(*val));
  CHECK(*val >= 0);

  CHECK_FALSE(chi_equals_h0(SchurWeight({9, 0, 0}), 10).has_value());

  // sampled grid: any returned value is a non-negative integer
  for (long d : {8L, 12L, 20L})
    for (long a : {6L, 10L}) {
      auto v = chi_equals_h0(SchurWeight({a + 2, a + 1, a}), d);
      if (v) {
        CHECK(is_integer(*v));
        CHECK(*v >= 0);
      }
    }
}
