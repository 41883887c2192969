#include "jetdiff/sympoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace jetdiff::symfunc {

using combinat::Partition;

void SymPoly::add_term(const Expo& e, const Rat& c) {
  if (e.size() != r_) throw std::invalid_argument("exponent length mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
  SymPoly out(r_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Expo e(r_);
      for (size_t i = 0; i < r_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

SymPoly SymPoly::permuted(const std::vector<size_t>& perm) const {
  SymPoly out(r_);
  for (const auto& [e, c] : terms_) {
    Expo p(r_);
    for (size_t i = 0; i < r_; ++i) p[perm[i]] = e[i];
    out.add_term(p, c);
  }
  return out;
}

bool SymPoly::is_symmetric() const {
  for (const auto& [e, c] : terms_) {
    // every permutation of an exponent vector must carry the same coefficient
    Expo probe = e;
    std::sort(probe.begin(), probe.end());
    do {
      auto it = terms_.find(probe);
      if (it == terms_.end() || it->second != c) return false;
    } while (std::next_permutation(probe.begin(), probe.end()));
  }
  return true;
}

SymPoly SymPoly::divide_by_diff(size_t vi, size_t vj) const {
  int dmax = 0;
  for (const auto& [e, c] : terms_) dmax = std::max(dmax, e[vi]);
  std::vector<SymPoly> fp(dmax + 1, SymPoly(r_));
  for (const auto& [e, c] : terms_) {
    Expo rest = e;
    int p = rest[vi];
    rest[vi] = 0;
    fp[p].add_term(rest, c);
  }
  SymPoly q(r_);
  for (int k = 0; k + 1 <= dmax; ++k)
    for (int p = k + 1; p <= dmax; ++p)
      for (const auto& [e, c] : fp[p].terms_) {
        Expo t = e;
        t[vj] += p - 1 - k;
        t[vi] += k;
        q.add_term(t, c);
      }
  // verify q * (x_i - x_j) == f
  SymPoly diff(r_);
  {
    Expo ei(r_, 0), ej(r_, 0);
    ei[vi] = 1;
    ej[vj] = 1;
    diff.add_term(ei, 1);
    diff.add_term(ej, -1);
  }
  SymPoly check = q * diff;
  check -= *this;
  if (!check.is_zero())
    throw std::logic_error("alternant not divisible by variable difference");
  return q;
}

Rat SymPoly::eval_all_ones() const {
  Rat total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

namespace {

// Alternant a_alpha = det[x_i^{alpha_j}] as a sum over permutations.
SymPoly alternant(const std::vector<int>& alpha) {
  size_t r = alpha.size();
  SymPoly out(r);
  std::vector<size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int sign = 1;
    for (size_t i = 0; i < r; ++i)
      for (size_t j = i + 1; j < r; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    SymPoly::Expo e(r);
    for (size_t i = 0; i < r; ++i) e[i] = alpha[perm[i]];
    out.add_term(e, sign);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SymPoly schur_bialternant(const Partition& p, size_t r) {
  std::vector<long> lam = p.padded(r);
  std::vector<int> alpha(r);
  for (size_t j = 0; j < r; ++j)
    alpha[j] = static_cast<int>(lam[j] + (r - 1 - j));
  SymPoly num = alternant(alpha);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = i + 1; j < r; ++j) num = num.divide_by_diff(i, j);
  return num;
}

SymPoly schur_from_gt(const Partition& p, size_t r) {
  SymPoly out(r);
  for (const auto& [w, mult] : combinat::enumerate_gt_patterns(p, r)) {
    SymPoly::Expo e(r);
    for (size_t i = 0; i < r; ++i) e[i] = static_cast<int>(w[i]);
    out.add_term(e, Rat(mult));
  }
  return out;
}

}  // namespace

SymPoly schur_polynomial(const Partition& p, size_t r) {
  if (p.length() > r)
    throw std::invalid_argument("partition longer than variable count");
  SymPoly bi = schur_bialternant(p, r);
  SymPoly gt = schur_from_gt(p, r);
  if (!(bi == gt))
    throw std::logic_error(
        "bialternant and weight-sum Schur polynomials disagree");
  return bi;
}

std::map<Partition, Int> schur_product_expand(const Partition& p,
                                              const Partition& q, size_t r) {
  if (r < p.length() || r < q.length())
    throw std::invalid_argument(
        "schur_product_expand: too few variables for the factors");
  SymPoly prod = schur_polynomial(p, r) * schur_polynomial(q, r);
  std::map<Partition, Int> out;
  // Peel the lex-leading monomial; symmetry makes it weakly decreasing.
  while (!prod.is_zero()) {
    auto lead = std::prev(prod.terms().end());
    std::vector<long> expo(lead->first.begin(), lead->first.end());
    for (size_t i = 1; i < expo.size(); ++i)
      if (expo[i] > expo[i - 1])
        throw std::logic_error("leading monomial not a partition shape");
    Rat coeff = lead->second;
    if (!is_integer(coeff) || coeff < 0)
      throw std::logic_error("non-positive-integer Schur expansion coefficient");
    Partition nu(expo);
    SymPoly snu = schur_polynomial(nu, r);
    SymPoly scaled(r);
    for (const auto& [e, c] : snu.terms()) scaled.add_term(e, c * coeff);
    prod -= scaled;
    out[nu] = coeff.get_num();
  }
  return out;
}

chow::ChowClass formal_character(const Partition& p,
                                 const std::vector<chow::ChowClass>& classes) {
  if (classes.empty()) throw std::invalid_argument("no line classes given");
  const chow::VarietySpec& v = classes.front().variety;
  for (const auto& c : classes)
    if (!(c.variety == v))
      throw std::invalid_argument("line classes live in different rings");
  size_t r = classes.size();
  int dim = v.dim();
  Poly total;
  for (const auto& [mu, mult] : combinat::enumerate_gt_patterns(p, r)) {
    Poly expo;
    for (size_t i = 0; i < r; ++i)
      if (mu[i] != 0) expo += classes[i].cls * Rat(mu[i]);
    Poly e = expo.is_zero() ? Poly(1) : exp_trunc(expo, dim);
    total += e * Rat(mult);
  }
  return {v, total};
}

}  // namespace jetdiff::symfunc
