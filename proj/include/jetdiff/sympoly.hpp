// sympoly.hpp — symmetric polynomials in r variables with exact rational
// coefficients; bialternant Schur polynomials and Schur-basis expansion.
#pragma once

#include <map>
#include <vector>

#include "jetdiff/chow.hpp"
#include "jetdiff/combinat.hpp"
#include "jetdiff/numeric.hpp"

namespace jetdiff::symfunc {

// Polynomial in x_1..x_r, keyed by exponent vector of length r.
class SymPoly {
 public:
  using Expo = std::vector<int>;
  using Terms = std::map<Expo, Rat>;

  explicit SymPoly(size_t r) : r_(r) {}

  size_t num_vars() const { return r_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Expo& e, const Rat& c);

  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  SymPoly operator*(const SymPoly& o) const;
  bool operator==(const SymPoly& o) const {
    return r_ == o.r_ && terms_ == o.terms_;
  }

  SymPoly permuted(const std::vector<size_t>& perm) const;
  bool is_symmetric() const;

  // Exact quotient by (x_i - x_j); throws if not divisible.
  SymPoly divide_by_diff(size_t i, size_t j) const;

  Rat eval_all_ones() const;

 private:
  size_t r_;
  Terms terms_;
};

// Schur polynomial s_p in r variables; computed both as the bialternant
// quotient a_{p+delta}/a_delta and as the Gelfand-Tsetlin weight sum, which
// must agree.
SymPoly schur_polynomial(const combinat::Partition& p, size_t r);

// Expansion of s_p * s_q in the Schur basis of r variables by leading-term
// peeling; coefficients for partitions with at most r rows are the full
// Littlewood-Richardson multiplicities.
std::map<combinat::Partition, Int> schur_product_expand(
    const combinat::Partition& p, const combinat::Partition& q, size_t r);

// Chern character of Gamma^p applied to a sum of line bundles with the given
// first Chern classes: sum over weights mu of exp(mu . classes).
chow::ChowClass formal_character(const combinat::Partition& p,
                                 const std::vector<chow::ChowClass>& classes);

}  // namespace jetdiff::symfunc
