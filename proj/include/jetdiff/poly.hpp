// poly.hpp — sparse multivariate polynomials with exact rational coefficients.
//
// One fixed variable universe serves every ring in the project:
//   d            hypersurface degree
//   m            jet weighted degree
//   l1,l2,l3     Schur weight entries (lambda)
//   h            hyperplane class
//   a1..a4       formal Chern roots
// A polynomial only ever uses the variables its ring needs; truncation by
// total degree in the geometric variables (h, a1..a4) realizes the Chow-ring
// quotient.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "jetdiff/numeric.hpp"

namespace jetdiff {

enum Var : int {
  VD = 0,
  VM = 1,
  VL1 = 2,
  VL2 = 3,
  VL3 = 4,
  VH = 5,
  VA1 = 6,
  VA2 = 7,
  VA3 = 8,
  VA4 = 9,
};
inline constexpr int kNumVars = 10;

const char* var_name(int v);

using Mono = std::array<uint8_t, kNumVars>;

inline Mono mono_one() { return Mono{}; }

inline int geom_degree(const Mono& m) {
  return m[VH] + m[VA1] + m[VA2] + m[VA3] + m[VA4];
}

class Poly {
 public:
  using Terms = std::map<Mono, Rat>;

  Poly() = default;
  explicit Poly(const Rat& c) {
    if (c != 0) terms_[mono_one()] = c;
  }
  explicit Poly(long c) : Poly(Rat(c)) {}

  static Poly variable(int v, int power = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rat constant_term() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  Poly operator*(const Poly& o) const { return mul_trunc(o, -1); }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return terms_ != o.terms_; }

  // Product, dropping monomials of geometric degree > cap (cap < 0: keep all).
  Poly mul_trunc(const Poly& o, int geom_cap) const;
  Poly truncate_geom(int geom_cap) const;

  int degree_in(int v) const;
  // Total degree in a subset of variables; -1 for the zero polynomial.
  int degree_in_set(const std::vector<int>& vars) const;

  // Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coeff_of(int v, int k) const;
  // Part whose total degree in `vars` is exactly deg.
  Poly homogeneous_part(const std::vector<int>& vars, int deg) const;

  // Substitute variable -> polynomial (with optional geometric truncation).
  Poly subst(int v, const Poly& value, int geom_cap = -1) const;
  Poly subst_rat(int v, const Rat& value) const;

  // Exchange two variables.
  Poly swap_vars(int v1, int v2) const;

  // Exact quotient by (x_i - x_j); throws if not divisible.
  Poly divide_by_diff(int vi, int vj) const;

  // Divided difference (f - swap(f)) / (x_i - x_j).
  Poly divided_difference(int vi, int vj) const;

  bool uses_only(const std::vector<int>& vars) const;

  // Full evaluation: every variable present must be assigned.
  Rat eval(const std::map<int, Rat>& assign) const;

  // Canonical rendering: terms in ascending lex order of exponents.
  std::string str() const;

  void add_term(const Mono& m, const Rat& c);

 private:
  Terms terms_;
};

// exp(x) truncated: requires every monomial of x to have geometric degree
// >= 1, so the series terminates at geom_cap.
Poly exp_trunc(const Poly& x, int geom_cap);

// Todd series x/(1-e^{-x}) truncated; same requirement on x.
Poly todd_series(const Poly& x, int geom_cap);

// Geometric-series inverse of (1 + u) where u has geometric degree >= 1.
Poly invert_one_plus(const Poly& u, int geom_cap);

Poly poly_pow(const Poly& base, unsigned e, int geom_cap = -1);

}  // namespace jetdiff
