// jets.hpp — graded decompositions of the order-2 and order-3 jet bundles in
// dimension 3, their aggregated Euler characteristics, and exact
// quasi-polynomial fitting in the weighted degree m.
#pragma once

#include <functional>
#include <vector>

#include "jetdiff/chow.hpp"
#include "jetdiff/combinat.hpp"
#include "jetdiff/poly.hpp"

namespace jetdiff::jets {

struct JetPiece {
  long gamma;  // 0 for order 2
  combinat::Partition lambda;
};

struct JetDecomposition {
  long m;
  int order;
  std::vector<JetPiece> pieces;
};

// Order 3: gamma in [0, m/5], lambda_1 + 2 lambda_2 + 3 lambda_3 = m - gamma,
// lambda_i - lambda_j >= gamma for i < j. Ordered by gamma ascending, then
// lambda lexicographically descending.
JetDecomposition decompose_gr3(long m);

// Order 2: lambda_1 + 2 lambda_2 = m with lambda_1 >= lambda_2 >= 0.
JetDecomposition decompose_gr2(long m);

// Sums of lambda-monomials (total degree <= 6) over the order-3 index set;
// every aggregated quantity here is a dot product against this table.
inline constexpr int kMonomialDegreeCap = 6;
int monomial_count();                      // number of (i,j,k), i+j+k <= 6
int monomial_index(int i, int j, int k);   // position in the table
std::vector<Int> lambda_power_sums_gr3(long m, bool skip_gamma_zero = false);

// Coefficient table of a polynomial in (l1,l2,l3): entry per monomial, each
// a polynomial in the remaining variables.
std::vector<Poly> lambda_coefficient_table(const Poly& p);

// chi(v, E_{order,m}) as a polynomial in d: the exact sum of the closed-form
// chi over all decomposition pieces.
Poly chi_jets(const chow::VarietySpec& v, int order, long m);

// Period P plus one polynomial in (m, d) per residue class mod P.
struct QuasiPolynomial {
  long period = 1;
  std::vector<Poly> residue;  // indexed by m mod period
  Poly eval(long m) const;    // polynomial in d
  // Highest-degree coefficient, which must agree across residues.
  Poly leading(int degree) const;
};

struct FitResult {
  QuasiPolynomial qp;
  Poly leading;
};

// Fits values(m) (m >= 1) by degree-bounded polynomials per residue class,
// detecting the minimal period <= 60 that validates on >= 3 held-out points
// per residue. Throws if nothing validates or the leading coefficient is
// residue-dependent.
FitResult fit_quasi_polynomial(const std::function<Poly(long)>& values,
                               int degree, unsigned jobs = 1);

// Quasi-polynomial fit of m -> chi_jets(v, order, m); for order 3 the
// leading coefficient realizes the m^9 asymptotics exactly.
FitResult fit_leading(const chow::VarietySpec& v, int order, int degree,
                      unsigned jobs = 1);

}  // namespace jetdiff::jets
