// vanish.hpp — sufficient vanishing predicates, the chi = h^0 corollary, and
// the Schur-complex resolutions with their exactness bookkeeping. Every
// predicate returns "vanishing guaranteed" when true; false means unknown,
// never non-vanishing.
#pragma once

#include <optional>
#include <vector>

#include "jetdiff/chow.hpp"
#include "jetdiff/combinat.hpp"

namespace jetdiff::vanish {

struct ResolutionTerm {
  int j;  // homological index; the resolved bundle sits at j = -1
  chow::BundleExpr bundle;
  Int multiplicity;
};

struct Resolution {
  chow::VarietySpec variety;
  std::vector<ResolutionTerm> terms;  // j >= 0, the resolving complex
  chow::BundleExpr resolved;
  // sum_j (-1)^j mult_j chi(term_j) - chi(resolved); zero iff exact.
  Poly alternating_chi_defect() const;
  Int alternating_rank_defect() const;
};

// The four-term complex resolving Gamma^(b1,b2,0) Omega_X from restricted
// ambient Schur bundles twisted by O(-d), O(-2d).
Resolution resolution_hypersurface(long b1, long b2);

// The line-bundle resolution of Gamma^(b1,b2,0,0) T_{P^4} from the Euler
// sequence, with multiplicities s(.,.).
Resolution resolution_euler(long b1, long b2);

// Rank of Gamma^(x,y,0,0,0) of a rank-5 bundle; zero when (x,y) is not a
// partition shape.
Int s_rank(long x, long y);

// H^q(X, Gamma^(b1,b2,0,0) Omega_{P^4}|X (x) O(l)) vanishing, cases q=0..3.
bool vanish_ambient(int q, long b1, long b2, long l, long d);

// H^0(X, Gamma^(b1,b2,0) Omega_X (x) O(l)) = 0 when l < b1 + b2 (d >= 2).
bool vanish_h0_hypersurface(long b1, long b2, long l, long d);

// H^0(X, S^m Omega_X) = 0 for m >= 1.
bool vanish_sym(long m);

// H^q = 0 for all q >= 1 under the positivity inequality
// a3(d-1) > 2(a1+a2) + 3(d-1), or the variant a3(d-1) > 2(a1+a2) + 3d - 8.
enum class HqVariant { Demailly, Bruckmann };
bool vanish_hq_positive(const combinat::SchurWeight& a, long d, HqVariant var);

// Complete-intersection criterion: the first n-p column lengths of T sum
// below p = dim X.
bool vanish_bruckmann_rackwitz(const combinat::Partition& T, int n, int p);

// H^0(X, Gamma^a T_X (x) O(-k)) = 0 for O_X(k) pseudoeffective (k >= 0) with
// |a| > 0, or big (k > 0) with |a| >= 0.
bool vanish_t10(const combinat::SchurWeight& a, long twist_k);

// When every H^q, q >= 1, is guaranteed to vanish, h^0 = chi; returns chi at
// the given degree, nothing otherwise.
std::optional<Rat> chi_equals_h0(const combinat::SchurWeight& w, long d);

}  // namespace jetdiff::vanish
