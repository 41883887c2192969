// bounds.hpp — the h^2 upper-bound machinery: per-partition second-difference
// bounds on the flag bundle, g(lambda) sums over the order-3 decomposition,
// the constant C, and the degree thresholds.
#pragma once

#include <optional>

#include "jetdiff/chow.hpp"
#include "jetdiff/combinat.hpp"
#include "jetdiff/jets.hpp"

namespace jetdiff::bounds {

// g(lambda) = (3|lambda|^3/2) prod_{i<j} (lambda_i - lambda_j); vanishes when
// two parts coincide.
Rat g_weight(const combinat::Partition& lambda);

// g as a polynomial in l1,l2,l3.
Poly g_weight_poly();

struct BoundReport {
  combinat::Partition lambda;
  std::optional<long> d;
  Poly bound;        // B(lambda,d) = chi(9|l|) - 2 chi(6|l|) + chi(3|l|)
  Poly leadingPart;  // degree-6-in-lambda homogeneous component
  Poly remainder;    // bound - leadingPart; lambda-degree <= 5 symbolically
};

// Fully symbolic B(lambda, d) for the compact (X in P^4) or log (P^3, X)
// case; polynomial in l1,l2,l3,d.
Poly symbolic_h2_bound(bool log_case);

// Second-difference upper bound for h^2(X, Gamma^lambda) at a strict
// partition; requires the positivity condition at the given degree.
BoundReport h2_partition_bound(const combinat::Partition& lambda, long d,
                               bool log_case);

// Exact sum of g over the order-3 decomposition of weight m.
Rat sum_g(long m);
Rat sum_g_positive_gamma(long m);  // gamma = 0 slice dropped

// Fitted m^9 coefficient of sum_g.
Rat constant_C(unsigned jobs = 1);

// Minimal degree from which d(389 d^3 - 20739 d^2 + 185559 d - 358873) stays
// positive; the quartic's value at integer d is exposed for tests.
long threshold_euler_quartic();
Int euler_quartic_value(long d);

struct ThresholdResult {
  long verified_from;  // reference threshold whose range was fully verified
  long minimal_found;  // smallest d >= 2 with Delta(d) > 0 (a finding)
  Poly delta;          // chi-leading minus the h^2-leading bound, in d
};

// Delta(d) = leading chi coefficient minus C d(d+13) (compact) or C (d+14)
// (log); verifies positivity over [97,500] resp. [92,500] plus a positive
// leading coefficient, and reports the minimal positive degree.
ThresholdResult threshold_order3(bool log_case, unsigned jobs = 1);

struct SurfaceBound {
  Poly coefficient;  // d (4d^2 - 68d + 154), derived from Chern classes
  long threshold;    // minimal degree from which it stays positive
};
SurfaceBound surface_2jet_bound();

}  // namespace jetdiff::bounds
