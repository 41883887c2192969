#include "jetdiff/bounds.hpp"

#include <functional>
#include <mutex>
#include <stdexcept>

namespace jetdiff::bounds {

using chow::VarietySpec;
using combinat::Partition;

Rat g_weight(const Partition& lambda) {
  if (lambda.length() > 3)
    throw std::invalid_argument("g_weight expects at most 3 parts");
  long l1 = lambda.part(0), l2 = lambda.part(1), l3 = lambda.part(2);
  long total = l1 + l2 + l3;
  Rat g = rat(3, 2) * Rat(total) * Rat(total) * Rat(total);
  g *= Rat(l1 - l2) * Rat(l1 - l3) * Rat(l2 - l3);
  return g;
}

Poly g_weight_poly() {
  Poly l1 = Poly::variable(VL1), l2 = Poly::variable(VL2),
       l3 = Poly::variable(VL3);
  Poly total = l1 + l2 + l3;
  Poly g = total * total * total * rat(3, 2);
  return g * (l1 - l2) * (l1 - l3) * (l2 - l3);
}

namespace {

VarietySpec bound_variety(bool log_case) {
  return log_case ? VarietySpec::log_pair() : VarietySpec::hypersurface(4);
}

}  // namespace

Poly symbolic_h2_bound(bool log_case) {
  VarietySpec v = bound_variety(log_case);
  auto chi_at = [&](long k) {
    Rat r(k);
    return chow::flag_chi_closed_form(v, {r, r, r});
  };
  return chi_at(9) - chi_at(6) * Rat(2) + chi_at(3);
}

BoundReport h2_partition_bound(const Partition& lambda, long d, bool log_case) {
  if (!chow::flag_positivity_condition(lambda, d, log_case)) {
    std::string cond = log_case ? "|lambda| > 3d+2" : "|lambda| > 4(d-5)+18";
    throw std::invalid_argument("h2_partition_bound requires " + cond);
  }
  Poly sym = symbolic_h2_bound(log_case);
  Poly lead6 = sym.homogeneous_part({VL1, VL2, VL3}, 6);
  auto at_lambda = [&](const Poly& p) {
    return p.subst_rat(VL1, Rat(lambda.part(0)))
        .subst_rat(VL2, Rat(lambda.part(1)))
        .subst_rat(VL3, Rat(lambda.part(2)))
        .subst_rat(VD, Rat(d));
  };
  BoundReport rep{lambda, d, at_lambda(sym), at_lambda(lead6), Poly()};
  rep.remainder = rep.bound - rep.leadingPart;
  return rep;
}

Rat sum_g(long m) {
  static std::mutex mu;
  static std::vector<Poly> table;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table = jets::lambda_coefficient_table(g_weight_poly());
  }
  auto sums = jets::lambda_power_sums_gr3(m, false);
  Rat acc = 0;
  for (size_t t = 0; t < table.size(); ++t)
    if (!table[t].is_zero()) acc += table[t].constant_term() * Rat(sums[t]);
  return acc;
}

Rat sum_g_positive_gamma(long m) {
  auto table = jets::lambda_coefficient_table(g_weight_poly());
  auto sums = jets::lambda_power_sums_gr3(m, true);
  Rat acc = 0;
  for (size_t t = 0; t < table.size(); ++t)
    if (!table[t].is_zero()) acc += table[t].constant_term() * Rat(sums[t]);
  return acc;
}

Rat constant_C(unsigned jobs) {
  auto fit = jets::fit_quasi_polynomial(
      [](long m) { return Poly(sum_g(m)); }, 9, jobs);
  if (!fit.leading.is_constant())
    throw std::logic_error("sum_g leading coefficient is not a constant");
  return fit.leading.constant_term();
}

Int euler_quartic_value(long d) {
  Int x(d);
  return x * (389 * x * x * x - 20739 * x * x + 185559 * x - 358873);
}

namespace {

// Smallest integer >= from such that p stays positive for every integer in
// [that, horizon]; the horizon must exceed the Cauchy root bound so
// positivity persists beyond it.
long minimal_persistent_positive(const std::function<Rat(long)>& p, long from,
                                 long horizon) {
  long last_bad = from - 1;
  for (long d = from; d <= horizon; ++d)
    if (p(d) <= 0) last_bad = d;
  if (last_bad >= horizon)
    throw std::runtime_error("no positivity threshold below the horizon");
  return last_bad + 1;
}

}  // namespace

long threshold_euler_quartic() {
  // Horizon above the Cauchy bound 1 + 358873/389 of the cubic factor.
  return minimal_persistent_positive(
      [](long d) { return Rat(euler_quartic_value(d)); }, 2, 1500);
}

ThresholdResult threshold_order3(bool log_case, unsigned jobs) {
  Rat C = constant_C(jobs);
  auto fit = jets::fit_leading(bound_variety(log_case), 3, 9, jobs);
  Poly delta = fit.leading;
  Poly dvar = Poly::variable(VD);
  if (log_case)
    delta -= (dvar + Poly(14)) * C;
  else
    delta -= (dvar * dvar + dvar * Rat(13)) * C;

  int deg = delta.degree_in(VD);
  if (delta.coeff_of(VD, deg).constant_term() <= 0)
    throw std::runtime_error("Delta has a non-positive leading coefficient");

  auto delta_at = [&](long d) { return delta.eval({{VD, Rat(d)}}); };
  long claimed_from = log_case ? 92 : 97;
  for (long d = claimed_from; d <= 500; ++d)
    if (delta_at(d) <= 0)
      throw std::runtime_error("Delta(d) <= 0 at d = " + std::to_string(d) +
                               " inside the verified range");
  long minimal = 2;
  while (delta_at(minimal) <= 0) ++minimal;
  return {claimed_from, minimal, delta};
}

SurfaceBound surface_2jet_bound() {
  VarietySpec surf = VarietySpec::hypersurface(3);
  auto c = chow::chern_classes(surf, chow::AtomKind::TangentX);
  Poly cls = (c[1] * c[1]) * Rat(13) - c[2] * Rat(9);
  Poly coeff = chow::ChowClass{surf, cls}.integrate();
  long threshold = minimal_persistent_positive(
      [&](long d) { return coeff.eval({{VD, Rat(d)}}); }, 1, 200);
  return {coeff, threshold};
}

}  // namespace jetdiff::bounds
