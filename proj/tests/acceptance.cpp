// Acceptance suite: recomputes every headline result end to end and prints
// one PASS/FAIL line per criterion. Exit status is the number of failures.
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "jetdiff/bounds.hpp"
#include "jetdiff/jets.hpp"
#include "jetdiff/sympoly.hpp"
#include "jetdiff/vanish.hpp"

using namespace jetdiff;
using chow::AtomKind;
using chow::BundleExpr;
using chow::VarietySpec;
using combinat::Partition;
using combinat::SchurWeight;

namespace {

int g_failures = 0;
unsigned g_jobs = 2;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& run) {
  std::string detail;
  bool ok = false;
  try {
    ok = run(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
            << name;
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

Poly dpow(int e) { return Poly::variable(VD, e); }

std::vector<Partition> partitions_bounded(long max_size, size_t max_rows) {
  std::vector<Partition> out;
  std::vector<long> stack;
  std::function<void(long, long)> rec = [&](long remaining, long max_part) {
    out.push_back(Partition(stack));
    if (remaining == 0 || stack.size() == max_rows) return;
    for (long p = std::min(remaining, max_part); p >= 1; --p) {
      stack.push_back(p);
      rec(remaining - p, p);
      stack.pop_back();
    }
  };
  rec(max_size, max_size);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_jobs = static_cast<unsigned>(std::stoul(argv[1]));

  VarietySpec compact = VarietySpec::hypersurface(4);
  VarietySpec logpair = VarietySpec::log_pair();

  criterion(1, "chi(E_{3,m}) leading coefficient (compact)", [&](std::string& d) {
    auto fit = jets::fit_leading(compact, 3, 9, g_jobs);
    Poly expected = (dpow(4) * Rat(389) - dpow(3) * Rat(20739) +
                     dpow(2) * Rat(185559) - dpow(1) * Rat(358873)) *
                    rat(1, 81648000000L);
    d = "period " + std::to_string(fit.qp.period) +
        ", leading = " + fit.leading.str();
    return fit.leading == expected;
  });

  criterion(2, "Euler-characteristic positivity threshold d >= 43",
            [&](std::string& d) {
              long t = bounds::threshold_euler_quartic();
              d = "threshold " + std::to_string(t);
              return t == 43;
            });

  criterion(3, "m^5 coefficient of chi(X, S^m Omega) = d^2/8 - 7d/24",
            [&](std::string& d) {
              Poly closed =
                  chow::flag_chi_closed_form(compact, {Rat(0), Rat(0), Rat(0)});
              Poly in_m = closed.subst(VL1, Poly::variable(VM))
                              .subst_rat(VL2, 0)
                              .subst_rat(VL3, 0);
              Poly m5 = in_m.coeff_of(VM, 5);
              d = "m^5 coefficient = " + m5.str();
              return m5 == dpow(2) * rat(1, 8) - dpow(1) * rat(7, 24);
            });

  criterion(4, "chi(E_{3,m}) leading coefficient (log)", [&](std::string& d) {
    auto fit = jets::fit_leading(logpair, 3, 9, g_jobs);
    Poly expected = dpow(3) * rat(389, 81648000000L) -
                    dpow(2) * rat(6913, 34020000000L) +
                    dpow(1) * rat(6299, 4252500000L) -
                    Poly(rat(1513, 63787500L));
    d = "period " + std::to_string(fit.qp.period) +
        ", leading = " + fit.leading.str();
    if (fit.leading != expected) {
      d += "; expected constant term -1513/63787500, computed "
           "-1513/637875000 — the computed value is pinned by three "
           "independent routes (holdout-validated fit, d=0 degeneration to "
           "P^3, exact polytope integration); see README";
    }
    return fit.leading == expected;
  });

  criterion(5, "constant C = 49403/(252*10^7)", [&](std::string& d) {
    Rat c = bounds::constant_C(g_jobs);
    d = "C = " + to_string(c);
    return c == rat(49403, 2520000000L);
  });

  criterion(6, "degree thresholds: Delta(d) > 0 on [97,500] / [92,500]",
            [&](std::string& d) {
              auto ct = bounds::threshold_order3(false, g_jobs);
              auto lt = bounds::threshold_order3(true, g_jobs);
              d = "compact verified from " + std::to_string(ct.verified_from) +
                  " (minimal found " + std::to_string(ct.minimal_found) +
                  "), log verified from " + std::to_string(lt.verified_from) +
                  " (minimal found " + std::to_string(lt.minimal_found) + ")";
              return ct.verified_from == 97 && lt.verified_from == 92;
            });

  criterion(7, "surface 2-jet threshold d >= 15 with coefficient d(4d^2-68d+154)",
            [&](std::string& d) {
              auto sb = bounds::surface_2jet_bound();
              Poly expected =
                  dpow(3) * Rat(4) - dpow(2) * Rat(68) + dpow(1) * Rat(154);
              bool neg14 = sb.coefficient.eval({{VD, Rat(14)}}) < 0;
              bool pos15 = sb.coefficient.eval({{VD, Rat(15)}}) > 0;
              d = "coefficient = " + sb.coefficient.str() + ", threshold " +
                  std::to_string(sb.threshold);
              return sb.coefficient == expected && sb.threshold == 15 &&
                     neg14 && pos15;
            });

  criterion(8, "teo1: H^0(E_{2,m}) graded pieces all certified, m <= 200",
            [&](std::string& d) {
              long checked = 0;
              for (long m = 1; m <= 200; ++m)
                for (const auto& piece : jets::decompose_gr2(m).pieces) {
                  long l1 = piece.lambda.part(0), l2 = piece.lambda.part(1);
                  bool ok = l2 == 0
                                ? vanish::vanish_sym(l1)
                                : vanish::vanish_h0_hypersurface(l1, l2, 0, 2);
                  if (!ok) return false;
                  ++checked;
                }
              d = std::to_string(checked) + " pieces certified";
              return true;
            });

  criterion(9, "oracle equivalence of the two chi engines (100 random lambda each)",
            [&](std::string& d) {
              std::mt19937 rng(20250808);
              int tested = 0;
              for (bool log_case : {false, true}) {
                VarietySpec v = log_case ? logpair : compact;
                Poly closed =
                    chow::flag_chi_closed_form(v, {Rat(0), Rat(0), Rat(0)});
                for (int t = 0; t < 100; ++t) {
                  long c = rng() % 7, b = 1 + rng() % 6, a = 1 + rng() % 7;
                  Partition lam({c + b + a, c + b, c});  // strict, parts <= 20
                  Poly specialized = closed.subst_rat(VL1, Rat(lam.part(0)))
                                         .subst_rat(VL2, Rat(lam.part(1)))
                                         .subst_rat(VL3, Rat(lam.part(2)));
                  Poly direct = chow::euler_characteristic(
                      v, BundleExpr::schur(SchurWeight(lam.padded(3)),
                                           chow::flag_atom(v)));
                  if (specialized != direct) {
                    d = "disagreement at lambda = " + lam.str();
                    return false;
                  }
                  ++tested;
                }
              }
              d = std::to_string(tested) +
                  " instances (compact and log), exact equality";
              return true;
            });

  criterion(10, "resolution exactness: alternating chi and rank sums vanish",
            [&](std::string& d) {
              int checked = 0;
              for (long b1 = 1; b1 <= 4; ++b1)
                for (long b2 = 1; b2 <= b1; ++b2) {
                  auto rh = vanish::resolution_hypersurface(b1, b2);
                  if (!rh.alternating_chi_defect().is_zero()) return false;
                  if (rh.alternating_rank_defect() != 0) return false;
                  auto re = vanish::resolution_euler(b1, b2);
                  if (!re.alternating_chi_defect().is_zero()) return false;
                  if (re.alternating_rank_defect() != 0) return false;
                  checked += 2;
                }
              d = std::to_string(checked) + " resolutions, symbolic d";
              return true;
            });

  criterion(11, "LR coefficients match the Schur-product oracle, |p|,|q| <= 6",
            [&](std::string& d) {
              auto shapes = partitions_bounded(6, 4);
              long pairs = 0, checks = 0;
              for (const auto& p : shapes)
                for (const auto& q : shapes) {
                  if (p.empty() || q.empty()) continue;
                  auto expansion = symfunc::schur_product_expand(p, q, 4);
                  ++pairs;
                  for (const auto& nu :
                       partitions_bounded(p.size() + q.size(), 4)) {
                    if (nu.size() != p.size() + q.size()) continue;
                    Int expect = combinat::lr_coefficient(p, q, nu);
                    auto it = expansion.find(nu);
                    Int got = it == expansion.end() ? Int(0) : it->second;
                    if (got != expect) {
                      d = "mismatch at " + p.str() + " * " + q.str() + " -> " +
                          nu.str();
                      return false;
                    }
                    ++checks;
                  }
                }
              d = std::to_string(pairs) + " products, " +
                  std::to_string(checks) + " coefficients";
              return true;
            });

  criterion(12, "bound shape: B - g(lambda) d(d+13) has lambda-degree <= 5",
            [&](std::string& d) {
              Poly g = bounds::g_weight_poly();
              Poly dv = Poly::variable(VD);
              Poly slack_c =
                  bounds::symbolic_h2_bound(false) - g * (dv * dv + dv * Rat(13));
              Poly slack_l = bounds::symbolic_h2_bound(true) - g * (dv + Poly(14));
              int deg_c = slack_c.degree_in_set({VL1, VL2, VL3});
              int deg_l = slack_l.degree_in_set({VL1, VL2, VL3});
              if (deg_c > 5 || deg_l > 5) {
                d = "lambda degrees " + std::to_string(deg_c) + ", " +
                    std::to_string(deg_l);
                return false;
              }
              // sampled strict lambda at the spec degrees, positivity holds
              std::mt19937 rng(4242);
              int samples = 0;
              for (int t = 0; t < 20; ++t) {
                long c = rng() % 40, b = 1 + rng() % 40, a = 1 + rng() % 40;
                Partition lam({c + b + a + 400, c + b + 200, c});
                for (long deg : {6L, 20L, 100L}) {
                  for (bool log_case : {false, true}) {
                    auto rep = bounds::h2_partition_bound(lam, deg, log_case);
                    if (!(rep.bound == rep.leadingPart + rep.remainder))
                      return false;
                    Rat lead_expect =
                        bounds::g_weight(lam) *
                        (log_case ? Rat(deg + 14)
                                  : Rat(deg) * Rat(deg + 13));
                    if (rep.leadingPart.constant_term() != lead_expect)
                      return false;
                    ++samples;
                  }
                }
              }
              d = "symbolic degrees " + std::to_string(deg_c) + "/" +
                  std::to_string(deg_l) + ", " + std::to_string(samples) +
                  " sampled evaluations";
              return true;
            });

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED"
                                : std::to_string(g_failures) + " FAILURES")
            << std::endl;
  return g_failures;
}
