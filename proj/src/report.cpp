#include "jetdiff/report.hpp"

#include <algorithm>
#include <map>

#include "jetdiff/bounds.hpp"
#include "jetdiff/jets.hpp"
#include "jetdiff/vanish.hpp"

namespace jetdiff::report {

using chow::VarietySpec;

const char* status_name(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::VerifiedSufficiency: return "verified-sufficiency";
    case Status::Finding: return "finding";
  }
  return "?";
}

namespace {

Poly dpow(int e) { return Poly::variable(VD, e); }

Poly expected_compact_leading() {
  return (dpow(4) * Rat(389) - dpow(3) * Rat(20739) + dpow(2) * Rat(185559) -
          dpow(1) * Rat(358873)) *
         rat(1, 81648000000L);
}

Poly expected_log_leading() {
  return dpow(3) * rat(389, 81648000000L) - dpow(2) * rat(6913, 34020000000L) +
         dpow(1) * rat(6299, 4252500000L) - Poly(rat(1513, 63787500L));
}

Poly expected_sym_m5() { return dpow(2) * rat(1, 8) - dpow(1) * rat(7, 24); }

Poly expected_surface_coeff() {
  return dpow(3) * Rat(4) - dpow(2) * Rat(68) + dpow(1) * Rat(154);
}

ReportEntry match_entry(const std::string& id, const Poly& expected,
                        const Poly& computed) {
  return {id, expected.str(), computed.str(),
          expected == computed ? Status::Match : Status::Mismatch};
}

ReportEntry match_long(const std::string& id, long expected, long computed) {
  return {id, std::to_string(expected), std::to_string(computed),
          expected == computed ? Status::Match : Status::Mismatch};
}

const std::map<std::string, std::vector<std::string>>& claim_aliases() {
  static const std::map<std::string, std::vector<std::string>> aliases = {
      {"quartic",
       {"gr3-chi-leading-compact", "euler-positivity-threshold"}},
      {"thresholds",
       {"euler-positivity-threshold", "compact-threshold-d97",
        "log-threshold-d92", "surface-2jet-threshold", "compact-minimal-d",
        "log-minimal-d"}},
  };
  return aliases;
}

}  // namespace

std::vector<std::string> known_claim_ids() {
  return {"gr3-chi-leading-compact",
          "gr3-chi-leading-log",
          "euler-positivity-threshold",
          "sym-h2-m5-coefficient",
          "constant-C",
          "compact-threshold-d97",
          "log-threshold-d92",
          "teo1-h0-vanishing",
          "surface-2jet-threshold",
          "compact-minimal-d",
          "log-minimal-d",
          "gr3-period-compact",
          "gr3-period-log",
          "sum-g-period"};
}

bool claims_filter_matches(const std::vector<std::string>& claims,
                           const std::string& id) {
  if (claims.empty()) return true;
  for (const auto& token : claims) {
    if (token == id) return true;
    auto it = claim_aliases().find(token);
    if (it != claim_aliases().end() &&
        std::find(it->second.begin(), it->second.end(), id) !=
            it->second.end())
      return true;
    if (id.find(token) != std::string::npos) return true;
  }
  return false;
}

std::vector<ReportEntry> build_report(const std::vector<std::string>& claims,
                                      unsigned jobs) {
  std::vector<ReportEntry> out;
  auto wanted = [&](const std::string& id) {
    return claims_filter_matches(claims, id);
  };

  bool need_compact_fit = wanted("gr3-chi-leading-compact") ||
                          wanted("gr3-period-compact") ||
                          wanted("compact-threshold-d97") ||
                          wanted("compact-minimal-d");
  bool need_log_fit = wanted("gr3-chi-leading-log") ||
                      wanted("gr3-period-log") || wanted("log-threshold-d92") ||
                      wanted("log-minimal-d");

  std::optional<jets::FitResult> compact_fit, log_fit;
  if (need_compact_fit)
    compact_fit = jets::fit_leading(VarietySpec::hypersurface(4), 3, 9, jobs);
  if (need_log_fit)
    log_fit = jets::fit_leading(VarietySpec::log_pair(), 3, 9, jobs);

  if (wanted("gr3-chi-leading-compact"))
    out.push_back(match_entry("gr3-chi-leading-compact",
                              expected_compact_leading(),
                              compact_fit->leading));
  if (wanted("gr3-chi-leading-log"))
    out.push_back(
        match_entry("gr3-chi-leading-log", expected_log_leading(),
                    log_fit->leading));
  if (wanted("euler-positivity-threshold"))
    out.push_back(match_long("euler-positivity-threshold", 43,
                             bounds::threshold_euler_quartic()));
  if (wanted("sym-h2-m5-coefficient")) {
    Poly chi_sym = chow::flag_chi_closed_form(VarietySpec::hypersurface(4),
                                              {Rat(0), Rat(0), Rat(0)});
    Poly in_m = chi_sym.subst(VL1, Poly::variable(VM))
                    .subst_rat(VL2, 0)
                    .subst_rat(VL3, 0);
    out.push_back(match_entry("sym-h2-m5-coefficient", expected_sym_m5(),
                              in_m.coeff_of(VM, 5)));
  }
  if (wanted("constant-C")) {
    Rat c = bounds::constant_C(jobs);
    Poly computed(c), expected(rat(49403, 2520000000L));
    out.push_back(match_entry("constant-C", expected, computed));
  }

  std::optional<bounds::ThresholdResult> compact_thr, log_thr;
  auto run_threshold = [&](bool log_case) -> std::optional<bounds::ThresholdResult> {
    try {
      return bounds::threshold_order3(log_case, jobs);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  };
  if (wanted("compact-threshold-d97") || wanted("compact-minimal-d"))
    compact_thr = run_threshold(false);
  if (wanted("log-threshold-d92") || wanted("log-minimal-d"))
    log_thr = run_threshold(true);

  auto threshold_entry = [&](const std::string& id, long claimed_from,
                             const std::optional<bounds::ThresholdResult>& r) {
    if (r)
      out.push_back({id, "Delta(d)>0 for d>=" + std::to_string(claimed_from),
                     "verified on [" + std::to_string(claimed_from) +
                         ",500], leading coefficient positive",
                     Status::VerifiedSufficiency});
    else
      out.push_back({id, "Delta(d)>0 for d>=" + std::to_string(claimed_from),
                     "positivity check failed", Status::Mismatch});
  };
  if (wanted("compact-threshold-d97"))
    threshold_entry("compact-threshold-d97", 97, compact_thr);
  if (wanted("log-threshold-d92"))
    threshold_entry("log-threshold-d92", 92, log_thr);

  if (wanted("teo1-h0-vanishing")) {
    bool all_certified = true;
    for (long m = 1; m <= 200 && all_certified; ++m)
      for (const auto& piece : jets::decompose_gr2(m).pieces) {
        long l1 = piece.lambda.part(0), l2 = piece.lambda.part(1);
        bool certified = (l2 == 0) ? vanish::vanish_sym(l1)
                                   : vanish::vanish_h0_hypersurface(l1, l2, 0, 2);
        if (!certified) {
          all_certified = false;
          break;
        }
      }
    out.push_back({"teo1-h0-vanishing",
                   "every graded piece of E_{2,m}, m<=200, certified",
                   all_certified ? "all pieces certified" : "gap found",
                   all_certified ? Status::VerifiedSufficiency
                                 : Status::Mismatch});
  }
  if (wanted("surface-2jet-threshold")) {
    auto sb = bounds::surface_2jet_bound();
    bool coeff_ok = sb.coefficient == expected_surface_coeff();
    bool thr_ok = sb.threshold == 15;
    out.push_back({"surface-2jet-threshold",
                   expected_surface_coeff().str() + ", threshold 15",
                   sb.coefficient.str() + ", threshold " +
                       std::to_string(sb.threshold),
                   coeff_ok && thr_ok ? Status::Match : Status::Mismatch});
  }

  if (wanted("compact-minimal-d") && compact_thr)
    out.push_back({"compact-minimal-d", "",
                   std::to_string(compact_thr->minimal_found),
                   Status::Finding});
  if (wanted("log-minimal-d") && log_thr)
    out.push_back({"log-minimal-d", "",
                   std::to_string(log_thr->minimal_found), Status::Finding});
  if (wanted("gr3-period-compact") && compact_fit)
    out.push_back({"gr3-period-compact", "",
                   std::to_string(compact_fit->qp.period), Status::Finding});
  if (wanted("gr3-period-log") && log_fit)
    out.push_back({"gr3-period-log", "",
                   std::to_string(log_fit->qp.period), Status::Finding});
  if (wanted("sum-g-period")) {
    auto fit = jets::fit_quasi_polynomial(
        [](long m) { return Poly(bounds::sum_g(m)); }, 9, jobs);
    out.push_back({"sum-g-period", "", std::to_string(fit.qp.period),
                   Status::Finding});
  }
  return out;
}

}  // namespace jetdiff::report
