// report.hpp — reproduction report: recomputes every headline constant and
// threshold and compares it with the expected value.
#pragma once

#include <string>
#include <vector>

#include "jetdiff/poly.hpp"

namespace jetdiff::report {

enum class Status { Match, Mismatch, VerifiedSufficiency, Finding };

const char* status_name(Status s);

struct ReportEntry {
  std::string claim_id;
  std::string expected;  // empty for findings
  std::string computed;
  Status status;
};

// Runs the selected claims (empty = all). Claim ids, plus the aliases
// "quartic" and "thresholds", are documented in the CLI help.
std::vector<ReportEntry> build_report(const std::vector<std::string>& claims,
                                      unsigned jobs);

bool claims_filter_matches(const std::vector<std::string>& claims,
                           const std::string& id);

std::vector<std::string> known_claim_ids();

}  // namespace jetdiff::report
