#pragma once

// The verification suite: every identity and bound the library can check,
// run in a fixed order and collected as VerificationReport rows.

#include <iosfwd>
#include <string>
#include <vector>

#include "subconvex/config.hpp"
#include "subconvex/report.hpp"

namespace subconvex {

// In execution order.
const std::vector<std::string>& suite_names();

struct SuiteResult {
  std::vector<VerificationReport> reports;
  std::vector<std::string> notes;
  int hard_failures = 0;
  int exit_status = 0;  // nonzero iff a hard row failed
};

// cfg.only may hold a comma-separated subset of suite_names(); unknown
// names throw DomainError.  Progress lines go to `log` when given.  A
// module exception becomes a failed row; the run continues.  When cfg.out
// is set the CSV is written there.
SuiteResult run_suite(const Config& cfg, std::ostream* log = nullptr);

}  // namespace subconvex
