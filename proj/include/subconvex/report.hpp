#pragma once

// Verification records and their CSV serialisation.

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "subconvex/arith.hpp"

namespace subconvex {

using Params = std::vector<std::pair<std::string, std::string>>;

// identity: both sides should agree to `tolerance` (relative, or absolute
//           when |lhs| + |rhs| < 1).
// bound:    lhs is a measured quantity, rhs the reference scale;
//           rel_error holds lhs / rhs and passes when it is <= tolerance.
enum class CheckKind { identity, bound };

struct VerificationReport {
  std::string suite;
  std::string identity_name;
  Params parameters;
  cplx lhs{0.0, 0.0};
  cplx rhs{0.0, 0.0};
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  bool hard = true;  // soft rows are reported but never fail the run
  CheckKind kind = CheckKind::identity;
  double wall_time = 0.0;  // seconds; not written to CSV
  std::string note;
};

VerificationReport make_identity_report(std::string suite, std::string name,
                                        Params params, cplx lhs, cplx rhs,
                                        double tolerance, bool hard = true);

VerificationReport make_bound_report(std::string suite, std::string name,
                                     Params params, double measured,
                                     double scale, double constant,
                                     bool hard = false);

// A check that could not run because a module threw.
VerificationReport make_error_report(std::string suite, std::string name,
                                     Params params, const std::string& what,
                                     bool hard = true);

std::string format_real(double x);      // %.17g
std::string format_complex(cplx z);     // re+imj / re-imj
std::string format_params(const Params& params);  // k=v;k=v

// RFC 4180 quoting when the field holds a comma, quote or newline.
std::string csv_field(const std::string& s);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

void write_reports_csv(std::ostream& out,
                       const std::vector<VerificationReport>& reports);
void write_reports_csv(const std::string& path,
                       const std::vector<VerificationReport>& reports);

}  // namespace subconvex
