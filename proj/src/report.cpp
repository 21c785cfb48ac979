#include "subconvex/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "subconvex/errors.hpp"

namespace subconvex {

VerificationReport make_identity_report(std::string suite, std::string name,
                                        Params params, cplx lhs, cplx rhs,
                                        double tolerance, bool hard) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.identity_name = std::move(name);
  r.parameters = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  r.abs_error = std::abs(lhs - rhs);
  const double size = std::max(std::abs(lhs), std::abs(rhs));
  r.rel_error = size > 0.0 ? r.abs_error / size : 0.0;
  r.tolerance = tolerance;
  r.hard = hard;
  r.kind = CheckKind::identity;
  const bool near_zero = std::abs(lhs) + std::abs(rhs) < 1.0;
  r.passed = (near_zero ? r.abs_error : r.rel_error) <= tolerance;
  if (std::isnan(r.abs_error)) r.passed = false;
  return r;
}

VerificationReport make_bound_report(std::string suite, std::string name,
                                     Params params, double measured,
                                     double scale, double constant, bool hard) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.identity_name = std::move(name);
  r.parameters = std::move(params);
  r.lhs = {measured, 0.0};
  r.rhs = {scale, 0.0};
  r.abs_error = std::fabs(measured);
  r.rel_error = scale != 0.0 ? std::fabs(measured) / std::fabs(scale)
                             : std::numeric_limits<double>::infinity();
  r.tolerance = constant;
  r.hard = hard;
  r.kind = CheckKind::bound;
  r.passed = r.rel_error <= constant;
  return r;
}

VerificationReport make_error_report(std::string suite, std::string name,
                                     Params params, const std::string& what,
                                     bool hard) {
  VerificationReport r;
  r.suite = std::move(suite);
  r.identity_name = std::move(name);
  r.parameters = std::move(params);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  r.lhs = {nan, nan};
  r.rhs = {nan, nan};
  r.abs_error = nan;
  r.rel_error = nan;
  r.hard = hard;
  r.passed = false;
  r.note = what;
  return r;
}

std::string format_real(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_complex(cplx z) {
  char buf[96];
  // %+ puts an explicit sign on the imaginary part.
  std::snprintf(buf, sizeof buf, "%.17g%+.17gj", z.real(), z.imag());
  return buf;
}

std::string format_params(const Params& params) {
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ';';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out << ',';
    out << csv_field(fields[i]);
  }
  out << '\n';
}

void write_reports_csv(std::ostream& out,
                       const std::vector<VerificationReport>& reports) {
  write_csv_row(out, {"suite", "identity", "parameters", "lhs", "rhs",
                      "abs_error", "rel_error", "tolerance", "kind", "hard",
                      "passed", "note"});
  for (const auto& r : reports) {
    write_csv_row(out, {r.suite, r.identity_name, format_params(r.parameters),
                        format_complex(r.lhs), format_complex(r.rhs),
                        format_real(r.abs_error), format_real(r.rel_error),
                        format_real(r.tolerance),
                        r.kind == CheckKind::identity ? "identity" : "bound",
                        r.hard ? "hard" : "soft", r.passed ? "true" : "false",
                        r.note});
  }
}

void write_reports_csv(const std::string& path,
                       const std::vector<VerificationReport>& reports) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot open '" + path + "' for writing");
  write_reports_csv(out, reports);
  if (!out) throw ResourceError("write to '" + path + "' failed");
}

}  // namespace subconvex
