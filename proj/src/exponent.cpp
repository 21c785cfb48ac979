#include "subconvex/exponent.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "subconvex/errors.hpp"

namespace subconvex {

namespace {

Rational pow10(int e) {
  long long v = 1;
  for (int i = 0; i < e; ++i) v *= 10;
  return Rational(v);
}

// max(9/10 + 9 eta/20, 1 - eta/2)
Rational sfe_exponent(const Rational& eta) {
  const Rational a = Rational(9, 10) + Rational(9, 20) * eta;
  const Rational b = Rational(1) - eta / 2;
  return a > b ? a : b;
}

}  // namespace

std::string to_string(ExponentMode m) {
  switch (m) {
    case ExponentMode::paper: return "paper";
    case ExponentMode::balanced: return "balanced";
    case ExponentMode::h_theta: return "h_theta";
  }
  return "unknown";
}

ExponentMode exponent_mode_from_string(const std::string& name) {
  if (name == "paper") return ExponentMode::paper;
  if (name == "balanced") return ExponentMode::balanced;
  if (name == "h_theta") return ExponentMode::h_theta;
  throw DomainError("unknown exponent mode '" + name +
                    "' (paper|balanced|h_theta)");
}

Rational parse_rational(const std::string& text) {
  const auto bad = [&] {
    return DomainError("cannot parse '" + text + "' as a rational");
  };
  if (text.empty()) throw bad();
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    std::size_t used_n = 0, used_d = 0;
    long long n = 0, d = 0;
    try {
      n = std::stoll(num, &used_n);
      d = std::stoll(den, &used_d);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used_n != num.size() || used_d != den.size() || d == 0) throw bad();
    return Rational(n, d);
  }
  // Decimal with optional exponent, read digit by digit so that 0.1 is 1/10.
  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') negative = text[i++] == '-';
  long long mantissa = 0;
  int scale = 0;
  bool digits = false;
  bool after_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (mantissa > 100000000000000LL) throw bad();
      mantissa = mantissa * 10 + (c - '0');
      if (after_point) ++scale;
      digits = true;
    } else if (c == '.' && !after_point) {
      after_point = true;
    } else {
      break;
    }
  }
  if (!digits) throw bad();
  int exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw bad();
    const std::string rest = text.substr(i + 1);
    std::size_t used = 0;
    try {
      exponent = std::stoi(rest, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != rest.size() || exponent > 15 || exponent < -15) throw bad();
  }
  Rational r(negative ? -mantissa : mantissa);
  const int shift = exponent - scale;
  if (shift >= 0) {
    r *= pow10(shift);
  } else {
    r /= pow10(-shift);
  }
  return r;
}

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << r.numerator();
  if (r.denominator() != 1) out << '/' << r.denominator();
  return out.str();
}

double to_double(const Rational& r) {
  return boost::rational_cast<double>(r);
}

ExponentSolution exponent_calculator(const Rational& theta, ExponentMode mode) {
  if (theta < Rational(0) || theta >= Rational(1, 5)) {
    throw DomainError("theta = " + format_rational(theta) +
                      " lies outside [0, 1/5)");
  }
  ExponentSolution s;
  s.mode = mode;
  s.theta = theta;
  switch (mode) {
    case ExponentMode::paper:
    case ExponentMode::h_theta:
      s.eta = Rational(1, 14);
      break;
    case ExponentMode::balanced:
      // 9/10 + 9 eta/20 = 1 - eta/2  <=>  19 eta / 20 = 1/10
      s.eta = Rational(1, 10) / Rational(19, 20);
      break;
  }
  s.q1_exp = Rational(1, 5) + s.eta / 10;
  s.q3_exp = Rational(2, 5) + s.eta / 5;
  s.q4_exp = s.q3_exp;
  s.q1_ceiling =
      Rational(2, 5) + s.eta / 5 - Rational(12, 25) * theta * (s.eta + 2);
  s.q1_feasible = s.q1_exp <= s.q1_ceiling;
  if (mode == ExponentMode::h_theta) {
    s.final_exponent = Rational(19, 20) + Rational(202, 100) * theta;
  } else {
    s.final_exponent = sfe_exponent(s.eta);
  }
  return s;
}

std::string exponent_discrepancy_note() {
  return "exponent modes disagree: the stated optimum eta = 1/14 gives "
         "max(9/10 + 9 eta/20, 1 - eta/2) = 27/28, but equating the two terms "
         "gives eta = 2/19 and exponent 18/19; the H_theta formula "
         "19/20 + (202/100) theta equals 19/20 at theta = 0, below 27/28. "
         "All three are reported as computed, none is adjusted.";
}

}  // namespace subconvex
