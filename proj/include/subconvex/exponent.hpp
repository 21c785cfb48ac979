#pragma once

// Exponent bookkeeping for the final optimisation, in exact rationals.

#include <string>

#include <boost/rational.hpp>

namespace subconvex {

using Rational = boost::rational<long long>;

enum class ExponentMode { paper, balanced, h_theta };

std::string to_string(ExponentMode m);
ExponentMode exponent_mode_from_string(const std::string& name);

// "7/64", "0", "0.125" or "1e-2" style input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);
double to_double(const Rational& r);

struct ExponentSolution {
  ExponentMode mode = ExponentMode::paper;
  Rational theta;
  Rational eta;
  Rational q1_exp;
  Rational q3_exp;
  Rational q4_exp;
  Rational final_exponent;
  // Largest admissible Q1 exponent 2/5 + eta/5 - (12/25) theta (eta + 2).
  Rational q1_ceiling;
  bool q1_feasible = true;
};

// Throws DomainError unless 0 <= theta < 1/5.
ExponentSolution exponent_calculator(const Rational& theta, ExponentMode mode);

// Human-readable account of how the three modes disagree.
std::string exponent_discrepancy_note();

}  // namespace subconvex
