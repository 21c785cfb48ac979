#pragma once

// Jutila's circle method at desk scale.
//
// A family Phi of moduli together with a half-width delta defines the step
// function
//
//   I~(x) = 1/(2 delta L) * #{ (q, d) : q in Phi, 0 <= d < q, (d, q) = 1,
//                               |x - d/q| <= delta },   L = sum phi(q),
//
// which approximates the indicator of [0, 1].  This module evaluates I~,
// its exact L^2 distance from the indicator, and the resulting
// approximation S~(N) of the smoothed Rankin-Selberg sum S(N).

#include <optional>
#include <vector>

#include "subconvex/characters.hpp"
#include "subconvex/forms.hpp"

namespace subconvex {

struct ProductStructure {
  std::vector<i64> phi1;
  std::vector<i64> phi3;
  std::vector<i64> phi4;
  double q1_center = 0.0;
  double q3_center = 0.0;
  double q4_center = 0.0;
};

struct ModuliFamily {
  i64 p_avoid = 0;
  std::vector<i64> phi;  // sorted, distinct
  double delta = 0.0;
  i64 L = 0;             // sum of phi(q)
  double q_nominal = 0.0;  // the Q of the bounds
  std::optional<ProductStructure> product;

  std::size_t arc_count() const { return static_cast<std::size_t>(L); }
};

// Every q in [q_min, q_max] coprime to p.  Q is taken as q_min.
ModuliFamily build_family(i64 p, i64 q_min, i64 q_max, double delta);

// A family from an explicit list of moduli (used for the q = 1 and other
// hand-built cases).  Q is taken as the largest modulus.
ModuliFamily family_from_moduli(std::vector<i64> moduli, double delta,
                                i64 p_avoid = 0);

// Primes in dyadic windows around Q1 = p^{1/5 + eta/10} and
// Q3 = Q4 = p^{2/5 + eta/5}; Phi is the product set Phi1 Phi3 Phi4.
ModuliFamily build_product_family(i64 p, double eta, double delta);

double i_tilde(const ModuliFamily& family, double x);

// Exact integral of |I_[0,1] - I~|^2 over R by a sweep over arc endpoints.
double l2_error(const ModuliFamily& family);

// Integral of I~ over R by the same sweep; equals 1 up to rounding.
double i_tilde_mass(const ModuliFamily& family);

// Q^2 / (delta L^2)
double l2_bound_scale(const ModuliFamily& family);

struct CircleOptions {
  int nodes = 16;        // Gauss-Legendre points per arc
  unsigned threads = 0;  // 0 = hardware concurrency
};

// S(N) = sum lambda_f(n) lambda_g(n) chi(n) h(n/N), h = bump_12.
cplx s_direct(const CuspForm& f, const CuspForm& g,
              const DirichletCharacter& chi, i64 N);

// (1/(2 delta L)) sum_q sum*_a int_{-delta}^{delta} A(a/q+t) B(a/q+t) dt
// with A(x) = sum lambda_f(n) e(xn) h(n/N) and
// B(x) = sum lambda_g(m) chi(m) e(-xm) h*(m/N), h* = plateau_half_52.
cplx s_tilde(const CuspForm& f, const CuspForm& g,
             const DirichletCharacter& chi, i64 N, const ModuliFamily& family,
             const CircleOptions& opts = {});

// N sqrt(Q^2 / (delta L^2)), the scale of |S(N) - S~(N)|.
double s_tilde_error_scale(i64 N, const ModuliFamily& family);

}  // namespace subconvex
