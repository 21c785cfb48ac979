#pragma once

// Numerical kernels: integer-order Bessel J, adaptive Gauss-Kronrod
// quadrature, Gauss-Legendre rules and the compactly supported windows.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "subconvex/arith.hpp"
#include "subconvex/errors.hpp"

namespace subconvex {

// ---------------------------------------------------------------------------
// Bessel functions of the first kind

inline constexpr int kMaxBesselOrder = 30;

// Ascending series below the switch point, Hankel's expansion above it.
double bessel_j(int order, double x);

// max(20, 2 * order)
double bessel_switch_point(int order);

namespace detail {
// The two branches, exposed for the seam tests.  The series runs in long
// double and falls back to __float128 when cancellation would eat more than
// five digits.
double bessel_j_series(int order, double x);
double bessel_j_hankel(int order, double x);
}  // namespace detail

// ---------------------------------------------------------------------------
// Quadrature

inline constexpr double kDefaultQuadTol = 1e-10;
inline constexpr int kDefaultMaxSubdivisions = 20000;

namespace detail {
// 21-point Kronrod extension of the 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kKronrodNodes = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kKronrodWeights = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077208461373316, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
// Gauss weights for kKronrodNodes[1], [3], [5], [7], [9].
inline constexpr std::array<double, 5> kGaussWeights = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

struct Panel {
  double a;
  double b;
  cplx value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel kronrod_panel(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  cplx kronrod = kKronrodWeights[10] * cplx(f(center));
  cplx gauss{0.0, 0.0};
  for (std::size_t i = 0; i < 10; ++i) {
    const double dx = half * kKronrodNodes[i];
    const cplx sum = cplx(f(center - dx)) + cplx(f(center + dx));
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}
}  // namespace detail

struct QuadResult {
  cplx value;
  double error_estimate;
  int panels;
};

// Globally adaptive bisection until the summed error estimate drops below
// tol (absolute).  f may return double or complex<double>.
template <class F>
QuadResult integrate_adaptive(F&& f, double a, double b,
                              double tol = kDefaultQuadTol,
                              int max_subdivisions = kDefaultMaxSubdivisions) {
  if (!(a < b)) {
    throw DomainError("integrate: empty or reversed interval");
  }
  std::priority_queue<detail::Panel> heap;
  heap.push(detail::kronrod_panel(f, a, b));
  double total_error = heap.top().error;
  int subdivisions = 0;
  while (total_error > tol) {
    if (subdivisions >= max_subdivisions) {
      throw NonConvergence("integrate: no convergence on [" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           "] after " + std::to_string(subdivisions) +
                           " subdivisions (error estimate " +
                           std::to_string(total_error) + ")");
    }
    detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    detail::Panel left = detail::kronrod_panel(f, worst.a, mid);
    detail::Panel right = detail::kronrod_panel(f, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
    // Running sums drift; refresh occasionally.
    if (subdivisions % 64 == 0) {
      auto copy = heap;
      total_error = 0.0;
      while (!copy.empty()) {
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }
  // Sum left to right so the result does not depend on heap layout.
  std::vector<detail::Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const detail::Panel& x, const detail::Panel& y) {
              return x.a < y.a;
            });
  QuadResult out{{0.0, 0.0}, 0.0, static_cast<int>(panels.size())};
  for (const auto& p : panels) {
    out.value += p.value;
    out.error_estimate += p.error;
  }
  return out;
}

template <class F>
cplx integrate(F&& f, double a, double b, double tol = kDefaultQuadTol) {
  return integrate_adaptive(std::forward<F>(f), a, b, tol).value;
}

// Type-erased entry point for bindings.
cplx integrate_fn(const std::function<cplx(double)>& f, double a, double b,
                  double tol = kDefaultQuadTol);

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n);

// ---------------------------------------------------------------------------
// Windows

enum class WindowKind {
  bump_12,          // exp(1 - 1/(1 - (2x-3)^2)) on (1, 2)
  plateau_half_52,  // 1 on [1, 2], support [1/2, 5/2]
  bump_unit,        // 1 on [1, 2], support [1/2, 3]
};

// s(t) = B(t) / (B(t) + B(1 - t)) with B(t) = exp(-1/t) for t > 0.
double smoothstep(double t);

class SmoothWindow {
 public:
  explicit SmoothWindow(WindowKind kind);

  WindowKind kind() const { return kind_; }
  double support_lo() const { return lo_; }
  double support_hi() const { return hi_; }

  double operator()(double x) const;

 private:
  WindowKind kind_;
  double lo_;
  double hi_;
};

SmoothWindow window(WindowKind kind);

std::string to_string(WindowKind kind);
WindowKind window_kind_from_string(const std::string& name);

}  // namespace subconvex
