#include "subconvex/special.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

namespace subconvex {

namespace {

void check_bessel_args(int order, double x) {
  if (order < 0 || order > kMaxBesselOrder) {
    throw DomainError("bessel_j: order " + std::to_string(order) +
                      " outside [0, " + std::to_string(kMaxBesselOrder) + "]");
  }
  if (!(x >= 0.0)) throw DomainError("bessel_j: negative argument");
}

template <class Real>
struct SeriesResult {
  Real sum;
  Real max_term;
};

template <class Real>
Real abs_real(Real v) {
  return v < 0 ? -v : v;
}

// sum_k (-1)^k (x/2)^{2k+nu} / (k! (k+nu)!)
template <class Real>
SeriesResult<Real> ascending_series(int order, double x, Real eps) {
  const Real half_x = static_cast<Real>(x) / 2;
  Real term = 1;
  for (int i = 1; i <= order; ++i) term = term * half_x / i;
  Real sum = term;
  Real max_term = abs_real(term);
  const Real neg_sq = -half_x * half_x;
  for (int k = 1; k < 1000; ++k) {
    term = term * neg_sq / (static_cast<Real>(k) * (k + order));
    sum += term;
    const Real mag = abs_real(term);
    if (mag > max_term) max_term = mag;
    if (k > half_x && mag <= eps * abs_real(sum)) break;
  }
  return {sum, max_term};
}

}  // namespace

double bessel_switch_point(int order) {
  return std::max(20.0, 2.0 * order);
}

namespace detail {

double bessel_j_series(int order, double x) {
  check_bessel_args(order, x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  auto ld = ascending_series<long double>(order, x, LDBL_EPSILON);
  if (ld.max_term * LDBL_EPSILON <= 1e-14L * abs_real(ld.sum)) {
    return static_cast<double>(ld.sum);
  }
  const __float128 eps = static_cast<__float128>(1e-34);
  auto q = ascending_series<__float128>(order, x, eps);
  return static_cast<double>(q.sum);
}

double bessel_j_hankel(int order, double x) {
  check_bessel_args(order, x);
  if (x == 0.0) throw DomainError("bessel_j_hankel: x must be positive");
  const long double mu = 4.0L * order * order;
  const long double xl = x;
  long double p = 1.0L;
  long double q = 0.0L;
  long double term = 1.0L;
  long double prev = 1.0L;
  for (int k = 1; k < 400; ++k) {
    const long double odd = 2.0L * k - 1.0L;
    term = term * (mu - odd * odd) / (8.0L * k * xl);
    const long double mag = std::fabs(term);
    if (term == 0.0L) break;
    // Past the smallest term the divergent tail starts growing again.
    if (k > order && mag > prev) break;
    prev = mag;
    const long double sign = ((k / 2) % 2 == 0) ? 1.0L : -1.0L;
    if (k % 2 == 0) {
      p += sign * term;
    } else {
      q += sign * term;
    }
    if (mag < 1e-21L * (std::fabs(p) + std::fabs(q))) break;
  }
  // omega = x - (2 nu + 1) pi / 4, applied as a rotation by a multiple of
  // pi/4 so the large argument is reduced only once.
  const long double s = std::numbers::sqrt2_v<long double> / 2.0L;
  long double cos_phi = 0, sin_phi = 0;
  switch ((2 * order + 1) % 8) {
    case 1: cos_phi = s; sin_phi = s; break;
    case 3: cos_phi = -s; sin_phi = s; break;
    case 5: cos_phi = -s; sin_phi = -s; break;
    default: cos_phi = s; sin_phi = -s; break;
  }
  const long double cx = std::cos(xl);
  const long double sx = std::sin(xl);
  const long double cos_omega = cx * cos_phi + sx * sin_phi;
  const long double sin_omega = sx * cos_phi - cx * sin_phi;
  const long double amplitude =
      std::sqrt(2.0L / (std::numbers::pi_v<long double> * xl));
  return static_cast<double>(amplitude * (p * cos_omega - q * sin_omega));
}

}  // namespace detail

double bessel_j(int order, double x) {
  check_bessel_args(order, x);
  if (x <= bessel_switch_point(order)) return detail::bessel_j_series(order, x);
  return detail::bessel_j_hankel(order, x);
}

cplx integrate_fn(const std::function<cplx(double)>& f, double a, double b,
                  double tol) {
  return integrate(f, a, b, tol);
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: need at least one node");
  GaussLegendreRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = z;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      if (n == 1) p0 = 1.0;
      dp = n * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / dp;
      z -= dz;
      if (std::fabs(dz) < 1e-16) break;
    }
    double w = 2.0 / ((1.0 - z * z) * dp * dp);
    auto lo = static_cast<std::size_t>(i);
    auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -z;
    rule.nodes[hi] = z;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double smoothstep(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double b = std::exp(-1.0 / t);
  const double c = std::exp(-1.0 / (1.0 - t));
  return b / (b + c);
}

SmoothWindow::SmoothWindow(WindowKind kind) : kind_(kind) {
  switch (kind) {
    case WindowKind::bump_12: lo_ = 1.0; hi_ = 2.0; break;
    case WindowKind::plateau_half_52: lo_ = 0.5; hi_ = 2.5; break;
    case WindowKind::bump_unit: lo_ = 0.5; hi_ = 3.0; break;
  }
}

double SmoothWindow::operator()(double x) const {
  if (x <= lo_ || x >= hi_) return 0.0;
  switch (kind_) {
    case WindowKind::bump_12: {
      const double u = 2.0 * x - 3.0;
      return std::exp(1.0 - 1.0 / (1.0 - u * u));
    }
    case WindowKind::plateau_half_52:
      if (x < 1.0) return smoothstep((x - 0.5) / 0.5);
      if (x <= 2.0) return 1.0;
      return smoothstep((2.5 - x) / 0.5);
    case WindowKind::bump_unit:
      if (x < 1.0) return smoothstep((x - 0.5) / 0.5);
      if (x <= 2.0) return 1.0;
      return smoothstep(3.0 - x);
  }
  return 0.0;
}

SmoothWindow window(WindowKind kind) { return SmoothWindow(kind); }

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::bump_12: return "bump_12";
    case WindowKind::plateau_half_52: return "plateau_half_52";
    case WindowKind::bump_unit: return "bump_unit";
  }
  return "unknown";
}

WindowKind window_kind_from_string(const std::string& name) {
  if (name == "bump_12") return WindowKind::bump_12;
  if (name == "plateau_half_52") return WindowKind::plateau_half_52;
  if (name == "bump_unit") return WindowKind::bump_unit;
  throw DomainError("unknown window kind '" + name + "'");
}

}  // namespace subconvex
