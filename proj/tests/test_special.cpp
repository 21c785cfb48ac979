#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/bessel.hpp>

#include "subconvex/errors.hpp"
#include "subconvex/special.hpp"

using namespace subconvex;

TEST_CASE("Bessel fixtures") {
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(5, 0.0) == 0.0);
  // (x/2)^11 / 11! (1 - x^2/48 + x^4/2496)
  const double x = 1.0;
  const double lead = std::pow(x / 2, 11) / 39916800.0;
  const double three_terms = lead * (1 - x * x / 48 + std::pow(x, 4) / 2496);
  CHECK(bessel_j(11, 1.0) == doctest::Approx(three_terms).epsilon(1e-8));
  CHECK(bessel_j(11, 1.0) == doctest::Approx(1.1980067463031371e-11).epsilon(1e-13));
  // 200-term ascending series in 50-digit arithmetic
  CHECK(bessel_j(11, 22.0) == doctest::Approx(0.16412542300134468).epsilon(1e-12));
  CHECK_THROWS_AS(bessel_j(31, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(-1, 1.0), DomainError);
  CHECK_THROWS_AS(bessel_j(2, -1.0), DomainError);
}

TEST_CASE("Bessel against Boost") {
  double worst = 0.0;
  for (int nu = 0; nu <= kMaxBesselOrder; ++nu) {
    for (double x = 0.01; x < 1e4; x *= 1.037) {
      const double ours = bessel_j(nu, x);
      const double ref = boost::math::cyl_bessel_j(nu, x);
      // local amplitude: relative where the function is large, absolute
      // against sqrt(2/(pi x)) in the oscillatory range
      const double amp = std::max(std::fabs(ref), std::min(1.0, std::sqrt(2.0 / (M_PI * x))));
      worst = std::max(worst, std::fabs(ours - ref) / amp);
      if (x < nu / 2.0 && ref != 0.0) {
        // deep in the monotone region the value itself is tiny but relative
        // accuracy still holds
        CHECK(std::fabs(ours - ref) <= 1e-10 * std::fabs(ref));
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("Bessel recurrence and seams") {
  for (double x : {0.5, 1.0, 5.0, 20.0, 100.0, 1000.0}) {
    for (int nu = 1; nu <= 26; ++nu) {
      const double j = bessel_j(nu, x);
      const double residual =
          bessel_j(nu - 1, x) + bessel_j(nu + 1, x) - 2.0 * nu / x * j;
      CHECK(std::fabs(residual) <= 1e-8 * std::max(1.0, std::fabs(j)));
    }
  }
  for (int nu = 0; nu <= kMaxBesselOrder; ++nu) {
    const double x = bessel_switch_point(nu);
    CHECK(x == std::max(20.0, 2.0 * nu));
    CHECK(std::fabs(detail::bessel_j_series(nu, x) - detail::bessel_j_hankel(nu, x)) <= 1e-9);
  }
}

TEST_CASE("adaptive quadrature") {
  CHECK(std::abs(integrate([](double) { return 1.0; }, 0.0, 1.0) - cplx(1.0, 0.0)) < 1e-14);
  CHECK(std::abs(integrate([](double x) { return unit_exp(x); }, 0.0, 1.0)) < 1e-10);
  CHECK(integrate([](double x) { return x * x; }, 0.0, 3.0).real() ==
        doctest::Approx(9.0).epsilon(1e-13));
  CHECK(integrate([](double x) { return std::sin(50 * x); }, 0.0, M_PI).real() ==
        doctest::Approx(0.0).epsilon(1e-10));
  const auto r = integrate_adaptive([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-12);
  CHECK(r.value.real() == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(r.panels > 1);
  CHECK(std::abs(integrate_fn([](double x) { return cplx(x, -x); }, 0.0, 2.0) -
                 cplx(2.0, -2.0)) < 1e-13);
  CHECK_THROWS_AS(integrate_adaptive([](double x) { return std::sin(500 * x); }, 0.0, 10.0,
                                     1e-14, 3),
                  NonConvergence);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 1.0), DomainError);
}

TEST_CASE("bump integral against a trapezoid rule") {
  const SmoothWindow h(WindowKind::bump_12);
  const int n = 1000000;
  const double step = 1.0 / n;
  double trap = 0.0;
  for (int i = 1; i < n; ++i) trap += h(1.0 + i * step);
  trap *= step;  // endpoints vanish
  const double adaptive = integrate([&](double x) { return h(x); }, 1.0, 2.0, 1e-13).real();
  CHECK(adaptive == doctest::Approx(trap).epsilon(1e-11));
  CHECK(adaptive == doctest::Approx(0.60345016121893809).epsilon(1e-13));
}

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {2, 5, 8, 16, 32}) {
    const auto rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    for (int deg = 0; deg < 2 * n; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], deg);
      const double exact = deg % 2 ? 0.0 : 2.0 / (deg + 1);
      CHECK(s == doctest::Approx(exact).epsilon(1e-13));
    }
    for (int i = 1; i < n; ++i) CHECK(rule.nodes[i - 1] < rule.nodes[i]);
  }
}

TEST_CASE("windows") {
  const SmoothWindow b(WindowKind::bump_12);
  const SmoothWindow ph(WindowKind::plateau_half_52);
  const SmoothWindow pu(WindowKind::bump_unit);
  CHECK(b(1.5) == 1.0);
  CHECK(b(1.0) == 0.0);
  CHECK(b(2.0) == 0.0);
  CHECK(ph(1.7) == 1.0);
  CHECK(pu(2.5) > 0.0);
  CHECK(pu(2.5) < 1.0);
  CHECK(ph(2.5) == 0.0);
  for (const SmoothWindow* w : {&b, &ph, &pu}) {
    for (int i = 0; i <= 1000; ++i) {
      const double x = -0.5 + 4.0 * i / 1000.0;
      const double v = (*w)(x);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      if (x <= w->support_lo() || x >= w->support_hi()) CHECK(v == 0.0);
    }
  }
  for (int i = 0; i <= 1000; ++i) {
    const double x = 1.0 + i / 1000.0;
    CHECK(ph(x) == 1.0);
    CHECK(pu(x) == 1.0);
  }
  // smoothstep symmetry s(t) + s(1 - t) = 1
  for (double t = 0.0; t <= 1.0; t += 0.01) {
    CHECK(smoothstep(t) + smoothstep(1.0 - t) == doctest::Approx(1.0).epsilon(1e-15));
  }
  CHECK(window_kind_from_string("bump_unit") == WindowKind::bump_unit);
  CHECK(to_string(WindowKind::plateau_half_52) == "plateau_half_52");
  CHECK_THROWS_AS(window_kind_from_string("box"), DomainError);
}
