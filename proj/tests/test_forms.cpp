#include <doctest.h>

#include <cmath>
#include <numeric>

#include "subconvex/arith.hpp"
#include "subconvex/errors.hpp"
#include "subconvex/forms.hpp"

using namespace subconvex;

namespace {

// q prod_{m >= 1} (1 - q^m)^24 by repeated multiplication, indices 1..n.
std::vector<mpz_class> naive_delta(std::size_t n) {
  std::vector<mpz_class> s(n, 0);  // s[i] = coefficient of q^i in the product
  s[0] = 1;
  for (std::size_t m = 1; m < n; ++m) {
    for (int rep = 0; rep < 24; ++rep) {
      for (std::size_t i = n - 1; i >= m; --i) s[i] -= s[i - m];
    }
  }
  std::vector<mpz_class> out(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) out[i + 1] = s[i];
  return out;
}

std::vector<mpz_class> eisenstein(int k, long c, std::size_t n) {
  std::vector<mpz_class> e(n + 1, 0);
  e[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    mpz_class sigma = 0;
    for (i64 d : divisors(static_cast<i64>(m))) {
      mpz_class t;
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), k - 1);
      sigma += t;
    }
    e[m] = c * sigma;
  }
  return e;
}

std::vector<mpz_class> times(const std::vector<mpz_class>& a,
                             const std::vector<mpz_class>& b) {
  std::vector<mpz_class> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

TEST_CASE("Delta against the naive eta product") {
  const std::size_t n = 200;
  const auto oracle = naive_delta(n);
  const CuspForm delta = build_delta(n);
  for (std::size_t k = 1; k <= n; ++k) CHECK(delta.raw(k) == oracle[k]);
  CHECK(delta.raw(1) == 1);
  CHECK(delta.raw(2) == -24);
  CHECK(delta.raw(6) == -6048);
  CHECK(delta.raw(6) == delta.raw(2) * delta.raw(3));
}

TEST_CASE("higher weights against naive products with Eisenstein series") {
  const std::size_t n = 120;
  const auto d = naive_delta(n);
  const auto e4 = eisenstein(4, 240, n);
  const auto e6 = eisenstein(6, -504, n);
  const struct {
    int weight, a, b;
  } cases[] = {{12, 0, 0}, {16, 1, 0}, {18, 0, 1}, {20, 2, 0}, {22, 1, 1}, {26, 2, 1}};
  for (const auto& c : cases) {
    auto oracle = d;
    for (int i = 0; i < c.a; ++i) oracle = times(oracle, e4);
    for (int i = 0; i < c.b; ++i) oracle = times(oracle, e6);
    const CuspForm f = build_form(c.weight, n);
    CAPTURE(c.weight);
    for (std::size_t k = 1; k <= n; ++k) CHECK(f.raw(k) == oracle[k]);
  }
  CHECK(build_form(16, 4).raw(2) == 216);
  CHECK(build_form(18, 4).raw(2) == -528);
  const CuspForm a = build_form(12, 500), b = build_delta(500);
  for (std::size_t k = 1; k <= 500; ++k) CHECK(a.raw(k) == b.raw(k));
}

TEST_CASE("Hecke relations hold exactly") {
  const std::size_t n = 4000;
  for (int weight : {12, 16, 18, 20, 22, 26}) {
    CAPTURE(weight);
    const CuspForm f = build_form(weight, n);
    bool multiplicative = true;
    for (std::size_t a = 2; a * a <= n; ++a) {
      for (std::size_t b = a + 1; a * b <= n; ++b) {
        if (std::gcd(a, b) == 1 && f.raw(a) * f.raw(b) != f.raw(a * b)) {
          multiplicative = false;
        }
      }
    }
    CHECK(multiplicative);
    bool recursion = true;
    for (i64 l : primes_in(2, 64)) {
      mpz_class lk;
      mpz_ui_pow_ui(lk.get_mpz_t(), static_cast<unsigned long>(l), weight - 1);
      std::size_t prev = 1, cur = static_cast<std::size_t>(l);
      while (cur * l <= n) {
        if (f.raw(cur * l) != f.raw(l) * f.raw(cur) - lk * f.raw(prev)) {
          recursion = false;
        }
        prev = cur;
        cur *= l;
      }
    }
    CHECK(recursion);
    for (std::size_t k = 1; k <= n; ++k) {
      CHECK(std::fabs(f.lambda(k)) <= static_cast<double>(divisor_count(k)) + 1e-12);
    }
  }
}

TEST_CASE("tau(n) = sigma_11(n) mod 691") {
  const CuspForm delta = build_delta(1000);
  for (std::size_t k = 1; k <= 1000; ++k) {
    mpz_class r = delta.raw(k) % 691;
    if (r < 0) r += 691;
    CHECK(r.get_si() == sigma_mod(static_cast<i64>(k), 11, 691));
  }
}

TEST_CASE("normalised coefficients") {
  const CuspForm delta = build_delta(16);
  CHECK(delta.lambda(1) == 1.0);
  CHECK(delta.lambda(2) == doctest::Approx(-24.0 * std::pow(2.0, -5.5)).epsilon(1e-15));
  CHECK(delta.lambda(2) == doctest::Approx(-0.5303300859).epsilon(1e-9));
  CHECK(delta.raw(4) == delta.raw(2) * delta.raw(2) - 2048);
  CHECK(delta.raw(4) == -1472);
  CHECK(delta.normalized().size() == 16);
}

TEST_CASE("form errors") {
  CHECK_THROWS_AS(build_form(14, 10), UnsupportedWeight);
  CHECK_THROWS_AS(build_form(24, 10), UnsupportedWeight);
  CHECK_THROWS_AS(build_delta(0), DomainError);
  CHECK_THROWS_AS(build_delta(200, FormOptions{100}), ResourceError);
  const CuspForm delta = build_delta(10);
  CHECK_THROWS_AS(delta.lambda(11), OutOfRange);
  CHECK_THROWS_AS(delta.raw(0), OutOfRange);
  CHECK_THROWS_AS(delta.require(11), TableTooShort);
  try {
    delta.require(50);
  } catch (const TableTooShort& e) {
    CHECK(e.required() == 50);
  }
  CHECK(is_supported_weight(26));
  CHECK_FALSE(is_supported_weight(2));
}

TEST_CASE("large table stays exact") {
  // Deligne's bound is the tightest invariant that sees every coefficient.
  const CuspForm f = build_form(26, 100000);
  for (std::size_t k = 99000; k <= 100000; ++k) {
    CHECK(std::fabs(f.lambda(k)) <= static_cast<double>(divisor_count(k)));
  }
  const std::size_t a = 99991, b = 1;  // 99991 is prime
  CHECK(f.raw(a * b) == f.raw(a) * f.raw(b));
  CHECK(f.raw(2 * 49999) == f.raw(2) * f.raw(49999));
}
