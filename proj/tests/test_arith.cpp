#include <doctest.h>

#include <numeric>

#include "subconvex/arith.hpp"
#include "subconvex/errors.hpp"

using namespace subconvex;

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  for (i64 q = 2; q < 40; ++q) CHECK(mod_inverse(1, q) == 1);
  CHECK(mod_inverse(5, 1) == 0);
  CHECK_THROWS_AS(mod_inverse(2, 4), NonInvertible);
  CHECK(mod_inverse(-3, 7) == 2);
  for (i64 q = 2; q < 60; ++q) {
    for (i64 a = 1; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const i64 inv = mod_inverse(a, q);
      CHECK(inv >= 1);
      CHECK(inv < q);
      CHECK(a * inv % q == 1);
    }
  }
}

TEST_CASE("unit exponentials") {
  CHECK(std::abs(unit_exp(0.25) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(unit_exp(1e9 + 0.5) - cplx(-1.0, 0.0)) < 1e-6);
  CHECK(std::abs(unit_exp_frac(1, 4) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(unit_exp_frac(-1, 4) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(unit_exp_frac(123456789 * 7 + 3, 7) - unit_exp_frac(3, 7)) < 1e-15);
}

TEST_CASE("multiplicative functions against brute force") {
  for (i64 n = 1; n <= 300; ++n) {
    i64 phi = 0, d = 0;
    for (i64 k = 1; k <= n; ++k) {
      if (std::gcd(k, n) == 1) ++phi;
      if (n % k == 0) ++d;
    }
    CHECK(totient(n) == phi);
    CHECK(divisor_count(n) == d);
    CHECK(static_cast<i64>(divisors(n).size()) == d);
  }
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(mobius(30) == -1);
  // sum_{d | n} mu(d) = [n = 1]
  for (i64 n = 1; n <= 200; ++n) {
    int s = 0;
    for (i64 d : divisors(n)) s += mobius(d);
    CHECK(s == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("primes and sigma") {
  CHECK(primes_in(2, 30) == std::vector<i64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(is_odd_prime(3));
  CHECK_FALSE(is_odd_prime(2));
  CHECK_FALSE(is_odd_prime(9));
  CHECK(sigma_mod(6, 1, 1000) == 12);
  CHECK(sigma_mod(2, 11, 691) == (1 + 2048) % 691);
  CHECK(mod_pow(3, 100, 1000000007) == 886041711);
}
