#pragma once

// Elementary integer arithmetic shared by every module.

#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

namespace subconvex {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using cplx = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// e(x) = exp(2 pi i x). The argument is reduced mod 1 first so that large
// integer parts do not cost phase accuracy.
cplx unit_exp(double x);

// e(num/den) with the fraction reduced exactly in integers.
cplx unit_exp_frac(i64 num, i64 den);

// Non-negative residue of a mod m (m > 0).
inline i64 mod_floor(i64 a, i64 m) {
  i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 mod_mul(i64 a, i64 b, i64 m);
i64 mod_pow(i64 base, u64 exp, i64 m);

// Inverse of a mod q via extended Euclid: result in [1, q) or 0 when q == 1.
// Throws NonInvertible when gcd(a, q) != 1.
i64 mod_inverse(i64 a, i64 q);

bool is_prime(i64 n);
bool is_odd_prime(i64 n);
std::vector<i64> primes_in(i64 lo, i64 hi);

i64 totient(i64 n);
int mobius(i64 n);
std::vector<i64> divisors(i64 n);
i64 divisor_count(i64 n);

// sigma_k(n) reduced mod m.
i64 sigma_mod(i64 n, unsigned k, i64 m);

}  // namespace subconvex
