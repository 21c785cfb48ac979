#include "subconvex/arith.hpp"

#include <cmath>
#include <numeric>

#include "subconvex/errors.hpp"

namespace subconvex {

cplx unit_exp(double x) {
  double frac = x - std::floor(x);
  double phase = kTwoPi * frac;
  return {std::cos(phase), std::sin(phase)};
}

cplx unit_exp_frac(i64 num, i64 den) {
  i64 r = mod_floor(num, den);
  return unit_exp(static_cast<double>(r) / static_cast<double>(den));
}

i64 mod_mul(i64 a, i64 b, i64 m) {
  return static_cast<i64>((static_cast<__int128>(a) * b) % m);
}

i64 mod_pow(i64 base, u64 exp, i64 m) {
  if (m == 1) return 0;
  i64 result = 1;
  i64 b = mod_floor(base, m);
  while (exp > 0) {
    if (exp & 1U) result = mod_mul(result, b, m);
    b = mod_mul(b, b, m);
    exp >>= 1U;
  }
  return result;
}

i64 mod_inverse(i64 a, i64 q) {
  if (q <= 0) throw DomainError("mod_inverse: modulus must be positive");
  if (q == 1) return 0;
  i64 old_r = mod_floor(a, q), r = q;
  i64 old_s = 1, s = 0;
  while (r != 0) {
    i64 quot = old_r / r;
    i64 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) {
    throw NonInvertible("mod_inverse: gcd(" + std::to_string(a) + ", " +
                        std::to_string(q) + ") != 1");
  }
  return mod_floor(old_s, q);
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_odd_prime(i64 n) { return n > 2 && is_prime(n); }

std::vector<i64> primes_in(i64 lo, i64 hi) {
  std::vector<i64> out;
  for (i64 n = std::max<i64>(lo, 2); n <= hi; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

i64 totient(i64 n) {
  i64 result = n;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

int mobius(i64 n) {
  int sign = 1;
  for (i64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

std::vector<i64> divisors(i64 n) {
  std::vector<i64> small, large;
  for (i64 d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

i64 divisor_count(i64 n) {
  i64 count = 1;
  for (i64 d = 2; d * d <= n; ++d) {
    i64 e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    count *= e + 1;
  }
  if (n > 1) count *= 2;
  return count;
}

i64 sigma_mod(i64 n, unsigned k, i64 m) {
  i64 s = 0;
  for (i64 d : divisors(n)) s = (s + mod_pow(d, k, m)) % m;
  return s;
}

}  // namespace subconvex
