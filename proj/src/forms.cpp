#include "subconvex/forms.hpp"

#include <cmath>
#include <cstdint>
#include <string>

#include "subconvex/errors.hpp"

namespace subconvex {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Largest transform is 2^22, so the table may hold up to 2^21 entries.
constexpr int kMaxLogSize = 22;
constexpr std::size_t kHardTableLimit = std::size_t{1} << (kMaxLogSize - 1);

struct Modulus {
  u32 p;
  u32 root;  // generator of (Z/p)^*
};

u32 pow_mod(u64 base, u64 exp, u32 p) {
  u64 result = 1;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<u32>(result);
}

bool is_prime_u32(u32 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (u32 d = 3; static_cast<u64>(d) * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

u32 find_generator(u32 p) {
  std::vector<u32> factors;
  u32 m = p - 1;
  for (u32 d = 2; static_cast<u64>(d) * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (u32 g = 2;; ++g) {
    bool ok = true;
    for (u32 f : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

// Primes c * 2^22 + 1 in (2^30, 2^31), largest first.
const std::vector<Modulus>& ntt_moduli() {
  static const std::vector<Modulus> moduli = [] {
    std::vector<Modulus> out;
    for (u32 c = 511; c >= 257; --c) {
      u32 p = (c << kMaxLogSize) + 1;
      if (is_prime_u32(p)) out.push_back({p, find_generator(p)});
    }
    return out;
  }();
  return moduli;
}

void ntt(std::vector<u32>& a, bool invert, const Modulus& mod) {
  const u32 p = mod.p;
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1U;
    for (; j & bit; bit >>= 1U) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1U) {
    u64 w_len = pow_mod(mod.root, (p - 1) / len, p);
    if (invert) w_len = pow_mod(w_len, p - 2, p);
    std::vector<u32> twiddle(len / 2);
    u64 w = 1;
    for (auto& t : twiddle) {
      t = static_cast<u32>(w);
      w = w * w_len % p;
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        u32 u = a[i + k];
        u32 v = static_cast<u32>(static_cast<u64>(a[i + k + len / 2]) *
                                 twiddle[k] % p);
        a[i + k] = u + v >= p ? u + v - p : u + v;
        a[i + k + len / 2] = u >= v ? u - v : u + p - v;
      }
    }
  }
  if (invert) {
    u64 n_inv = pow_mod(n, p - 2, p);
    for (auto& x : a) x = static_cast<u32>(x * n_inv % p);
  }
}

// Product of two series truncated to `keep` coefficients.
std::vector<u32> multiply(std::vector<u32> a, std::vector<u32> b,
                          std::size_t keep, const Modulus& mod) {
  std::size_t size = 1;
  while (size < a.size() + b.size()) size <<= 1U;
  const bool square = a == b;
  a.resize(size);
  ntt(a, false, mod);
  if (square) {
    for (auto& x : a) x = static_cast<u32>(static_cast<u64>(x) * x % mod.p);
  } else {
    b.resize(size);
    ntt(b, false, mod);
    for (std::size_t i = 0; i < size; ++i) {
      a[i] = static_cast<u32>(static_cast<u64>(a[i]) * b[i] % mod.p);
    }
  }
  ntt(a, true, mod);
  a.resize(keep);
  return a;
}

u32 reduce_signed(long long v, u32 p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<u32>(r < 0 ? r + p : r);
}

// 1 + c * sum sigma_k(n) q^n, coefficients 0..n_max.
std::vector<u32> eisenstein(std::size_t n_max, unsigned k, long long c,
                            const Modulus& mod) {
  std::vector<u64> sigma(n_max + 1, 0);
  for (std::size_t d = 1; d <= n_max; ++d) {
    u64 dk = pow_mod(d, k, mod.p);
    for (std::size_t m = d; m <= n_max; m += d) sigma[m] += dk;
  }
  std::vector<u32> e(n_max + 1);
  e[0] = 1;
  u64 cm = reduce_signed(c, mod.p);
  for (std::size_t n = 1; n <= n_max; ++n) {
    e[n] = static_cast<u32>(sigma[n] % mod.p * cm % mod.p);
  }
  return e;
}

// Coefficients a(1..n_max) of Delta * E4^e4 * E6^e6 reduced mod p.
std::vector<u32> coefficients_mod(std::size_t n_max, int e4, int e6,
                                  const Modulus& mod) {
  std::vector<u32> eta3(n_max, 0);
  for (long long j = 0;; ++j) {
    std::size_t idx = static_cast<std::size_t>(j * (j + 1) / 2);
    if (idx >= n_max) break;
    long long c = (j % 2 == 0 ? 1 : -1) * (2 * j + 1);
    eta3[idx] = reduce_signed(c, mod.p);
  }
  std::vector<u32> power = multiply(eta3, eta3, n_max, mod);  // eta^6
  power = multiply(power, power, n_max, mod);                 // eta^12
  power = multiply(power, power, n_max, mod);                 // eta^24

  std::vector<u32> series(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) series[n] = power[n - 1];
  if (e4 > 0) {
    auto e = eisenstein(n_max, 3, 240, mod);
    for (int i = 0; i < e4; ++i) series = multiply(series, e, n_max + 1, mod);
  }
  if (e6 > 0) {
    auto e = eisenstein(n_max, 5, -504, mod);
    for (int i = 0; i < e6; ++i) series = multiply(series, e, n_max + 1, mod);
  }
  series.erase(series.begin());
  return series;
}

// Moduli needed so that prod(p) > 2 * 2 sqrt(n) * n^{(k-1)/2} (Deligne).
std::size_t moduli_needed(std::size_t n_max, int weight) {
  double n = static_cast<double>(n_max);
  double bits = 2.0 + 0.5 * std::log2(n) + 0.5 * (weight - 1) * std::log2(n);
  return static_cast<std::size_t>(std::ceil((bits + 4.0) / 30.0));
}

// Garner reconstruction to the symmetric residue.
std::vector<mpz_class> crt_lift(const std::vector<std::vector<u32>>& residues,
                                const std::vector<Modulus>& moduli) {
  const std::size_t t = moduli.size();
  const std::size_t n = residues.front().size();
  // inv[i][j] = p_i^{-1} mod p_j for i < j
  std::vector<std::vector<u64>> inv(t, std::vector<u64>(t, 0));
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      inv[i][j] = pow_mod(moduli[i].p % moduli[j].p, moduli[j].p - 2,
                          moduli[j].p);
    }
  }
  mpz_class modulus_product = 1;
  for (const auto& m : moduli) modulus_product *= m.p;
  const mpz_class half = modulus_product / 2;

  std::vector<mpz_class> out(n);
  std::vector<u64> digits(t);
  for (std::size_t idx = 0; idx < n; ++idx) {
    for (std::size_t j = 0; j < t; ++j) {
      const u64 pj = moduli[j].p;
      u64 x = residues[j][idx];
      for (std::size_t i = 0; i < j; ++i) {
        x = (x + pj - digits[i] % pj) % pj * inv[i][j] % pj;
      }
      digits[j] = x;
    }
    mpz_class value = digits[t - 1];
    for (std::size_t j = t - 1; j-- > 0;) {
      value *= moduli[j].p;
      value += digits[j];
    }
    if (value > half) value -= modulus_product;
    out[idx] = std::move(value);
  }
  return out;
}

std::pair<int, int> eisenstein_exponents(int weight) {
  switch (weight) {
    case 12: return {0, 0};
    case 16: return {1, 0};
    case 18: return {0, 1};
    case 20: return {2, 0};
    case 22: return {1, 1};
    case 26: return {2, 1};
    default:
      throw UnsupportedWeight("no one-dimensional level-1 cusp space of weight " +
                              std::to_string(weight));
  }
}

}  // namespace

CuspForm::CuspForm(int weight, std::vector<mpz_class> raw)
    : weight_(weight), raw_(std::move(raw)) {
  normalized_.resize(raw_.size());
  const double exponent = -0.5 * (weight_ - 1);
  for (std::size_t i = 0; i < raw_.size(); ++i) {
    normalized_[i] = raw_[i].get_d() *
                     std::pow(static_cast<double>(i + 1), exponent);
  }
}

const mpz_class& CuspForm::raw(std::size_t n) const {
  if (n < 1 || n > raw_.size()) {
    throw OutOfRange("coefficient index " + std::to_string(n) +
                     " outside [1, " + std::to_string(raw_.size()) + "]");
  }
  return raw_[n - 1];
}

double CuspForm::lambda(std::size_t n) const {
  if (n < 1 || n > normalized_.size()) {
    throw OutOfRange("coefficient index " + std::to_string(n) +
                     " outside [1, " + std::to_string(normalized_.size()) +
                     "]");
  }
  return normalized_[n - 1];
}

void CuspForm::require(std::size_t required) const {
  if (required > n_max()) throw TableTooShort(required, n_max());
}

bool is_supported_weight(int weight) {
  switch (weight) {
    case 12: case 16: case 18: case 20: case 22: case 26: return true;
    default: return false;
  }
}

CuspForm build_form(int weight, std::size_t n_max, const FormOptions& opts) {
  auto [e4, e6] = eisenstein_exponents(weight);
  if (n_max < 1) throw DomainError("n_max must be positive");
  if (n_max > opts.table_cap || n_max > kHardTableLimit) {
    throw ResourceError("n_max " + std::to_string(n_max) +
                        " exceeds table cap " +
                        std::to_string(std::min(opts.table_cap,
                                                kHardTableLimit)));
  }
  const auto& all = ntt_moduli();
  std::size_t count = moduli_needed(n_max, weight);
  std::vector<Modulus> moduli(all.begin(), all.begin() + count);
  std::vector<std::vector<u32>> residues;
  residues.reserve(count);
  for (const auto& m : moduli) {
    residues.push_back(coefficients_mod(n_max, e4, e6, m));
  }
  return CuspForm(weight, crt_lift(residues, moduli));
}

CuspForm build_delta(std::size_t n_max, const FormOptions& opts) {
  return build_form(12, n_max, opts);
}

}  // namespace subconvex
