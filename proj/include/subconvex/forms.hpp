#pragma once

// Level-one holomorphic cusp forms of weight 12..26 with exact integer
// Fourier coefficients.
//
// Every space S_k(SL2(Z)) with k in {12, 16, 18, 20, 22, 26} is one
// dimensional, spanned by Delta * E4^a * E6^b.  Delta comes from
//
//   Delta = q * prod (1 - q^n)^24 = q * (sum_j (-1)^j (2j+1) q^{j(j+1)/2})^8
//
// (Jacobi's identity for eta^3), so the eighth power is three squarings of
// a lacunary series.  All convolutions run modulo a set of NTT primes and
// the coefficients are lifted by CRT; the product of the primes exceeds
// twice the bound d(n) n^{(k-1)/2}, so the lift is exact.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace subconvex {

inline constexpr std::size_t kDefaultTableSize = 1'000'000;

struct FormOptions {
  std::size_t table_cap = kDefaultTableSize;
};

class CuspForm {
 public:
  CuspForm(int weight, std::vector<mpz_class> raw);

  int weight() const { return weight_; }
  std::size_t n_max() const { return raw_.size(); }

  // a(n) for 1 <= n <= n_max.
  const mpz_class& raw(std::size_t n) const;

  // a(n) n^{-(k-1)/2}; throws OutOfRange past the table.
  double lambda(std::size_t n) const;

  // Unchecked access to the normalized table; index 0 is lambda(1).
  const std::vector<double>& normalized() const { return normalized_; }

  // Throws TableTooShort unless n_max >= required.
  void require(std::size_t required) const;

 private:
  int weight_;
  std::vector<mpz_class> raw_;
  std::vector<double> normalized_;
};

bool is_supported_weight(int weight);

CuspForm build_delta(std::size_t n_max, const FormOptions& opts = {});
CuspForm build_form(int weight, std::size_t n_max,
                    const FormOptions& opts = {});

}  // namespace subconvex
