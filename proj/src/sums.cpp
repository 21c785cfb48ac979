#include "subconvex/sums.hpp"

#include <cmath>
#include <numeric>

#include "subconvex/errors.hpp"
#include "subconvex/special.hpp"

namespace subconvex {

i64 ramanujan_sum(i64 q, i64 n) {
  if (q < 1) throw DomainError("ramanujan_sum: q must be positive");
  const i64 g = std::gcd(q, n < 0 ? -n : n);  // gcd(q, 0) = q
  i64 total = 0;
  for (i64 d : divisors(g)) total += d * mobius(q / d);
  return total;
}

void CharSumInstance::validate() const {
  if (chi == nullptr) throw DomainError("character sum without a character");
  if (chi->modulus() != p) {
    throw DomainError("character modulus does not match p");
  }
  if (!chi->is_primitive()) {
    throw NonPrimitive("character sum needs a primitive character");
  }
  if (q < 1) throw DomainError("q must be positive");
  if (std::gcd(q, p) != 1) throw DomainError("q must be coprime to p");
}

cplx char_sum_bruteforce(const CharSumInstance& inst) {
  inst.validate();
  const i64 p = inst.p;
  const i64 q = inst.q;
  const i64 pq = p * q;
  const DirichletCharacter chibar = inst.chi->conj();
  cplx total{0.0, 0.0};
  for (i64 a = 0; a < q; ++a) {
    if (std::gcd(a, q) != 1) continue;
    const i64 a_inv = mod_inverse(a, q);
    const cplx outer = unit_exp_frac(-a_inv * inst.n, q);
    cplx inner{0.0, 0.0};
    for (i64 b = 1; b < p; ++b) {
      const i64 c = inst.convention == Convention::plus ? a * p + b * q
                                                        : a * p - b * q;
      if (std::gcd(mod_floor(c, pq), pq) != 1) {
        throw ConsistencyError("c = " + std::to_string(c) +
                               " is not a unit mod " + std::to_string(pq));
      }
      const i64 c_inv = mod_inverse(c, pq);
      inner += chibar(b) * unit_exp_frac(mod_mul(c_inv, mod_floor(inst.m, pq), pq), pq);
    }
    total += inner * outer;
  }
  return total;
}

std::string to_string(ClosedFormVariant v) {
  switch (v) {
    case ClosedFormVariant::verified: return "verified";
    case ClosedFormVariant::conjugate: return "conjugate";
    case ClosedFormVariant::mixed: return "mixed";
  }
  return "unknown";
}

ClosedFormVariant closed_form_variant_from_string(const std::string& name) {
  if (name == "verified") return ClosedFormVariant::verified;
  if (name == "conjugate") return ClosedFormVariant::conjugate;
  if (name == "mixed") return ClosedFormVariant::mixed;
  throw DomainError("unknown closed-form variant '" + name + "'");
}

cplx char_sum_closed(const CharSumInstance& inst, ClosedFormVariant variant) {
  inst.validate();
  const DirichletCharacter& chi = *inst.chi;
  const DirichletCharacter chibar = chi.conj();
  const i64 p = inst.p;
  const i64 q = inst.q;
  const i64 q2 = mod_mul(q, q, p);
  const double divisor_sum =
      static_cast<double>(ramanujan_sum(q, inst.m - p * p * inst.n));
  switch (variant) {
    case ClosedFormVariant::verified: {
      cplx value = gauss_sum(chi) * chibar(inst.m) * chi(q2) * divisor_sum;
      if (inst.convention == Convention::minus) {
        value *= static_cast<double>(chi.parity());
      }
      return value;
    }
    case ClosedFormVariant::conjugate:
      return gauss_sum(chibar) * chibar(inst.m) * chibar(q2) * divisor_sum;
    case ClosedFormVariant::mixed:
      return gauss_sum(chibar) * chi(inst.m) * chibar(q2) * divisor_sum;
  }
  return {0.0, 0.0};
}

double shifted_convolution(const CuspForm& g, i64 q1, i64 q1p, i64 shift,
                           i64 M) {
  if (q1 < 1 || q1p < 1 || M < 1) {
    throw DomainError("shifted_convolution: q1, q1', M must be positive");
  }
  g.require(static_cast<std::size_t>(3 * M));
  const SmoothWindow w(WindowKind::bump_unit);
  const double Md = static_cast<double>(M);
  const i64 lo = (M + 1) / 2;  // ceil(M/2)
  const i64 hi = 3 * M;
  double total = 0.0;
  for (i64 u = lo; u <= hi; ++u) {
    const i64 num = q1p * u - shift;
    if (num % q1 != 0) continue;
    const i64 v = num / q1;
    if (v < lo || v > hi) continue;
    const double weight = w(static_cast<double>(u) / Md) *
                          w(static_cast<double>(v) / Md);
    if (weight == 0.0) continue;
    total += g.lambda(static_cast<std::size_t>(u)) *
             g.lambda(static_cast<std::size_t>(v)) * weight;
  }
  return total;
}

double shifted_convolution_bound(i64 q1, i64 q1p, i64 M, double theta) {
  return std::pow(static_cast<double>(q1p * M + q1 * M), 0.5 + theta);
}

cplx short_twisted_sum(const CuspForm& g, const DirichletCharacter& chi,
                       double M0) {
  if (!chi.is_primitive()) {
    throw NonPrimitive("short twisted sum needs a primitive character");
  }
  if (M0 < 1.0) return {0.0, 0.0};
  g.require(static_cast<std::size_t>(std::floor(3.0 * M0)));
  const SmoothWindow w(WindowKind::bump_unit);
  cplx total{0.0, 0.0};
  const auto lo = static_cast<i64>(std::ceil(M0 / 2.0));
  const auto hi = static_cast<i64>(std::floor(3.0 * M0));
  for (i64 r = std::max<i64>(1, lo); r <= hi; ++r) {
    const double weight = w(static_cast<double>(r) / M0);
    if (weight == 0.0) continue;
    total += g.lambda(static_cast<std::size_t>(r)) * weight * chi(r);
  }
  return total;
}

std::optional<i64> first_distinguishing_index(const CuspForm& f,
                                              const CuspForm& g,
                                              const DirichletCharacter& chi,
                                              i64 n_max) {
  if (n_max < 1) return std::nullopt;
  f.require(static_cast<std::size_t>(n_max));
  g.require(static_cast<std::size_t>(n_max));
  for (i64 n = 1; n <= n_max; ++n) {
    if (n % chi.modulus() == 0) continue;
    const auto idx = static_cast<std::size_t>(n);
    if (std::abs(f.lambda(idx) - g.lambda(idx) * chi(n)) > 1e-9) return n;
  }
  return std::nullopt;
}

}  // namespace subconvex
