#include "subconvex/characters.hpp"

#include <string>

#include "subconvex/errors.hpp"

namespace subconvex {

namespace {

void check_modulus(i64 p) {
  if (!is_odd_prime(p)) {
    throw InvalidModulus("modulus " + std::to_string(p) +
                         " is not an odd prime");
  }
}

i64 multiplicative_order(i64 g, i64 p) {
  i64 x = g % p;
  i64 order = 1;
  while (x != 1) {
    x = x * g % p;
    ++order;
  }
  return order;
}

}  // namespace

i64 primitive_root(i64 p) {
  check_modulus(p);
  for (i64 g = 2; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw ConsistencyError("no primitive root found mod " + std::to_string(p));
}

DirichletCharacter::DirichletCharacter(i64 modulus, i64 index)
    : p_(modulus), g_(primitive_root(modulus)), j_(index) {
  if (index < 0 || index > p_ - 2) {
    throw DomainError("character index " + std::to_string(index) +
                      " outside [0, " + std::to_string(p_ - 2) + "]");
  }
  dlog_.assign(static_cast<std::size_t>(p_), 0);
  values_.assign(static_cast<std::size_t>(p_), cplx{0.0, 0.0});
  i64 x = 1;
  for (i64 t = 0; t < p_ - 1; ++t) {
    dlog_[static_cast<std::size_t>(x)] = t;
    values_[static_cast<std::size_t>(x)] = unit_exp_frac(j_ * t, p_ - 1);
    x = x * g_ % p_;
  }
}

cplx DirichletCharacter::operator()(i64 n) const {
  return values_[static_cast<std::size_t>(mod_floor(n, p_))];
}

DirichletCharacter DirichletCharacter::conj() const {
  return DirichletCharacter(p_, mod_floor(-j_, p_ - 1));
}

int DirichletCharacter::parity() const {
  // -1 = g^{(p-1)/2}, so chi(-1) = (-1)^j.
  return j_ % 2 == 0 ? 1 : -1;
}

i64 DirichletCharacter::dlog(i64 n) const {
  i64 r = mod_floor(n, p_);
  if (r == 0) throw DomainError("dlog of a multiple of the modulus");
  return dlog_[static_cast<std::size_t>(r)];
}

std::vector<DirichletCharacter> enumerate_characters(i64 p) {
  check_modulus(p);
  std::vector<DirichletCharacter> out;
  out.reserve(static_cast<std::size_t>(p - 1));
  for (i64 j = 0; j <= p - 2; ++j) out.emplace_back(p, j);
  return out;
}

std::vector<DirichletCharacter> primitive_characters(i64 p) {
  check_modulus(p);
  std::vector<DirichletCharacter> out;
  for (i64 j = 1; j <= p - 2; ++j) out.emplace_back(p, j);
  return out;
}

cplx chi(const DirichletCharacter& c, i64 n) { return c(n); }

cplx gauss_sum(const DirichletCharacter& c) {
  if (!c.is_primitive()) {
    throw NonPrimitive("Gauss sum requested for the principal character mod " +
                       std::to_string(c.modulus()));
  }
  cplx sum{0.0, 0.0};
  for (i64 b = 1; b < c.modulus(); ++b) {
    sum += c(b) * unit_exp_frac(b, c.modulus());
  }
  return sum;
}

cplx additive_expansion(const DirichletCharacter& c, i64 m) {
  const DirichletCharacter cbar = c.conj();
  cplx sum{0.0, 0.0};
  for (i64 b = 1; b < c.modulus(); ++b) {
    sum += cbar(b) * unit_exp_frac(b * mod_floor(m, c.modulus()), c.modulus());
  }
  return sum / gauss_sum(cbar);
}

}  // namespace subconvex
