#pragma once

// Dirichlet characters modulo an odd prime p.
//
// With g the least primitive root, the character of index j sends g^t to
// e(j t / (p - 1)).  Index 0 is the principal character; every other index
// is primitive because p is prime.  Conjugation is j -> (p - 1 - j) mod
// (p - 1).

#include <cstdint>
#include <vector>

#include "subconvex/arith.hpp"

namespace subconvex {

class DirichletCharacter {
 public:
  DirichletCharacter(i64 modulus, i64 index);

  i64 modulus() const { return p_; }
  i64 generator() const { return g_; }
  i64 index() const { return j_; }
  bool is_primitive() const { return j_ != 0; }

  // chi(n); zero when p | n.
  cplx operator()(i64 n) const;

  DirichletCharacter conj() const;

  // chi(-1) as +1 or -1.
  int parity() const;

  // Discrete log of n against the generator (p must not divide n).
  i64 dlog(i64 n) const;

 private:
  i64 p_;
  i64 g_;
  i64 j_;
  std::vector<i64> dlog_;     // dlog_[n] for n in [1, p-1]
  std::vector<cplx> values_;  // values_[n] for n in [0, p-1]
};

// Least g in [2, p-1] of order p - 1.
i64 primitive_root(i64 p);

std::vector<DirichletCharacter> enumerate_characters(i64 p);
std::vector<DirichletCharacter> primitive_characters(i64 p);

cplx chi(const DirichletCharacter& c, i64 n);

// sum_{b=1}^{p-1} chi(b) e(b/p), by direct summation.
cplx gauss_sum(const DirichletCharacter& c);

// chi(m) rebuilt from additive characters:
// (1 / tau(conj chi)) sum_b conj chi(b) e(b m / p).
cplx additive_expansion(const DirichletCharacter& c, i64 m);

}  // namespace subconvex
