#pragma once

// Exponential, character and convolution sums.

#include <optional>

#include "subconvex/characters.hpp"
#include "subconvex/forms.hpp"
#include "subconvex/voronoi.hpp"

namespace subconvex {

// c_q(n) = sum_{d | (q, n)} d mu(q/d), with (q, 0) = q.
i64 ramanujan_sum(i64 q, i64 n);

struct CharSumInstance {
  i64 p = 3;
  i64 q = 1;
  const DirichletCharacter* chi = nullptr;
  i64 m = 1;
  i64 n = 1;
  Convention convention = Convention::plus;

  void validate() const;
};

// sum*_{a mod q} sum*_{b mod p} conj chi(b) e(c' m/(pq)) e(-a' n/q)
// with c = a p +/- b q, c c' = 1 mod pq and a a' = 1 mod q.
cplx char_sum_bruteforce(const CharSumInstance& inst);

// Closed forms for the sum above.  All share the divisor sum
// c_q(m - p^2 n) = sum_{d | q, d | m - p^2 n} d mu(q/d) and differ in the
// character factor:
//   verified          tau(chi) conj chi(m) chi(q^2), times chi(-1) for minus
//   conjugate         tau(conj chi) conj chi(m) conj chi(q^2)
//   mixed             tau(conj chi) chi(m) conj chi(q^2)
// Only `verified` matches the double sum for complex characters; the other
// two are kept for the comparison report.
enum class ClosedFormVariant { verified, conjugate, mixed };

std::string to_string(ClosedFormVariant v);
ClosedFormVariant closed_form_variant_from_string(const std::string& name);

cplx char_sum_closed(const CharSumInstance& inst,
                     ClosedFormVariant variant = ClosedFormVariant::verified);

// sum over q1' u - q1 v = shift of lambda(u) lambda(v) W(u/M) V(v/M),
// W = V = bump_unit, u and v in [M/2, 3M].
double shifted_convolution(const CuspForm& g, i64 q1, i64 q1p, i64 shift,
                           i64 M);

// (q1' M + q1 M)^{1/2 + theta}
double shifted_convolution_bound(i64 q1, i64 q1p, i64 M, double theta);

// sum_r lambda(r) chi(r) W(r / M0), W = bump_unit.
cplx short_twisted_sum(const CuspForm& g, const DirichletCharacter& chi,
                       double M0);

// Least n <= n_max with (n, p) = 1 and |lambda_f(n) - lambda_g(n) chi(n)| >
// 1e-9.
std::optional<i64> first_distinguishing_index(const CuspForm& f,
                                              const CuspForm& g,
                                              const DirichletCharacter& chi,
                                              i64 n_max);

}  // namespace subconvex
