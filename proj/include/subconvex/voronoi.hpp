#pragma once

// GL(2) Voronoi summation for level-one holomorphic forms of weight k:
//
//   sum_n lambda(n) e(an/q) v(n)
//     = (2 pi i^k / q) sum_n lambda(n) e(-a' n/q) int_0^oo v(y) J_{k-1}(4 pi sqrt(ny)/q) dy
//
// with a a' = 1 mod q.  Both sides are evaluated independently; the dual
// sum is cut at truncation * ceil(q^2 log(qY) / Y).
//
// The twisted sum T(a, q, x) carries a character mod p.  Expanding chi in
// additive characters and applying Voronoi with modulus pq gives
//
//   T = 2 pi i^k / (tau(conj chi) p q) sum*_b conj chi(b) sum_m lambda(m) e(c' m/(pq)) u(m)
//
// with c = a p -/+ b q, c' its inverse mod pq and u(m) the Bessel integral
// of h*(y/N) e(-xy).

#include "subconvex/characters.hpp"
#include "subconvex/forms.hpp"
#include "subconvex/special.hpp"

namespace subconvex {

// The dual sums converge slowly because the window transforms decay only
// sub-exponentially; these multipliers reach 1e-6 (Voronoi) and 1e-5
// (twisted) on the default grids.
inline constexpr int kDefaultTruncation = 3000;
inline constexpr int kDefaultTwistedTruncation = 400;
inline constexpr double kVoronoiQuadTol = 1e-11;

// c = a p + b q or c = a p - b q.
enum class Convention { plus, minus };

std::string to_string(Convention c);
Convention convention_from_string(const std::string& name);

struct VoronoiJob {
  const CuspForm* form = nullptr;
  i64 a = 0;
  i64 q = 1;
  WindowKind window = WindowKind::bump_12;
  double Y = 1.0;  // v(y) = window(y / Y)
  double x_shift = 0.0;
  int truncation = kDefaultTruncation;
  double quad_tol = kVoronoiQuadTol;
  unsigned threads = 0;

  // Throws on gcd(a, q) != 1, Y < 1 or a missing form.
  void validate() const;
};

VoronoiJob make_voronoi_job(const CuspForm& form, i64 a, i64 q, double Y,
                            WindowKind window = WindowKind::bump_12,
                            double x_shift = 0.0,
                            int truncation = kDefaultTruncation);

i64 mod_inverse_checked(i64 a, i64 q);

// truncation * ceil(q^2 log(qY) / Y), at least truncation.
std::size_t dual_length(const VoronoiJob& job);

cplx direct_side(const VoronoiJob& job);
cplx hankel_side(const VoronoiJob& job);

// V(n) = int v(y) e(xy) J_{k-1}(4 pi sqrt(ny)/q) dy for n = 1..T (index
// n-1).  V does not depend on a, so one table serves every residue.
std::vector<cplx> hankel_transforms(const VoronoiJob& job, std::size_t terms);

// Per-term contributions of the dual sum, index n-1 for n = 1..T.
std::vector<cplx> hankel_terms(const VoronoiJob& job, std::size_t terms);
std::vector<cplx> hankel_terms_from_transforms(const VoronoiJob& job,
                                               const std::vector<cplx>& V);
cplx hankel_side_from_transforms(const VoronoiJob& job,
                                 const std::vector<cplx>& V);

// Smallest T with |direct - partial_T| <= tol * (|direct| + 1).
// Returns T + 1 when even the full table of T terms misses.
std::size_t minimal_dual_length(const VoronoiJob& job, double tol);
std::size_t minimal_dual_length_from_transforms(const VoronoiJob& job,
                                                const std::vector<cplx>& V,
                                                double tol);

struct TwistedParams {
  i64 a = 1;
  i64 q = 1;
  double x = 0.0;
  i64 N = 1;
};

cplx twisted_T_direct(const CuspForm& g, const DirichletCharacter& chi,
                      const TwistedParams& params);

struct TwistedOptions {
  int truncation = kDefaultTwistedTruncation;
  Convention convention = Convention::minus;
  double quad_tol = kVoronoiQuadTol;
  unsigned threads = 0;
};

// truncation * ceil((pq)^2 log(pqN) / N)
std::size_t twisted_dual_length(i64 p, i64 q, i64 N, int truncation);

// u(m) for m = 1..M (index m-1).
std::vector<cplx> twisted_bessel_integrals(const CuspForm& g, i64 p,
                                           const TwistedParams& params,
                                           std::size_t M, double quad_tol,
                                           unsigned threads);

cplx twisted_T_voronoi(const CuspForm& g, const DirichletCharacter& chi,
                       const TwistedParams& params,
                       const TwistedOptions& opts = {});

// Same as twisted_T_voronoi but reusing precomputed u(m).
cplx twisted_T_from_integrals(const CuspForm& g, const DirichletCharacter& chi,
                              const TwistedParams& params,
                              const std::vector<cplx>& u,
                              Convention convention);

}  // namespace subconvex
