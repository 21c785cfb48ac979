#include "subconvex/voronoi.hpp"

#include <cmath>
#include <numeric>

#include "subconvex/errors.hpp"
#include "subconvex/parallel.hpp"

namespace subconvex {

namespace {

// i^k for even k
double i_power(int weight) { return (weight / 2) % 2 == 0 ? 1.0 : -1.0; }

// int_lo^hi weight(y) J_order(scale sqrt(y)) dy, split into pieces of about
// two oscillations each before adaptive refinement.
template <class Weight>
cplx bessel_transform(int order, double scale, double extra_cycles,
                      Weight&& weight, double lo, double hi, double tol) {
  const double cycles =
      scale * (std::sqrt(hi) - std::sqrt(lo)) / kTwoPi + extra_cycles;
  std::size_t pieces = 1;
  while (static_cast<double>(pieces) < cycles / 2.0) pieces <<= 1U;
  const double width = (hi - lo) / static_cast<double>(pieces);
  const double piece_tol = tol / static_cast<double>(pieces);
  auto integrand = [&](double y) {
    return weight(y) * bessel_j(order, scale * std::sqrt(y));
  };
  cplx total{0.0, 0.0};
  for (std::size_t i = 0; i < pieces; ++i) {
    const double a = lo + width * static_cast<double>(i);
    const double b = i + 1 == pieces ? hi : a + width;
    total += integrate(integrand, a, b, piece_tol);
  }
  return total;
}

void check_coprime(i64 a, i64 q) {
  if (q < 1) throw DomainError("modulus q must be positive");
  if (std::gcd(mod_floor(a, q), q) != 1) {
    throw NonInvertible("gcd(" + std::to_string(a) + ", " + std::to_string(q) +
                        ") != 1");
  }
}

}  // namespace

std::string to_string(Convention c) {
  return c == Convention::plus ? "plus" : "minus";
}

Convention convention_from_string(const std::string& name) {
  if (name == "plus") return Convention::plus;
  if (name == "minus") return Convention::minus;
  throw DomainError("unknown convention '" + name + "' (plus|minus)");
}

void VoronoiJob::validate() const {
  if (form == nullptr) throw DomainError("VoronoiJob without a form");
  check_coprime(a, q);
  if (Y < 1.0) throw DomainError("VoronoiJob: Y must be >= 1");
  if (truncation < 1) throw DomainError("VoronoiJob: truncation must be >= 1");
}

VoronoiJob make_voronoi_job(const CuspForm& form, i64 a, i64 q, double Y,
                            WindowKind window, double x_shift,
                            int truncation) {
  VoronoiJob job;
  job.form = &form;
  job.a = a;
  job.q = q;
  job.Y = Y;
  job.window = window;
  job.x_shift = x_shift;
  job.truncation = truncation;
  job.validate();
  return job;
}

i64 mod_inverse_checked(i64 a, i64 q) { return mod_inverse(a, q); }

std::size_t dual_length(const VoronoiJob& job) {
  const double q = static_cast<double>(job.q);
  const double base = std::ceil(q * q * std::log(q * job.Y) / job.Y);
  return static_cast<std::size_t>(job.truncation) *
         static_cast<std::size_t>(std::max(1.0, base));
}

cplx direct_side(const VoronoiJob& job) {
  job.validate();
  const SmoothWindow w(job.window);
  const double lo = w.support_lo() * job.Y;
  const double hi = w.support_hi() * job.Y;
  const auto n_lo = static_cast<i64>(std::max(1.0, std::ceil(lo)));
  const auto n_hi = static_cast<i64>(std::floor(hi));
  if (n_hi < n_lo) return {0.0, 0.0};
  job.form->require(static_cast<std::size_t>(n_hi));
  cplx sum{0.0, 0.0};
  for (i64 n = n_lo; n <= n_hi; ++n) {
    const double v = w(static_cast<double>(n) / job.Y);
    if (v == 0.0) continue;
    sum += job.form->lambda(static_cast<std::size_t>(n)) * v *
           unit_exp_frac(job.a * n, job.q) *
           unit_exp(job.x_shift * static_cast<double>(n));
  }
  return sum;
}

std::vector<cplx> hankel_transforms(const VoronoiJob& job, std::size_t terms) {
  job.validate();
  job.form->require(terms);
  const SmoothWindow w(job.window);
  const double lo = w.support_lo() * job.Y;
  const double hi = w.support_hi() * job.Y;
  const int order = job.form->weight() - 1;
  const double q = static_cast<double>(job.q);
  const double x_cycles = std::fabs(job.x_shift) * (hi - lo);
  auto weight = [&](double y) {
    return w(y / job.Y) * unit_exp(job.x_shift * y);
  };
  std::vector<cplx> out(terms);
  parallel_for(terms, job.threads, [&](std::size_t idx) {
    const double n = static_cast<double>(idx + 1);
    const double scale = 4.0 * std::numbers::pi * std::sqrt(n) / q;
    out[idx] = bessel_transform(order, scale, x_cycles, weight, lo, hi,
                                job.quad_tol);
  });
  return out;
}

std::vector<cplx> hankel_terms_from_transforms(const VoronoiJob& job,
                                               const std::vector<cplx>& V) {
  job.validate();
  job.form->require(V.size());
  const i64 a_inv = mod_inverse(job.a, job.q);
  const cplx prefactor =
      kTwoPi * i_power(job.form->weight()) / static_cast<double>(job.q);
  std::vector<cplx> out(V.size());
  for (std::size_t idx = 0; idx < V.size(); ++idx) {
    const i64 n = static_cast<i64>(idx) + 1;
    out[idx] = prefactor * job.form->lambda(idx + 1) *
               unit_exp_frac(-a_inv * n, job.q) * V[idx];
  }
  return out;
}

std::vector<cplx> hankel_terms(const VoronoiJob& job, std::size_t terms) {
  return hankel_terms_from_transforms(job, hankel_transforms(job, terms));
}

cplx hankel_side_from_transforms(const VoronoiJob& job,
                                 const std::vector<cplx>& V) {
  cplx sum{0.0, 0.0};
  for (const cplx& t : hankel_terms_from_transforms(job, V)) sum += t;
  return sum;
}

cplx hankel_side(const VoronoiJob& job) {
  return hankel_side_from_transforms(
      job, hankel_transforms(job, dual_length(job)));
}

std::size_t minimal_dual_length_from_transforms(const VoronoiJob& job,
                                                const std::vector<cplx>& V,
                                                double tol) {
  const cplx direct = direct_side(job);
  const std::vector<cplx> terms = hankel_terms_from_transforms(job, V);
  const double threshold = tol * (std::abs(direct) + 1.0);
  std::vector<cplx> partial(terms.size());
  cplx sum{0.0, 0.0};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    sum += terms[i];
    partial[i] = sum;
  }
  // Smallest T from which every longer partial sum stays within tolerance.
  std::size_t answer = terms.size() + 1;
  for (std::size_t i = terms.size(); i-- > 0;) {
    if (std::abs(partial[i] - direct) > threshold) break;
    answer = i + 1;
  }
  return answer;
}

std::size_t minimal_dual_length(const VoronoiJob& job, double tol) {
  return minimal_dual_length_from_transforms(
      job, hankel_transforms(job, dual_length(job)), tol);
}

cplx twisted_T_direct(const CuspForm& g, const DirichletCharacter& chi,
                      const TwistedParams& params) {
  check_coprime(params.a, params.q);
  if (std::gcd(params.q, chi.modulus()) != 1) {
    throw DomainError("twisted T: q must be coprime to the character modulus");
  }
  if (params.N <= 0) return {0.0, 0.0};
  g.require(static_cast<std::size_t>(3 * params.N));
  const SmoothWindow h_star(WindowKind::plateau_half_52);
  const double N = static_cast<double>(params.N);
  cplx sum{0.0, 0.0};
  for (i64 m = std::max<i64>(1, params.N / 2); 2 * m <= 5 * params.N; ++m) {
    const double w = h_star(static_cast<double>(m) / N);
    if (w == 0.0) continue;
    sum += g.lambda(static_cast<std::size_t>(m)) * w * chi(m) *
           unit_exp_frac(-params.a * m, params.q) *
           unit_exp(-params.x * static_cast<double>(m));
  }
  return sum;
}

std::size_t twisted_dual_length(i64 p, i64 q, i64 N, int truncation) {
  const double pq = static_cast<double>(p * q);
  const double Nd = static_cast<double>(N);
  const double base = std::ceil(pq * pq * std::log(pq * Nd) / Nd);
  return static_cast<std::size_t>(truncation) *
         static_cast<std::size_t>(std::max(1.0, base));
}

std::vector<cplx> twisted_bessel_integrals(const CuspForm& g, i64 p,
                                           const TwistedParams& params,
                                           std::size_t M, double quad_tol,
                                           unsigned threads) {
  g.require(M);
  const SmoothWindow h_star(WindowKind::plateau_half_52);
  const double N = static_cast<double>(params.N);
  const double lo = h_star.support_lo() * N;
  const double hi = h_star.support_hi() * N;
  const double pq = static_cast<double>(p * params.q);
  const int order = g.weight() - 1;
  const double x_cycles = std::fabs(params.x) * (hi - lo);
  auto weight = [&](double y) {
    return h_star(y / N) * unit_exp(-params.x * y);
  };
  std::vector<cplx> u(M);
  parallel_for(M, threads, [&](std::size_t idx) {
    const double m = static_cast<double>(idx + 1);
    const double scale = 4.0 * std::numbers::pi * std::sqrt(m) / pq;
    u[idx] = bessel_transform(order, scale, x_cycles, weight, lo, hi, quad_tol);
  });
  return u;
}

cplx twisted_T_from_integrals(const CuspForm& g, const DirichletCharacter& chi,
                              const TwistedParams& params,
                              const std::vector<cplx>& u,
                              Convention convention) {
  const i64 p = chi.modulus();
  const i64 q = params.q;
  const i64 pq = p * q;
  g.require(u.size());
  const DirichletCharacter chibar = chi.conj();
  cplx outer{0.0, 0.0};
  for (i64 b = 1; b < p; ++b) {
    const i64 c = convention == Convention::plus ? params.a * p + b * q
                                                 : params.a * p - b * q;
    i64 c_inv = 0;
    try {
      c_inv = mod_inverse(c, pq);
    } catch (const NonInvertible&) {
      throw ConsistencyError("c = " + std::to_string(c) +
                             " not invertible mod " + std::to_string(pq));
    }
    cplx inner{0.0, 0.0};
    for (std::size_t idx = 0; idx < u.size(); ++idx) {
      const i64 m = static_cast<i64>(idx) + 1;
      inner += g.lambda(idx + 1) * unit_exp_frac(c_inv * m, pq) * u[idx];
    }
    outer += chibar(b) * inner;
  }
  const cplx prefactor = kTwoPi * i_power(g.weight()) /
                         (gauss_sum(chibar) * static_cast<double>(pq));
  return prefactor * outer;
}

cplx twisted_T_voronoi(const CuspForm& g, const DirichletCharacter& chi,
                       const TwistedParams& params,
                       const TwistedOptions& opts) {
  check_coprime(params.a, params.q);
  if (std::gcd(params.q, chi.modulus()) != 1) {
    throw DomainError("twisted T: q must be coprime to the character modulus");
  }
  if (!chi.is_primitive()) {
    throw NonPrimitive("twisted T needs a primitive character");
  }
  if (params.N <= 0) return {0.0, 0.0};
  g.require(static_cast<std::size_t>(3 * params.N));
  const std::size_t M =
      twisted_dual_length(chi.modulus(), params.q, params.N, opts.truncation);
  const auto u = twisted_bessel_integrals(g, chi.modulus(), params, M,
                                          opts.quad_tol, opts.threads);
  return twisted_T_from_integrals(g, chi, params, u, opts.convention);
}

}  // namespace subconvex
