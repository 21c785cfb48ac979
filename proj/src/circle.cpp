#include "subconvex/circle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "subconvex/errors.hpp"
#include "subconvex/parallel.hpp"
#include "subconvex/special.hpp"

namespace subconvex {

namespace {

void check_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw DomainError("delta must lie in (0, 1/2)");
  }
}

i64 totient_sum(const std::vector<i64>& phi) {
  i64 total = 0;
  for (i64 q : phi) total += totient(q);
  return total;
}

struct Event {
  double x;
  int step;
};

// Piecewise-constant sweep of the arc count.  visit(lo, hi, count) is
// called for every maximal piece between consecutive breakpoints, with 0
// and 1 always included as breakpoints.
template <class Visit>
void sweep(const ModuliFamily& family, Visit&& visit) {
  std::vector<Event> events;
  events.reserve(2 * family.arc_count() + 2);
  for (i64 q : family.phi) {
    for (i64 d = 0; d < q; ++d) {
      if (std::gcd(d, q) != 1) continue;
      const double centre = static_cast<double>(d) / static_cast<double>(q);
      events.push_back({centre - family.delta, +1});
      events.push_back({centre + family.delta, -1});
    }
  }
  events.push_back({0.0, 0});
  events.push_back({1.0, 0});
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    return a.x < b.x || (a.x == b.x && a.step > b.step);
  });
  long count = 0;
  for (std::size_t i = 0; i + 1 < events.size(); ++i) {
    count += events[i].step;
    const double lo = events[i].x;
    const double hi = events[i + 1].x;
    if (hi > lo) visit(lo, hi, count);
  }
}

}  // namespace

ModuliFamily build_family(i64 p, i64 q_min, i64 q_max, double delta) {
  if (!is_odd_prime(p)) {
    throw InvalidModulus("p = " + std::to_string(p) + " is not an odd prime");
  }
  if (q_min < 1 || q_min > q_max) {
    throw DomainError("need 1 <= q_min <= q_max");
  }
  check_delta(delta);
  ModuliFamily family;
  family.p_avoid = p;
  family.delta = delta;
  family.q_nominal = static_cast<double>(q_min);
  for (i64 q = q_min; q <= q_max; ++q) {
    if (std::gcd(q, p) == 1) family.phi.push_back(q);
  }
  if (family.phi.empty()) {
    throw EmptyFamily("no modulus in [" + std::to_string(q_min) + ", " +
                      std::to_string(q_max) + "] is coprime to " +
                      std::to_string(p));
  }
  family.L = totient_sum(family.phi);
  return family;
}

ModuliFamily family_from_moduli(std::vector<i64> moduli, double delta,
                                i64 p_avoid) {
  if (delta <= 0.0 || delta > 0.5) {
    throw DomainError("delta must lie in (0, 1/2]");
  }
  std::sort(moduli.begin(), moduli.end());
  moduli.erase(std::unique(moduli.begin(), moduli.end()), moduli.end());
  if (moduli.empty()) throw EmptyFamily("empty list of moduli");
  for (i64 q : moduli) {
    if (q < 1) throw DomainError("moduli must be positive");
    if (p_avoid != 0 && std::gcd(q, p_avoid) != 1) {
      throw DomainError("modulus " + std::to_string(q) +
                        " shares a factor with " + std::to_string(p_avoid));
    }
  }
  ModuliFamily family;
  family.p_avoid = p_avoid;
  family.phi = std::move(moduli);
  family.delta = delta;
  family.q_nominal = static_cast<double>(family.phi.back());
  family.L = totient_sum(family.phi);
  return family;
}

ModuliFamily build_product_family(i64 p, double eta, double delta) {
  if (!is_odd_prime(p) || p < 11) {
    throw DomainError("build_product_family needs an odd prime p >= 11");
  }
  if (!(eta > 0.0 && eta < 1.0)) throw DomainError("eta must lie in (0, 1)");
  check_delta(delta);

  const double lp = std::log(static_cast<double>(p));
  ProductStructure ps;
  ps.q1_center = std::exp(lp * (0.2 + eta / 10.0));
  ps.q3_center = std::exp(lp * (0.4 + eta / 5.0));
  ps.q4_center = ps.q3_center;

  auto window_primes = [p](double centre) {
    std::vector<i64> out;
    for (i64 q : primes_in(static_cast<i64>(std::ceil(centre)),
                           static_cast<i64>(std::floor(2.0 * centre)))) {
      if (q != p) out.push_back(q);
    }
    return out;
  };
  const std::vector<i64> w1 = window_primes(ps.q1_center);
  const std::vector<i64> w3 = window_primes(ps.q3_center);

  // Phi1 keeps the primes below the Q3 window; if there are none it takes
  // the smallest prime of its own window.  The rest of the Q3 window is
  // dealt alternately to Phi3 and Phi4.
  for (i64 q : w1) {
    if (static_cast<double>(q) < ps.q3_center) ps.phi1.push_back(q);
  }
  if (ps.phi1.empty() && !w1.empty()) ps.phi1.push_back(w1.front());
  bool to_three = true;
  for (i64 q : w3) {
    if (std::find(ps.phi1.begin(), ps.phi1.end(), q) != ps.phi1.end()) continue;
    (to_three ? ps.phi3 : ps.phi4).push_back(q);
    to_three = !to_three;
  }
  if (ps.phi1.empty() || ps.phi3.empty() || ps.phi4.empty()) {
    throw InsufficientPrimes(
        "dyadic windows around Q1 = " + std::to_string(ps.q1_center) +
        ", Q3 = Q4 = " + std::to_string(ps.q3_center) +
        " do not hold three disjoint non-empty prime lists for p = " +
        std::to_string(p));
  }

  ModuliFamily family;
  family.p_avoid = p;
  family.delta = delta;
  for (i64 a : ps.phi1) {
    for (i64 b : ps.phi3) {
      for (i64 c : ps.phi4) family.phi.push_back(a * b * c);
    }
  }
  std::sort(family.phi.begin(), family.phi.end());
  family.L = totient_sum(family.phi);
  family.q_nominal = ps.q1_center * ps.q3_center * ps.q4_center;
  family.product = std::move(ps);
  return family;
}

double i_tilde(const ModuliFamily& family, double x) {
  long count = 0;
  for (i64 q : family.phi) {
    const double qd = static_cast<double>(q);
    i64 d_lo = std::max<i64>(0, static_cast<i64>(std::ceil((x - family.delta) * qd)) - 1);
    i64 d_hi = std::min<i64>(q - 1, static_cast<i64>(std::floor((x + family.delta) * qd)) + 1);
    for (i64 d = d_lo; d <= d_hi; ++d) {
      if (std::gcd(d, q) != 1) continue;
      const double centre = static_cast<double>(d) / qd;
      if (std::fabs(x - centre) <= family.delta) ++count;
    }
  }
  return static_cast<double>(count) /
         (2.0 * family.delta * static_cast<double>(family.L));
}

double l2_error(const ModuliFamily& family) {
  const double height = 1.0 / (2.0 * family.delta * static_cast<double>(family.L));
  double total = 0.0;
  sweep(family, [&](double lo, double hi, long count) {
    const double indicator = (lo >= 0.0 && hi <= 1.0) ? 1.0 : 0.0;
    const double diff = indicator - height * static_cast<double>(count);
    total += diff * diff * (hi - lo);
  });
  return total;
}

double i_tilde_mass(const ModuliFamily& family) {
  const double height = 1.0 / (2.0 * family.delta * static_cast<double>(family.L));
  double total = 0.0;
  sweep(family, [&](double lo, double hi, long count) {
    total += height * static_cast<double>(count) * (hi - lo);
  });
  return total;
}

double l2_bound_scale(const ModuliFamily& family) {
  const double L = static_cast<double>(family.L);
  return family.q_nominal * family.q_nominal / (family.delta * L * L);
}

cplx s_direct(const CuspForm& f, const CuspForm& g,
              const DirichletCharacter& chi, i64 N) {
  if (N <= 0) return {0.0, 0.0};
  const auto need = static_cast<std::size_t>(2 * N);
  f.require(need);
  g.require(need);
  const SmoothWindow h(WindowKind::bump_12);
  const double Nd = static_cast<double>(N);
  cplx sum{0.0, 0.0};
  for (i64 n = N + 1; n < 2 * N; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const double w = h(static_cast<double>(n) / Nd);
    sum += f.lambda(idx) * g.lambda(idx) * w * chi(n);
  }
  return sum;
}

double s_tilde_error_scale(i64 N, const ModuliFamily& family) {
  return static_cast<double>(N) * std::sqrt(l2_bound_scale(family));
}

cplx s_tilde(const CuspForm& f, const CuspForm& g,
             const DirichletCharacter& chi, i64 N, const ModuliFamily& family,
             const CircleOptions& opts) {
  if (opts.nodes < 2) throw DomainError("s_tilde: need at least 2 nodes");
  if (N <= 0) return {0.0, 0.0};
  const auto need = static_cast<std::size_t>(3 * N);
  f.require(need);
  g.require(need);

  const double Nd = static_cast<double>(N);
  const SmoothWindow h(WindowKind::bump_12);
  const SmoothWindow h_star(WindowKind::plateau_half_52);

  // A runs over n in (N, 2N), B over m in (N/2, 5N/2).
  const i64 a_lo = N + 1;
  std::vector<double> a_coef;
  for (i64 n = a_lo; n < 2 * N; ++n) {
    a_coef.push_back(f.lambda(static_cast<std::size_t>(n)) *
                     h(static_cast<double>(n) / Nd));
  }
  const i64 b_lo = N / 2;
  std::vector<cplx> b_coef;
  for (i64 m = b_lo; 2 * m <= 5 * N; ++m) {
    const double w = m >= 1 ? h_star(static_cast<double>(m) / Nd) : 0.0;
    b_coef.push_back(m >= 1 ? g.lambda(static_cast<std::size_t>(m)) * w * chi(m)
                            : cplx{0.0, 0.0});
  }

  auto A = [&](double x) {
    cplx z = unit_exp(x * static_cast<double>(a_lo));
    const cplx step = unit_exp(x);
    cplx sum{0.0, 0.0};
    for (double c : a_coef) {
      sum += c * z;
      z *= step;
    }
    return sum;
  };
  auto B = [&](double x) {
    cplx z = unit_exp(-x * static_cast<double>(b_lo));
    const cplx step = unit_exp(-x);
    cplx sum{0.0, 0.0};
    for (const cplx& c : b_coef) {
      sum += c * z;
      z *= step;
    }
    return sum;
  };

  const GaussLegendreRule rule = gauss_legendre(opts.nodes);
  const double delta = family.delta;
  std::vector<cplx> per_modulus(family.phi.size());
  parallel_for(family.phi.size(), opts.threads, [&](std::size_t idx) {
    const i64 q = family.phi[idx];
    cplx acc{0.0, 0.0};
    for (i64 a = 0; a < q; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double centre = static_cast<double>(a) / static_cast<double>(q);
      for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        const double x = centre + delta * rule.nodes[k];
        acc += rule.weights[k] * delta * A(x) * B(x);
      }
    }
    per_modulus[idx] = acc;
  });
  cplx total{0.0, 0.0};
  for (const cplx& v : per_modulus) total += v;
  return total / (2.0 * delta * static_cast<double>(family.L));
}

}  // namespace subconvex
