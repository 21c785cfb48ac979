#include "subconvex/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <ostream>
#include <set>

#include "subconvex/characters.hpp"
#include "subconvex/circle.hpp"
#include "subconvex/errors.hpp"
#include "subconvex/exponent.hpp"
#include "subconvex/forms.hpp"
#include "subconvex/special.hpp"
#include "subconvex/sums.hpp"
#include "subconvex/voronoi.hpp"

namespace subconvex {

namespace {

std::string str(i64 v) { return std::to_string(v); }

std::string str(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::vector<i64> odd_primes_upto(i64 hi) { return primes_in(3, hi); }

i64 totient_of_list(const std::vector<i64>& moduli) {
  i64 total = 0;
  for (i64 q : moduli) total += totient(q);
  return total;
}

std::vector<i64> reduced_residues(i64 q) {
  std::vector<i64> out;
  for (i64 a = 0; a < q; ++a) {
    if (std::gcd(a, q) == 1) out.push_back(a);
  }
  return out;
}

// Row whose error is measured against an explicit scale instead of the
// operands themselves.
VerificationReport scaled_report(std::string suite, std::string name,
                                 Params params, cplx lhs, cplx rhs,
                                 double scale, double tol, bool hard = true) {
  VerificationReport r = make_identity_report(std::move(suite), std::move(name),
                                              std::move(params), lhs, rhs, tol,
                                              hard);
  r.rel_error = r.abs_error / scale;
  r.passed = r.rel_error <= tol;
  return r;
}

// Exact rational comparison shown as two doubles.
VerificationReport exact_report(std::string suite, std::string name,
                                Params params, const Rational& got,
                                const Rational& want) {
  VerificationReport r = make_identity_report(
      std::move(suite), std::move(name), std::move(params),
      {to_double(got), 0.0}, {to_double(want), 0.0}, 0.0);
  r.passed = got == want;
  r.note = format_rational(got) + " vs " + format_rational(want);
  return r;
}

class FormCache {
 public:
  explicit FormCache(std::size_t cap) : cap_(cap) {}

  const CuspForm& get(int weight, std::size_t n) {
    auto& slot = forms_[weight];
    if (!slot || slot->n_max() < n) {
      // Round up so that later, slightly longer requests reuse the table.
      const std::size_t size = std::min(cap_, ((n + 4095) / 4096) * 4096);
      slot = std::make_unique<CuspForm>(
          build_form(weight, std::max(size, n), FormOptions{cap_}));
    }
    return *slot;
  }

 private:
  std::size_t cap_;
  std::map<int, std::unique_ptr<CuspForm>> forms_;
};

struct Context {
  const Config& cfg;
  FormCache forms;
  std::vector<VerificationReport>& out;
  std::vector<std::string>& notes;
  std::ostream* log;
  std::string suite;

  void add(VerificationReport r) { out.push_back(std::move(r)); }

  // Runs one check; a thrown module error becomes a failed row.
  void guarded(const std::string& name, const Params& params,
               const std::function<void()>& body, bool hard = true) {
    try {
      body();
    } catch (const std::exception& e) {
      add(make_error_report(suite, name, params, e.what(), hard));
    }
  }
};

// ---------------------------------------------------------------------------

void run_forms(Context& ctx) {
  const std::size_t n = ctx.cfg.hecke_limit;
  const std::string& s = ctx.suite;
  static const i64 tau[] = {1,      -24,    252,   -1472,   4830,
                            -6048,  -16744, 84480, -113643, -115920};
  ctx.guarded("tau_fixture", {}, [&] {
    const CuspForm& delta = ctx.forms.get(12, n);
    for (std::size_t i = 0; i < 10; ++i) {
      ctx.add(make_identity_report(
          s, "tau_fixture", {{"n", str(static_cast<i64>(i + 1))}},
          {delta.raw(i + 1).get_d(), 0.0},
          {static_cast<double>(tau[i]), 0.0}, 0.0));
    }
  });
  ctx.guarded("weight_fixture", {}, [&] {
    const CuspForm f16 = build_form(16, 8);
    const CuspForm f18 = build_form(18, 8);
    ctx.add(make_identity_report(s, "weight_fixture",
                                 {{"weight", "16"}, {"n", "2"}},
                                 {f16.raw(2).get_d(), 0.0}, {216.0, 0.0}, 0.0));
    ctx.add(make_identity_report(s, "weight_fixture",
                                 {{"weight", "18"}, {"n", "2"}},
                                 {f18.raw(2).get_d(), 0.0}, {-528.0, 0.0},
                                 0.0));
  });

  for (int weight : {12, 16}) {
    const Params wp = {{"weight", std::to_string(weight)},
                       {"n_max", str(static_cast<i64>(n))}};
    ctx.guarded("hecke_multiplicativity", wp, [&] {
      const CuspForm& f = ctx.forms.get(weight, n);
      i64 cases = 0, ok = 0;
      std::string first_bad;
      for (std::size_t a = 2; a * a < n; ++a) {
        for (std::size_t b = a + 1; a * b <= n; ++b) {
          if (std::gcd(a, b) != 1) continue;
          ++cases;
          if (f.raw(a) * f.raw(b) == f.raw(a * b)) {
            ++ok;
          } else if (first_bad.empty()) {
            first_bad = "fails at m=" + std::to_string(a) +
                        " n=" + std::to_string(b);
          }
        }
      }
      auto r = make_identity_report(s, "hecke_multiplicativity", wp,
                                    {static_cast<double>(ok), 0.0},
                                    {static_cast<double>(cases), 0.0}, 0.0);
      r.note = first_bad;
      ctx.add(r);
    });
    ctx.guarded("hecke_prime_power", wp, [&] {
      const CuspForm& f = ctx.forms.get(weight, n);
      i64 cases = 0, ok = 0;
      for (i64 l : primes_in(2, static_cast<i64>(n))) {
        mpz_class lk;
        mpz_ui_pow_ui(lk.get_mpz_t(), static_cast<unsigned long>(l),
                      static_cast<unsigned long>(weight - 1));
        std::size_t prev = 1, cur = static_cast<std::size_t>(l);
        while (cur * static_cast<std::size_t>(l) <= n) {
          const std::size_t next = cur * static_cast<std::size_t>(l);
          ++cases;
          if (f.raw(next) == f.raw(static_cast<std::size_t>(l)) * f.raw(cur) -
                                 lk * f.raw(prev)) {
            ++ok;
          }
          prev = cur;
          cur = next;
        }
      }
      ctx.add(make_identity_report(s, "hecke_prime_power", wp,
                                   {static_cast<double>(ok), 0.0},
                                   {static_cast<double>(cases), 0.0}, 0.0));
    });
    ctx.guarded("deligne_bound", wp, [&] {
      const CuspForm& f = ctx.forms.get(weight, n);
      double worst = 0.0;
      i64 worst_n = 1;
      for (std::size_t k = 1; k <= n; ++k) {
        const double ratio =
            std::fabs(f.lambda(k)) /
            static_cast<double>(divisor_count(static_cast<i64>(k)));
        if (ratio > worst) {
          worst = ratio;
          worst_n = static_cast<i64>(k);
        }
      }
      const i64 d = divisor_count(worst_n);
      Params p = wp;
      p.emplace_back("worst_n", str(worst_n));
      ctx.add(make_bound_report(s, "deligne_bound", p,
                                std::fabs(f.lambda(static_cast<std::size_t>(worst_n))),
                                static_cast<double>(d), 1.0, true));
    });
  }

  const Params cp = {{"weight", "12"}, {"n_max", "1000"}};
  ctx.guarded("tau_sigma11_mod_691", cp, [&] {
    const CuspForm& f = ctx.forms.get(12, 1000);
    i64 ok = 0;
    for (std::size_t k = 1; k <= 1000; ++k) {
      mpz_class r = f.raw(k) % 691;
      if (r < 0) r += 691;
      if (r.get_si() == sigma_mod(static_cast<i64>(k), 11, 691)) ++ok;
    }
    ctx.add(make_identity_report(s, "tau_sigma11_mod_691", cp,
                                 {static_cast<double>(ok), 0.0}, {1000.0, 0.0},
                                 0.0));
  });

  const Params dp = {{"f", "12"}, {"g", "16"}, {"p", "3"}, {"chi", "1"},
                     {"n_max", "100"}};
  ctx.guarded("first_distinguishing_index", dp, [&] {
    const CuspForm& f = ctx.forms.get(12, 100);
    const CuspForm& g = ctx.forms.get(16, 100);
    const auto got = first_distinguishing_index(f, g, DirichletCharacter(3, 1), 100);
    ctx.add(make_identity_report(s, "first_distinguishing_index", dp,
                                 {got ? static_cast<double>(*got) : 0.0, 0.0},
                                 {2.0, 0.0}, 0.0));
  });
}

void run_characters(Context& ctx) {
  for (i64 p : odd_primes_upto(101)) {
    const Params pp = {{"p", str(p)}};
    ctx.guarded("orthogonality", pp, [&] {
      double worst = 0.0;
      cplx worst_sum{0.0, 0.0};
      double worst_mult = 0.0;
      cplx mult_l{0.0, 0.0}, mult_r{0.0, 0.0};
      double worst_conj = 0.0;
      for (const auto& chi : enumerate_characters(p)) {
        if (chi.is_primitive()) {
          cplx sum{0.0, 0.0};
          for (i64 k = 0; k < p; ++k) sum += chi(k);
          if (std::abs(sum) >= worst) {
            worst = std::abs(sum);
            worst_sum = sum;
          }
        }
        const DirichletCharacter bar = chi.conj();
        for (i64 a = 1; a < p; ++a) {
          worst_conj = std::max(worst_conj, std::abs(bar(a) - std::conj(chi(a))));
          for (i64 b = a; b < p; ++b) {
            const cplx l = chi(a * b);
            const cplx r = chi(a) * chi(b);
            if (std::abs(l - r) >= worst_mult) {
              worst_mult = std::abs(l - r);
              mult_l = l;
              mult_r = r;
            }
          }
        }
      }
      ctx.add(make_identity_report(ctx.suite, "orthogonality", pp, worst_sum,
                                   {0.0, 0.0}, 1e-12));
      ctx.add(make_identity_report(ctx.suite, "complete_multiplicativity", pp,
                                   mult_l, mult_r, 1e-12));
      ctx.add(scaled_report(ctx.suite, "conjugate_values", pp,
                            {worst_conj, 0.0}, {0.0, 0.0}, 1.0, 1e-12));
    });
  }
}

void run_gauss(Context& ctx) {
  const double tol = ctx.cfg.gauss_tol;
  for (i64 p : odd_primes_upto(101)) {
    const Params pp = {{"p", str(p)}};
    ctx.guarded("gauss_norm", pp, [&] {
      const auto chars = primitive_characters(p);
      double worst_norm = -1.0, worst_prod = -1.0, worst_exp = -1.0;
      VerificationReport norm, prod, expansion;
      for (const auto& chi : chars) {
        const cplx tau = gauss_sum(chi);
        const cplx tau_bar = gauss_sum(chi.conj());
        Params cp = pp;
        cp.emplace_back("chi", str(chi.index()));
        auto r1 = make_identity_report(ctx.suite, "gauss_norm", cp,
                                       {std::norm(tau), 0.0},
                                       {static_cast<double>(p), 0.0}, tol);
        if (r1.rel_error > worst_norm) {
          worst_norm = r1.rel_error;
          norm = r1;
        }
        auto r2 = make_identity_report(
            ctx.suite, "gauss_conjugate_product", cp, tau * tau_bar,
            {static_cast<double>(chi.parity() * p), 0.0}, tol);
        if (r2.rel_error > worst_prod) {
          worst_prod = r2.rel_error;
          prod = r2;
        }
        for (i64 m = 0; m <= 3 * p; ++m) {
          Params mp = cp;
          mp.emplace_back("m", str(m));
          auto r3 = make_identity_report(ctx.suite, "additive_expansion", mp,
                                         additive_expansion(chi, m), chi(m), tol);
          if (r3.abs_error > worst_exp) {
            worst_exp = r3.abs_error;
            expansion = r3;
          }
        }
      }
      ctx.add(norm);
      ctx.add(prod);
      ctx.add(expansion);
    });
  }
}

void run_ramanujan(Context& ctx) {
  const double tol = ctx.cfg.ramanujan_tol;
  for (i64 q = 1; q <= 50; ++q) {
    const Params qp = {{"q", str(q)}, {"n_range", "-50..50"}};
    ctx.guarded("ramanujan_direct", qp, [&] {
      VerificationReport worst;
      worst.abs_error = -1.0;
      for (i64 n = -50; n <= 50; ++n) {
        cplx direct{0.0, 0.0};
        for (i64 a : reduced_residues(q)) direct += unit_exp_frac(a * n, q);
        auto r = make_identity_report(
            ctx.suite, "ramanujan_direct", {{"q", str(q)}, {"n", str(n)}},
            {static_cast<double>(ramanujan_sum(q, n)), 0.0}, direct, tol);
        if (r.abs_error > worst.abs_error) worst = r;
      }
      ctx.add(worst);
    });
  }
  const struct {
    i64 q, n, want;
  } fixtures[] = {{12, 0, 4}, {6, 1, 1}, {4, 2, -2}};
  for (const auto& fx : fixtures) {
    ctx.add(make_identity_report(
        ctx.suite, "ramanujan_fixture", {{"q", str(fx.q)}, {"n", str(fx.n)}},
        {static_cast<double>(ramanujan_sum(fx.q, fx.n)), 0.0},
        {static_cast<double>(fx.want), 0.0}, 0.0));
  }
}

void run_charsum(Context& ctx) {
  const double tol = ctx.cfg.charsum_tol;
  const double r3 = std::sqrt(3.0);
  const DirichletCharacter chi3(3, 1);
  for (Convention conv : {Convention::plus, Convention::minus}) {
    const Params fp = {{"p", "3"}, {"q", "2"}, {"chi", "1"}, {"m", "1"},
                       {"n", "1"}, {"convention", to_string(conv)}};
    ctx.guarded("charsum_fixture", fp, [&] {
      CharSumInstance inst{3, 2, &chi3, 1, 1, conv};
      ctx.add(make_identity_report(
          ctx.suite, "charsum_fixture", fp, char_sum_bruteforce(inst),
          {0.0, conv == Convention::plus ? r3 : -r3}, tol));
    });
  }

  // agreement counts per (variant, convention) across the whole grid
  std::map<std::pair<ClosedFormVariant, Convention>, std::pair<i64, i64>> tally;
  const i64 qs[] = {1, 2, 3, 4, 6, 8, 9, 12};
  for (i64 p : {3, 5, 7}) {
    for (const auto& chi : primitive_characters(p)) {
      for (i64 q : qs) {
        if (std::gcd(q, p) != 1) continue;
        for (Convention conv : {Convention::plus, Convention::minus}) {
          const Params gp = {{"p", str(p)},
                             {"chi", str(chi.index())},
                             {"q", str(q)},
                             {"convention", to_string(conv)}};
          ctx.guarded("charsum_closed_form", gp, [&] {
            VerificationReport worst;
            worst.abs_error = -1.0;
            for (i64 m = 1; m <= 12; ++m) {
              for (i64 n = 1; n <= 12; ++n) {
                CharSumInstance inst{p, q, &chi, m, n, conv};
                const cplx brute = char_sum_bruteforce(inst);
                for (ClosedFormVariant v :
                     {ClosedFormVariant::verified, ClosedFormVariant::conjugate,
                      ClosedFormVariant::mixed}) {
                  const cplx closed = char_sum_closed(inst, v);
                  auto& t = tally[{v, conv}];
                  ++t.second;
                  if (std::abs(closed - brute) <= tol) ++t.first;
                  if (v != ClosedFormVariant::verified) continue;
                  Params row = gp;
                  row.emplace_back("m", str(m));
                  row.emplace_back("n", str(n));
                  auto r = scaled_report(ctx.suite, "charsum_closed_form", row,
                                         closed, brute, 1.0, tol);
                  if (r.abs_error > worst.abs_error) worst = r;
                }
              }
            }
            ctx.add(worst);
          });
        }
      }
    }
  }
  for (const auto& [key, counts] : tally) {
    auto r = make_identity_report(
        ctx.suite, "closed_form_variant_agreement",
        {{"variant", to_string(key.first)},
         {"convention", to_string(key.second)}},
        {static_cast<double>(counts.first), 0.0},
        {static_cast<double>(counts.second), 0.0}, 0.0, false);
    r.note = "cases matching brute force / cases";
    ctx.add(r);
  }
  ctx.notes.push_back(
      "character sum: closed form tau(chi) conj chi(m) chi(q^2) c_q(m - p^2 n), "
      "times chi(-1) for c = ap - bq; the conjugate and mixed variants agree "
      "only for real characters (see closed_form_variant_agreement rows)");
}

void run_bessel(Context& ctx) {
  for (int order = 0; order <= kMaxBesselOrder; ++order) {
    const double x = bessel_switch_point(order);
    const Params op = {{"order", std::to_string(order)}, {"x", str(x)}};
    ctx.guarded("bessel_seam", op, [&] {
      const double s = detail::bessel_j_series(order, x);
      const double h = detail::bessel_j_hankel(order, x);
      ctx.add(scaled_report(ctx.suite, "bessel_seam", op, {s, 0.0}, {h, 0.0},
                            std::max(1.0, std::fabs(s)), ctx.cfg.seam_tol));
    });
  }
  for (double x : {0.5, 1.0, 5.0, 20.0, 100.0, 1000.0}) {
    const Params xp = {{"x", str(x)}, {"orders", "1..26"}};
    ctx.guarded("bessel_recurrence", xp, [&] {
      VerificationReport worst;
      worst.rel_error = -1.0;
      for (int nu = 1; nu <= 26; ++nu) {
        const double jn = bessel_j(nu, x);
        const double l = bessel_j(nu - 1, x) + bessel_j(nu + 1, x);
        const double r = 2.0 * nu / x * jn;
        Params p = {{"x", str(x)}, {"order", std::to_string(nu)}};
        auto rep = scaled_report(ctx.suite, "bessel_recurrence", p, {l, 0.0},
                                 {r, 0.0}, std::max(1.0, std::fabs(jn)),
                                 ctx.cfg.bessel_tol);
        if (rep.rel_error > worst.rel_error) worst = rep;
      }
      ctx.add(worst);
    });
  }
  for (WindowKind kind : {WindowKind::bump_12, WindowKind::plateau_half_52,
                          WindowKind::bump_unit}) {
    const Params wp = {{"window", to_string(kind)}, {"grid", "1000"}};
    ctx.guarded("window_shape", wp, [&] {
      const SmoothWindow w(kind);
      const double lo = w.support_lo() - 0.5;
      const double hi = w.support_hi() + 0.5;
      i64 violations = 0;
      for (int i = 0; i <= 1000; ++i) {
        const double x = lo + (hi - lo) * i / 1000.0;
        const double v = w(x);
        if (v < 0.0 || v > 1.0) ++violations;
        if ((x <= w.support_lo() || x >= w.support_hi()) && v != 0.0) ++violations;
        if (kind != WindowKind::bump_12 && x >= 1.0 && x <= 2.0 && v != 1.0) {
          ++violations;
        }
      }
      ctx.add(make_identity_report(ctx.suite, "window_shape", wp,
                                   {static_cast<double>(violations), 0.0},
                                   {0.0, 0.0}, 0.0));
    });
  }
  const Params qp = {{"window", "bump_12"}, {"oracle", "simpson_200000"}};
  ctx.guarded("window_integral", qp, [&] {
    const SmoothWindow w(WindowKind::bump_12);
    const cplx adaptive = integrate([&](double x) { return w(x); }, 1.0, 2.0, 1e-13);
    const int n = 200000;
    const double h = 1.0 / n;
    double simpson = 0.0;
    for (int i = 0; i <= n; ++i) {
      const double c = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      simpson += c * w(1.0 + i * h);
    }
    simpson *= h / 3.0;
    ctx.add(make_identity_report(ctx.suite, "window_integral", qp, adaptive,
                                 {simpson, 0.0}, 1e-10));
  });
}

void run_voronoi(Context& ctx) {
  const double tol = ctx.cfg.voronoi_tol;
  struct LawPoint {
    i64 q;
    double Y;
    std::size_t t_min;
    std::size_t t_max;
  };
  std::vector<LawPoint> law;
  for (int weight : {12, 16}) {
    for (i64 q : {1, 3, 5, 7}) {
      for (double Y : {50.0, 200.0}) {
        const Params base = {{"weight", std::to_string(weight)},
                             {"q", str(q)},
                             {"Y", str(Y)}};
        ctx.guarded("voronoi_identity", base, [&] {
          VoronoiJob job;
          job.a = q == 1 ? 0 : 1;
          job.q = q;
          job.Y = Y;
          job.truncation = ctx.cfg.truncation;
          job.quad_tol = ctx.cfg.quad_tol;
          job.threads = ctx.cfg.threads;
          const std::size_t T = dual_length(job);
          job.form = &ctx.forms.get(
              weight, std::max(T, static_cast<std::size_t>(3 * Y)));
          const std::vector<cplx> V = hankel_transforms(job, T);
          for (i64 a : reduced_residues(q)) {
            job.a = a;
            Params p = base;
            p.emplace_back("a", str(a));
            p.emplace_back("T", str(static_cast<i64>(T)));
            ctx.add(make_identity_report(ctx.suite, "voronoi_identity", p,
                                         direct_side(job),
                                         hankel_side_from_transforms(job, V),
                                         tol));
          }
          if (weight == 12) {
            job.a = q == 1 ? 0 : 1;
            law.push_back(
                {q, Y, minimal_dual_length_from_transforms(job, V, 1e-8), T});
          }
        });
      }
    }
  }
  if (law.empty()) return;
  double lo = INFINITY, hi = 0.0;
  bool all_reached = true;
  for (const LawPoint& pt : law) {
    const double scale = static_cast<double>(pt.q * pt.q) / pt.Y;
    const double ratio = static_cast<double>(pt.t_min) / scale;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    const bool reached = pt.t_min <= pt.t_max;
    all_reached = all_reached && reached;
    auto r = make_bound_report(
        ctx.suite, "dual_length_law",
        {{"weight", "12"}, {"q", str(pt.q)}, {"Y", str(pt.Y)}, {"tol", "1e-08"}},
        static_cast<double>(pt.t_min), scale, INFINITY, false);
    r.note = reached ? "minimal T over q^2/Y"
                     : "1e-8 not reached within T=" +
                           std::to_string(pt.t_max) + " (lower bound)";
    ctx.add(r);
  }
  auto spread = make_bound_report(ctx.suite, "dual_length_law_spread",
                                  {{"weight", "12"}, {"cells", str(static_cast<i64>(law.size()))}},
                                  hi, lo, 8.0, false);
  spread.note = all_reached ? "max/min of T_min Y / q^2"
                            : "some cells never reached 1e-8; spread uses lower bounds";
  ctx.add(spread);
}

void run_twisted(Context& ctx) {
  const double tol = ctx.cfg.twisted_tol;
  for (i64 p : {3, 5}) {
    for (i64 q : {1, 2, 4}) {
      for (i64 N : {40, 80}) {
        const Params base = {{"p", str(p)}, {"q", str(q)}, {"N", str(N)},
                             {"x", "0"}};
        ctx.guarded("twisted_T", base, [&] {
          const std::size_t M =
              twisted_dual_length(p, q, N, ctx.cfg.twisted_truncation);
          const CuspForm& g = ctx.forms.get(
              12, std::max(M, static_cast<std::size_t>(3 * N)));
          TwistedParams tp{1, q, 0.0, N};
          const auto u = twisted_bessel_integrals(g, p, tp, M, ctx.cfg.quad_tol,
                                                  ctx.cfg.threads);
          for (const auto& chi : primitive_characters(p)) {
            for (i64 a : reduced_residues(q)) {
              tp.a = a;
              Params row = base;
              row.emplace_back("chi", str(chi.index()));
              row.emplace_back("a", str(a));
              row.emplace_back("M", str(static_cast<i64>(M)));
              const cplx direct = twisted_T_direct(g, chi, tp);
              row.emplace_back("convention", "minus");
              ctx.add(make_identity_report(
                  ctx.suite, "twisted_T", row, direct,
                  twisted_T_from_integrals(g, chi, tp, u, Convention::minus),
                  tol));
              if (a == reduced_residues(q).front()) {
                row.back().second = "plus";
                auto r = make_identity_report(
                    ctx.suite, "twisted_T_convention", row, direct,
                    twisted_T_from_integrals(g, chi, tp, u, Convention::plus),
                    tol, false);
                r.note = chi.parity() < 0 ? "odd character" : "even character";
                ctx.add(r);
              }
            }
          }
        });
      }
    }
  }
  ctx.notes.push_back(
      "twisted sum: the dual side matches with c = ap - bq (minus); with "
      "c = ap + bq it returns chi(-1) T, so it fails for odd characters");
}

void run_circle(Context& ctx) {
  const double C = 1.0;  // one L2 constant for the whole ladder
  for (double delta : {1e-3, 1e-4}) {
    double previous = 0.0;
    for (i64 Q : {10, 20, 40, 80}) {
      const Params lp = {{"p", "11"}, {"Q", str(Q)}, {"delta", str(delta)}};
      ctx.guarded("l2_error", lp, [&] {
        const ModuliFamily fam = build_family(11, Q, 2 * Q, delta);
        Params p = lp;
        p.emplace_back("L", str(fam.L));
        const double err = l2_error(fam);
        ctx.add(make_bound_report(ctx.suite, "l2_error", p, err,
                                  l2_bound_scale(fam), C, true));
        ctx.add(make_identity_report(ctx.suite, "i_tilde_mass", p,
                                     {i_tilde_mass(fam), 0.0}, {1.0, 0.0},
                                     1e-9));
        if (previous > 0.0) {
          auto r = make_bound_report(ctx.suite, "l2_error_decrease", p, err,
                                     previous, 1.0, false);
          r.note = "l2 error relative to the previous rung";
          ctx.add(r);
        }
        previous = err;
      });
    }
  }

  std::vector<double> ratios;
  CircleOptions opts;
  opts.nodes = ctx.cfg.circle_nodes;
  opts.threads = ctx.cfg.threads;
  for (i64 N : {500, 1000, 2000}) {
    const i64 Q = static_cast<i64>(std::ceil(std::pow(static_cast<double>(N), 0.55)));
    const Params np = {{"f", "12"}, {"g", "16"}, {"p", "11"}, {"chi", "1"},
                       {"N", str(N)}, {"Q", str(Q)}, {"delta", "1/N"}};
    ctx.guarded("circle_error", np, [&] {
      const CuspForm& f = ctx.forms.get(12, static_cast<std::size_t>(3 * N));
      const CuspForm& g = ctx.forms.get(16, static_cast<std::size_t>(3 * N));
      const DirichletCharacter chi(11, 1);
      const ModuliFamily fam =
          build_family(11, Q, 2 * Q, 1.0 / static_cast<double>(N));
      const cplx direct = s_direct(f, g, chi, N);
      const cplx approx = s_tilde(f, g, chi, N, fam, opts);
      const double scale = s_tilde_error_scale(N, fam);
      Params p = np;
      p.emplace_back("L", str(fam.L));
      auto r = make_bound_report(ctx.suite, "circle_error", p,
                                 std::abs(direct - approx), scale, 1.0, false);
      r.note = "S=" + format_complex(direct) + " S~=" + format_complex(approx);
      ctx.add(r);
      ratios.push_back(r.rel_error);
      if (N == 500) {
        CircleOptions fine = opts;
        fine.nodes = 2 * opts.nodes;
        Params q = np;
        q.emplace_back("nodes", std::to_string(opts.nodes));
        ctx.add(make_identity_report(ctx.suite, "s_tilde_nodes", q, approx,
                                     s_tilde(f, g, chi, N, fam, fine), 1e-8,
                                     false));
      }
    });
  }
  if (ratios.size() == 3) {
    const auto [mn, mx] = std::minmax_element(ratios.begin(), ratios.end());
    auto r = make_bound_report(ctx.suite, "circle_error_stability",
                               {{"N", "500|1000|2000"}}, *mx, *mn, 4.0, true);
    r.note = "max/min of the normalised error";
    ctx.add(r);
  }

  const Params pp = {{"p", "11"}, {"eta", "1/14"}, {"delta", "0.001"}};
  ctx.guarded("product_family", pp, [&] {
    const ModuliFamily fam = build_product_family(11, 1.0 / 14.0, 1e-3);
    std::string phis;
    for (i64 q : fam.phi) phis += (phis.empty() ? "" : " ") + str(q);
    auto r = make_identity_report(ctx.suite, "product_family", pp,
                                  {static_cast<double>(fam.L), 0.0},
                                  {static_cast<double>(
                                       totient_of_list(fam.phi)),
                                   0.0},
                                  0.0, false);
    r.note = "Phi = {" + phis + "}";
    ctx.add(r);
  });
}

void run_shifted(Context& ctx) {
  const double tol = ctx.cfg.shifted_tol;
  const i64 moduli[] = {2, 3, 5};
  for (i64 M : {60, 500, 1500}) {
    for (i64 q1 : moduli) {
      for (i64 q1p : moduli) {
        const Params base = {{"q1", str(q1)}, {"q1p", str(q1p)}, {"M", str(M)}};
        ctx.guarded("shifted_convolution", base, [&] {
          const CuspForm& g = ctx.forms.get(12, static_cast<std::size_t>(3 * M));
          const SmoothWindow w(WindowKind::bump_unit);
          const double Md = static_cast<double>(M);
          const i64 lo = (M + 1) / 2, hi = 3 * M;
          for (i64 shift : {-100, -7, 0, 5, 100}) {
            // plain double loop over (u, v)
            double oracle = 0.0;
            for (i64 u = lo; u <= hi; ++u) {
              for (i64 v = lo; v <= hi; ++v) {
                if (q1p * u - q1 * v != shift) continue;
                oracle += g.lambda(static_cast<std::size_t>(u)) *
                          g.lambda(static_cast<std::size_t>(v)) *
                          w(static_cast<double>(u) / Md) *
                          w(static_cast<double>(v) / Md);
              }
            }
            Params p = base;
            p.emplace_back("shift", str(shift));
            ctx.add(scaled_report(
                ctx.suite, "shifted_convolution", p,
                {shifted_convolution(g, q1, q1p, shift, M), 0.0}, {oracle, 0.0},
                std::max(1.0, std::fabs(oracle)), tol));
          }
        });
      }
    }
  }
  const double theta = 7.0 / 64.0;
  const i64 p = 11;
  for (i64 M : {500, 1500}) {
    for (auto [q1, q1p] : {std::pair<i64, i64>{2, 3}, {3, 5}, {5, 2}}) {
      for (i64 n : {1, 2}) {
        const i64 shift = (q1p - q1) * p * p * n;
        const Params bp = {{"q1", str(q1)}, {"q1p", str(q1p)}, {"M", str(M)},
                           {"p", str(p)}, {"n", str(n)}, {"theta", "7/64"}};
        ctx.guarded("shifted_convolution_bound", bp, [&] {
          const CuspForm& g = ctx.forms.get(12, static_cast<std::size_t>(3 * M));
          ctx.add(make_bound_report(
              ctx.suite, "shifted_convolution_bound", bp,
              std::fabs(shifted_convolution(g, q1, q1p, shift, M)),
              shifted_convolution_bound(q1, q1p, M, theta), 1.0, false));
        });
      }
    }
  }
}

void run_short_twisted(Context& ctx) {
  const i64 p = 11;
  const auto M0 = static_cast<i64>(std::ceil(std::pow(11.0, 2.1)));
  const CuspForm* g = nullptr;
  ctx.guarded("short_twisted_sum", {{"p", "11"}}, [&] {
    g = &ctx.forms.get(12, static_cast<std::size_t>(3 * M0));
  });
  if (g == nullptr) return;
  for (const auto& chi : primitive_characters(p)) {
    const Params cp = {{"p", str(p)}, {"chi", str(chi.index())}, {"M0", str(M0)}};
    ctx.guarded("short_twisted_sum", cp, [&] {
      const cplx s = short_twisted_sum(*g, chi, static_cast<double>(M0));
      ctx.add(make_bound_report(ctx.suite, "short_twisted_sum", cp, std::abs(s),
                                std::sqrt(static_cast<double>(M0)), 1.0, false));
      ctx.add(make_identity_report(ctx.suite, "short_twisted_conjugate", cp,
                                   short_twisted_sum(*g, chi.conj(),
                                                     static_cast<double>(M0)),
                                   std::conj(s), 1e-12));
    });
  }
  const DirichletCharacter chi(p, 1);
  ctx.add(make_identity_report(ctx.suite, "short_twisted_empty",
                               {{"p", "11"}, {"M0", "0.5"}},
                               short_twisted_sum(*g, chi, 0.5), {0.0, 0.0}, 0.0));
}

void run_exponent(Context& ctx) {
  const std::string& s = ctx.suite;
  const Rational zero(0);
  const Rational seven64(7, 64);
  ctx.guarded("exponent_paper", {{"theta", "0"}, {"mode", "paper"}}, [&] {
    const ExponentSolution e = exponent_calculator(zero, ExponentMode::paper);
    const Params p = {{"theta", "0"}, {"mode", "paper"}};
    ctx.add(exact_report(s, "final_exponent", p, e.final_exponent, Rational(27, 28)));
    ctx.add(exact_report(s, "eta", p, e.eta, Rational(1, 14)));
    ctx.add(exact_report(s, "q1_exponent", p, e.q1_exp,
                         Rational(1, 5) + Rational(1, 140)));
    ctx.add(exact_report(s, "q3_exponent", p, e.q3_exp,
                         Rational(2, 5) + Rational(1, 70)));
    ctx.add(exact_report(s, "q4_exponent", p, e.q4_exp,
                         Rational(2, 5) + Rational(1, 70)));
    ctx.add(exact_report(s, "exponent_sum", p, e.q1_exp + e.q3_exp + e.q4_exp,
                         Rational(1) + e.eta / 2));
    ctx.add(exact_report(s, "q1_feasible", p, Rational(e.q1_feasible ? 1 : 0),
                         Rational(1)));
  });
  ctx.guarded("exponent_paper", {{"theta", "7/64"}, {"mode", "paper"}}, [&] {
    const ExponentSolution e = exponent_calculator(seven64, ExponentMode::paper);
    auto r = make_bound_report(s, "q1_ceiling", {{"theta", "7/64"}, {"mode", "paper"}},
                               to_double(e.q1_exp), to_double(e.q1_ceiling), 1.0,
                               false);
    r.note = std::string(e.q1_feasible ? "feasible" : "infeasible") +
             ": Q1 exponent " + format_rational(e.q1_exp) + " vs ceiling " +
             format_rational(e.q1_ceiling);
    ctx.add(r);
  });
  ctx.guarded("exponent_balanced", {{"theta", "0"}, {"mode", "balanced"}}, [&] {
    const ExponentSolution e = exponent_calculator(zero, ExponentMode::balanced);
    const Params p = {{"theta", "0"}, {"mode", "balanced"}};
    ctx.add(exact_report(s, "final_exponent", p, e.final_exponent, Rational(18, 19)));
    ctx.add(exact_report(s, "eta", p, e.eta, Rational(2, 19)));
  });
  for (const Rational& theta : {zero, seven64}) {
    const Params p = {{"theta", format_rational(theta)}, {"mode", "h_theta"}};
    ctx.guarded("exponent_h_theta", p, [&] {
      const ExponentSolution e = exponent_calculator(theta, ExponentMode::h_theta);
      ctx.add(exact_report(s, "final_exponent", p, e.final_exponent,
                           Rational(19, 20) + Rational(202, 100) * theta));
    });
  }
  {
    const Params p = {{"theta", "1/5"}, {"mode", "paper"}};
    bool rejected = false;
    try {
      exponent_calculator(Rational(1, 5), ExponentMode::paper);
    } catch (const DomainError&) {
      rejected = true;
    }
    ctx.add(exact_report(s, "theta_domain", p, Rational(rejected ? 1 : 0),
                         Rational(1)));
  }
  ctx.notes.push_back(exponent_discrepancy_note());
}

struct SuiteEntry {
  const char* name;
  void (*run)(Context&);
};

const SuiteEntry kSuites[] = {
    {"forms", run_forms},
    {"characters", run_characters},
    {"gauss", run_gauss},
    {"ramanujan", run_ramanujan},
    {"charsum", run_charsum},
    {"bessel", run_bessel},
    {"voronoi", run_voronoi},
    {"twisted_t", run_twisted},
    {"circle", run_circle},
    {"shifted_convolution", run_shifted},
    {"short_twisted", run_short_twisted},
    {"exponent", run_exponent},
};

std::set<std::string> parse_only(const std::string& only) {
  std::set<std::string> chosen;
  std::size_t start = 0;
  while (start <= only.size()) {
    const auto comma = only.find(',', start);
    const std::string item = only.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), item) == names.end()) {
        throw DomainError("unknown suite '" + item + "'");
      }
      chosen.insert(item);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return chosen;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kSuites) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

SuiteResult run_suite(const Config& cfg, std::ostream* log) {
  const std::set<std::string> chosen = parse_only(cfg.only);
  SuiteResult result;
  Context ctx{cfg, FormCache(cfg.table_cap), result.reports, result.notes, log, ""};
  for (const auto& entry : kSuites) {
    if (!chosen.empty() && !chosen.count(entry.name)) continue;
    ctx.suite = entry.name;
    const std::size_t first = result.reports.size();
    const auto t0 = std::chrono::steady_clock::now();
    try {
      entry.run(ctx);
    } catch (const std::exception& e) {
      ctx.add(make_error_report(entry.name, "suite", {}, e.what()));
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    int failed = 0;
    for (std::size_t i = first; i < result.reports.size(); ++i) {
      result.reports[i].wall_time = seconds;
      if (result.reports[i].hard && !result.reports[i].passed) ++failed;
    }
    result.hard_failures += failed;
    if (log) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%-20s %5zu rows  %3d hard failures  %7.1fs\n",
                    entry.name, result.reports.size() - first, failed, seconds);
      *log << buf << std::flush;
    }
  }
  result.exit_status = result.hard_failures > 0 ? 1 : 0;
  if (!cfg.out.empty()) write_reports_csv(cfg.out, result.reports);
  return result;
}

}  // namespace subconvex
