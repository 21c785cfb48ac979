// Command-line front end: suite, scan, exponent, voronoi, charsum, eigens.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subconvex/characters.hpp"
#include "subconvex/config.hpp"
#include "subconvex/errors.hpp"
#include "subconvex/exponent.hpp"
#include "subconvex/forms.hpp"
#include "subconvex/report.hpp"
#include "subconvex/scan.hpp"
#include "subconvex/suite.hpp"
#include "subconvex/sums.hpp"
#include "subconvex/voronoi.hpp"

using namespace subconvex;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

i64 parse_int(const std::string& s) {
  std::size_t used = 0;
  i64 v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw DomainError("'" + s + "' is not an integer");
  }
  return v;
}

// "11,13,17" or "11-97" (every odd prime in the range), mixed freely.
std::vector<i64> parse_primes(const std::string& list) {
  std::vector<i64> out;
  for (const std::string& item : split(list, ',')) {
    const auto dash = item.find('-', 1);
    if (dash != std::string::npos) {
      for (i64 p : primes_in(parse_int(item.substr(0, dash)),
                             parse_int(item.substr(dash + 1)))) {
        if (p > 2) out.push_back(p);
      }
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) throw DomainError("empty prime list");
  return out;
}

// Writes through `fn` to PATH, or to stdout when PATH is "-".
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ResourceError("cannot open '" + path + "' for writing");
  fn(out);
  if (!out) throw ResourceError("write to '" + path + "' failed");
}

void print_solution(const ExponentSolution& e) {
  auto line = [](const char* key, const Rational& r) {
    std::printf("%-16s %-14s %.12f\n", key, format_rational(r).c_str(),
                to_double(r));
  };
  std::printf("%-16s %s\n", "mode", to_string(e.mode).c_str());
  line("theta", e.theta);
  line("eta", e.eta);
  line("q1_exp", e.q1_exp);
  line("q3_exp", e.q3_exp);
  line("q4_exp", e.q4_exp);
  line("q1_ceiling", e.q1_ceiling);
  std::printf("%-16s %s\n", "q1_feasible", e.q1_feasible ? "yes" : "no");
  line("final_exponent", e.final_exponent);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification toolkit for a GL(2) x GL(2) twist"};
  app.require_subcommand(1);

  std::string config_file;
  std::vector<std::string> overrides;
  unsigned threads = 0;
  bool threads_set = false;
  app.add_option("--config", config_file, "key=value configuration file");
  app.add_option("--set", overrides, "KEY=VALUE override (repeatable)");
  app.add_option_function<unsigned>(
      "--threads",
      [&](unsigned v) {
        threads = v;
        threads_set = true;
      },
      "worker threads (0 = all cores)");

  Config cfg;
  auto load = [&] {
    cfg = resolve_config(config_file, overrides);
    if (threads_set) cfg.threads = threads;
  };

  // suite
  auto* suite = app.add_subcommand("suite", "run the verification suite");
  std::string only, out;
  suite->add_option("--only", only, "comma-separated suite names");
  suite->add_option("--out", out, "CSV report path");
  suite->callback([&] {
    load();
    if (!only.empty()) cfg.only = only;
    if (!out.empty()) cfg.out = out;
    const SuiteResult r = run_suite(cfg, &std::cerr);
    int hard = 0, soft_failed = 0;
    for (const auto& rep : r.reports) {
      if (rep.hard) {
        ++hard;
      } else if (!rep.passed) {
        ++soft_failed;
      }
    }
    std::printf("rows: %zu  hard: %d  hard failures: %d  soft over bound: %d\n",
                r.reports.size(), hard, r.hard_failures, soft_failed);
    for (const auto& rep : r.reports) {
      if (rep.hard && !rep.passed) {
        std::printf("FAIL %s/%s %s rel=%s %s\n", rep.suite.c_str(),
                    rep.identity_name.c_str(),
                    format_params(rep.parameters).c_str(),
                    format_real(rep.rel_error).c_str(), rep.note.c_str());
      }
    }
    for (const auto& note : r.notes) std::printf("note: %s\n", note.c_str());
    if (r.exit_status != 0) throw CLI::RuntimeError(r.exit_status);
  });

  // scan
  auto* scan = app.add_subcommand("scan", "sup |S(N)|/sqrt(N) over characters");
  std::string weights = "12,16", primes, scan_out = "-";
  ScanOptions scan_opts;
  scan->add_option("--weights", weights, "KF,KG")->capture_default_str();
  scan->add_option("--primes", primes, "list such as 11,13 or 11-97")
      ->required();
  scan->add_option("--out", scan_out, "CSV path, - for stdout")
      ->capture_default_str();
  scan->add_option("--n-start", scan_opts.n_start, "first grid point")
      ->capture_default_str();
  scan->add_option("--points", scan_opts.points, "grid points per p (0 = all)")
      ->capture_default_str();
  scan->callback([&] {
    load();
    const auto ks = split(weights, ',');
    if (ks.size() != 2) throw DomainError("--weights expects KF,KG");
    const std::vector<i64> ps = parse_primes(primes);
    scan_opts.threads = cfg.threads;
    const std::size_t need = std::max<std::size_t>(scan_table_length(ps, scan_opts), 1);
    const FormOptions fo{cfg.table_cap};
    const CuspForm f = build_form(static_cast<int>(parse_int(ks[0])), need, fo);
    const CuspForm g = build_form(static_cast<int>(parse_int(ks[1])), need, fo);
    const auto rows = subconvexity_scan(f, g, ps, scan_opts);
    with_output(scan_out, [&](std::ostream& os) { write_scan_csv(os, rows); });
    std::fprintf(stderr, "rows: %zu  ratio constant: %s\n", rows.size(),
                 format_real(scan_ratio_constant(rows)).c_str());
  });

  // exponent
  auto* exponent = app.add_subcommand("exponent", "exponent calculator");
  std::string theta = "0", mode = "paper";
  exponent->add_option("--theta", theta, "rational such as 7/64")
      ->capture_default_str();
  exponent->add_option("--mode", mode, "paper|balanced|h_theta")
      ->capture_default_str();
  exponent->callback([&] {
    print_solution(
        exponent_calculator(parse_rational(theta), exponent_mode_from_string(mode)));
    std::printf("note: %s\n", exponent_discrepancy_note().c_str());
  });

  // voronoi
  auto* voronoi = app.add_subcommand("voronoi", "both sides of the Voronoi identity");
  int weight = 12;
  i64 q = 1, a = 0;
  double Y = 50.0, x_shift = 0.0;
  std::string window = "bump_12";
  voronoi->add_option("--weight", weight)->required();
  voronoi->add_option("--q", q)->required();
  voronoi->add_option("--a", a)->required();
  voronoi->add_option("--Y", Y)->required();
  voronoi->add_option("--x", x_shift, "additive shift")->capture_default_str();
  voronoi->add_option("--window", window)->capture_default_str();
  voronoi->callback([&] {
    load();
    VoronoiJob job;
    job.a = a;
    job.q = q;
    job.Y = Y;
    job.x_shift = x_shift;
    job.window = window_kind_from_string(window);
    job.truncation = cfg.truncation;
    job.quad_tol = cfg.quad_tol;
    job.threads = cfg.threads;
    const std::size_t T = dual_length(job);
    const SmoothWindow w(job.window);
    const auto need = std::max(T, static_cast<std::size_t>(w.support_hi() * Y) + 1);
    const CuspForm f = build_form(weight, need, FormOptions{cfg.table_cap});
    job.form = &f;
    const cplx d = direct_side(job);
    const cplx h = hankel_side(job);
    const auto rep = make_identity_report("voronoi", "voronoi_identity", {}, d, h,
                                          cfg.voronoi_tol);
    std::printf("direct     %s\nhankel     %s\nterms      %zu\nrel_error  %s\n"
                "status     %s\n",
                format_complex(d).c_str(), format_complex(h).c_str(), T,
                format_real(rep.rel_error).c_str(), rep.passed ? "pass" : "fail");
  });

  // charsum
  auto* charsum = app.add_subcommand("charsum", "character sum, both evaluations");
  i64 cp = 3, cq = 1, cm = 1, cn = 1, cchi = 0;
  std::string convention = "plus";
  charsum->add_option("--p", cp)->required();
  charsum->add_option("--q", cq)->required();
  charsum->add_option("--m", cm)->required();
  charsum->add_option("--n", cn)->required();
  charsum->add_option("--chi", cchi, "character index (0 = every primitive one)")
      ->capture_default_str();
  charsum->add_option("--convention", convention, "plus|minus")
      ->capture_default_str();
  charsum->callback([&] {
    const Convention conv = convention_from_string(convention);
    std::vector<DirichletCharacter> chars;
    if (cchi != 0) {
      chars.emplace_back(cp, cchi);
    } else {
      chars = primitive_characters(cp);
    }
    write_csv_row(std::cout, {"chi", "bruteforce", "verified", "conjugate",
                              "mixed"});
    for (const auto& chi : chars) {
      const CharSumInstance inst{cp, cq, &chi, cm, cn, conv};
      write_csv_row(std::cout,
                    {std::to_string(chi.index()),
                     format_complex(char_sum_bruteforce(inst)),
                     format_complex(char_sum_closed(inst, ClosedFormVariant::verified)),
                     format_complex(char_sum_closed(inst, ClosedFormVariant::conjugate)),
                     format_complex(char_sum_closed(inst, ClosedFormVariant::mixed))});
    }
  });

  // eigens
  auto* eigens = app.add_subcommand("eigens", "coefficient table");
  int eweight = 12;
  std::size_t nmax = 100;
  std::string eout = "-";
  eigens->add_option("--weight", eweight)->required();
  eigens->add_option("--nmax", nmax)->required();
  eigens->add_option("--out", eout, "CSV path, - for stdout")->capture_default_str();
  eigens->callback([&] {
    load();
    const CuspForm f = build_form(eweight, nmax, FormOptions{cfg.table_cap});
    with_output(eout, [&](std::ostream& os) {
      write_csv_row(os, {"n", "a_n", "lambda_n"});
      for (std::size_t k = 1; k <= f.n_max(); ++k) {
        write_csv_row(os, {std::to_string(k), f.raw(k).get_str(),
                           format_real(f.lambda(k))});
      }
    });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
