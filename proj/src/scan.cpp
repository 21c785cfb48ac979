#include "subconvex/scan.hpp"

#include <cmath>
#include <ostream>

#include "subconvex/characters.hpp"
#include "subconvex/circle.hpp"
#include "subconvex/errors.hpp"
#include "subconvex/parallel.hpp"
#include "subconvex/report.hpp"

namespace subconvex {

std::vector<i64> scan_grid(i64 p, const ScanOptions& opts) {
  if (opts.n_start < 1) throw DomainError("scan grid must start at N >= 1");
  std::vector<i64> grid;
  for (i64 N = opts.n_start; N <= p * p; N *= 2) {
    if (opts.points != 0 && grid.size() == opts.points) break;
    grid.push_back(N);
  }
  return grid;
}

std::size_t scan_table_length(const std::vector<i64>& primes,
                              const ScanOptions& opts) {
  std::size_t need = 0;
  for (i64 p : primes) {
    for (i64 N : scan_grid(p, opts)) {
      need = std::max(need, static_cast<std::size_t>(2 * N));
    }
  }
  return need;
}

std::vector<ScanRow> subconvexity_scan(const CuspForm& f, const CuspForm& g,
                                       const std::vector<i64>& primes,
                                       const ScanOptions& opts) {
  for (i64 p : primes) {
    if (!is_odd_prime(p)) {
      throw InvalidModulus("scan: " + std::to_string(p) +
                           " is not an odd prime");
    }
  }
  const std::size_t need = scan_table_length(primes, opts);
  const std::size_t have = std::min(f.n_max(), g.n_max());
  if (need > have) throw TableTooShort(need, have);

  struct Job {
    i64 p;
    i64 index;
  };
  std::vector<Job> jobs;
  for (i64 p : primes) {
    for (i64 j = 1; j < p - 1; ++j) jobs.push_back({p, j});
  }
  std::vector<ScanRow> rows(jobs.size());
  parallel_for(jobs.size(), opts.threads, [&](std::size_t k) {
    const Job& job = jobs[k];
    const DirichletCharacter chi(job.p, job.index);
    ScanRow row;
    row.p = job.p;
    row.chi_index = job.index;
    for (i64 N : scan_grid(job.p, opts)) {
      const double v =
          std::abs(s_direct(f, g, chi, N)) / std::sqrt(static_cast<double>(N));
      ++row.grid_points;
      if (row.argmax_N == 0 || v > row.sup_value) {
        row.sup_value = v;
        row.argmax_N = N;
      }
    }
    row.ratio = row.sup_value /
                std::pow(static_cast<double>(job.p), 27.0 / 28.0);
    rows[k] = row;
  });
  return rows;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  write_csv_row(out, {"p", "chi_index", "grid_points", "sup_S_over_sqrtN",
                      "argmax_N", "ratio_to_p_27_28"});
  for (const ScanRow& r : rows) {
    write_csv_row(out, {std::to_string(r.p), std::to_string(r.chi_index),
                        std::to_string(r.grid_points), format_real(r.sup_value),
                        std::to_string(r.argmax_N), format_real(r.ratio)});
  }
}

double scan_ratio_constant(const std::vector<ScanRow>& rows) {
  double c = 0.0;
  for (const ScanRow& r : rows) c = std::max(c, r.ratio);
  return c;
}

}  // namespace subconvex
