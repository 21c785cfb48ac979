#pragma once

// Empirical scan of sup_N |S(N)| / sqrt(N) over primitive characters.

#include <iosfwd>
#include <vector>

#include "subconvex/arith.hpp"
#include "subconvex/forms.hpp"

namespace subconvex {

struct ScanOptions {
  i64 n_start = 8;          // first grid point; the grid doubles up to p^2
  std::size_t points = 0;   // cap on grid points per p, 0 = no cap
  unsigned threads = 0;
};

struct ScanRow {
  i64 p = 0;
  i64 chi_index = 0;
  std::size_t grid_points = 0;
  double sup_value = 0.0;  // max_N |S(N)| / sqrt(N)
  i64 argmax_N = 0;
  double ratio = 0.0;      // sup_value / p^{27/28}
};

// N-grid for one prime: n_start, 2 n_start, ... while N <= p^2.
std::vector<i64> scan_grid(i64 p, const ScanOptions& opts);

// Largest 2N over the grids, i.e. the table length the scan needs.
std::size_t scan_table_length(const std::vector<i64>& primes,
                              const ScanOptions& opts);

// One row per (p, primitive chi), ordered by p then chi index.  Throws
// TableTooShort when either form is shorter than scan_table_length.
std::vector<ScanRow> subconvexity_scan(const CuspForm& f, const CuspForm& g,
                                       const std::vector<i64>& primes,
                                       const ScanOptions& opts = {});

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

// max ratio over the rows (the constant bounding the ratio column).
double scan_ratio_constant(const std::vector<ScanRow>& rows);

}  // namespace subconvex
