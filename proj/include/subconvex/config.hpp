#pragma once

// Run configuration.  Sources, lowest precedence first: built-in defaults,
// a key=value file, SUBCONVEX_<KEY> environment variables, command-line
// overrides.

#include <cstddef>
#include <string>
#include <vector>

namespace subconvex {

struct Config {
  std::size_t table_cap = 1'000'000;
  unsigned threads = 0;
  int truncation = 3000;         // Voronoi dual-length multiplier
  int twisted_truncation = 400;  // same for the twisted sum
  int circle_nodes = 16;
  double quad_tol = 1e-11;

  double voronoi_tol = 1e-6;
  double twisted_tol = 1e-5;
  double charsum_tol = 1e-9;
  double gauss_tol = 1e-10;
  double ramanujan_tol = 1e-9;
  double bessel_tol = 1e-8;
  double seam_tol = 1e-9;
  double shifted_tol = 1e-12;

  std::size_t hecke_limit = 10'000;
  std::string only;  // empty: every suite
  std::string out;   // empty: no CSV file

  // Parses and assigns one key; throws DomainError on an unknown key or a
  // malformed value.
  void set(const std::string& key, const std::string& value);

  static const std::vector<std::string>& keys();
};

// '#' starts a comment; blank lines are skipped.
void load_config_file(const std::string& path, Config& cfg);

// Applies SUBCONVEX_<KEY> for every known key that is set.
void apply_environment(Config& cfg);

// "key=value" as given on the command line.
void apply_override(Config& cfg, const std::string& assignment);

// defaults <- file (if non-empty) <- environment <- overrides
Config resolve_config(const std::string& file,
                      const std::vector<std::string>& overrides);

}  // namespace subconvex
