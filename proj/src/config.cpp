#include "subconvex/config.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>

#include "subconvex/errors.hpp"

namespace subconvex {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw DomainError("config key '" + key + "': '" + value +
                      "' is not a number");
  }
  return v;
}

long long parse_integer(const std::string& key, const std::string& value,
                        long long lo) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw DomainError("config key '" + key + "': '" + value +
                      "' is not an integer");
  }
  if (v < lo) {
    throw DomainError("config key '" + key + "' must be >= " +
                      std::to_string(lo));
  }
  return v;
}

double parse_positive(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (!(v > 0.0)) throw DomainError("config key '" + key + "' must be > 0");
  return v;
}

}  // namespace

const std::vector<std::string>& Config::keys() {
  static const std::vector<std::string> k = {
      "table_cap",    "threads",       "truncation",    "twisted_truncation",
      "circle_nodes", "quad_tol",      "voronoi_tol",   "twisted_tol",
      "charsum_tol",  "gauss_tol",     "ramanujan_tol", "bessel_tol",
      "seam_tol",     "shifted_tol",   "hecke_limit",   "only",
      "out"};
  return k;
}

void Config::set(const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (key == "table_cap") {
    table_cap = static_cast<std::size_t>(parse_integer(key, value, 1));
  } else if (key == "threads") {
    threads = static_cast<unsigned>(parse_integer(key, value, 0));
  } else if (key == "truncation") {
    truncation = static_cast<int>(parse_integer(key, value, 1));
  } else if (key == "twisted_truncation") {
    twisted_truncation = static_cast<int>(parse_integer(key, value, 1));
  } else if (key == "circle_nodes") {
    circle_nodes = static_cast<int>(parse_integer(key, value, 2));
  } else if (key == "quad_tol") {
    quad_tol = parse_positive(key, value);
  } else if (key == "voronoi_tol") {
    voronoi_tol = parse_positive(key, value);
  } else if (key == "twisted_tol") {
    twisted_tol = parse_positive(key, value);
  } else if (key == "charsum_tol") {
    charsum_tol = parse_positive(key, value);
  } else if (key == "gauss_tol") {
    gauss_tol = parse_positive(key, value);
  } else if (key == "ramanujan_tol") {
    ramanujan_tol = parse_positive(key, value);
  } else if (key == "bessel_tol") {
    bessel_tol = parse_positive(key, value);
  } else if (key == "seam_tol") {
    seam_tol = parse_positive(key, value);
  } else if (key == "shifted_tol") {
    shifted_tol = parse_positive(key, value);
  } else if (key == "hecke_limit") {
    hecke_limit = static_cast<std::size_t>(parse_integer(key, value, 1));
  } else if (key == "only") {
    only = value;
  } else if (key == "out") {
    out = value;
  } else {
    throw DomainError("unknown config key '" + key + "'");
  }
}

void apply_override(Config& cfg, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw DomainError("expected key=value, got '" + assignment + "'");
  }
  cfg.set(trim(assignment.substr(0, eq)), assignment.substr(eq + 1));
}

void load_config_file(const std::string& path, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw ResourceError("cannot read config file '" + path + "'");
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      apply_override(cfg, line);
    } catch (const DomainError& e) {
      throw DomainError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void apply_environment(Config& cfg) {
  for (const std::string& key : Config::keys()) {
    std::string name = "SUBCONVEX_" + key;
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (const char* v = std::getenv(name.c_str())) cfg.set(key, v);
  }
}

Config resolve_config(const std::string& file,
                      const std::vector<std::string>& overrides) {
  Config cfg;
  if (!file.empty()) load_config_file(file, cfg);
  apply_environment(cfg);
  for (const std::string& o : overrides) apply_override(cfg, o);
  return cfg;
}

}  // namespace subconvex
