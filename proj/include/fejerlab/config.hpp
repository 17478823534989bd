#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace fejer {

struct Config {
  double zero_tol = 1e-12;           // absolute tolerance for comparisons against 0
  double liminf_threshold = 0.5;     // InTail if first clean index <= threshold * horizon
  std::size_t opial_window = 32;
  double opial_converge_tol = 1e-8;
  double opial_separation = 1e-3;
  double cluster_eps = 0.05;
  std::size_t cluster_min_count = 3;
  double direction_resolution = 1e-10;
  std::size_t opial_truncation_divisor = 8;
  std::size_t horizon = 200;
  std::size_t grid = 41;
  double grid_lo = -2.0;
  double grid_hi = 2.0;
  std::uint64_t seed = 20240917;
  std::size_t jobs = 1;
};

const Config& config();
void set_config(const Config& cfg);

// Parses "key = value" lines; '#' starts a comment. Unknown keys raise InvalidInput.
Config parse_config(const std::string& text, Config base = Config{});
Config load_config_file(const std::string& path, Config base = Config{});
// Applies one key=value assignment to cfg.
void apply_config_key(Config& cfg, const std::string& key, const std::string& value);

}  // namespace fejer
