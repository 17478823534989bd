#include "fejerlab/config.hpp"

#include <fstream>
#include <sstream>

#include "fejerlab/error.hpp"

namespace fejer {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::UnsupportedSet: return "UnsupportedSet";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::DegenerateStep: return "DegenerateStep";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::EmptySample: return "EmptySample";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::NoClusters: return "NoClusters";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

namespace {
std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ", ";
    out += p;
  }
  return out;
}

Config& global_config() {
  static Config cfg;
  return cfg;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}
}  // namespace

PreconditionFailed::PreconditionFailed(std::vector<std::string> failed)
    : Error(ErrorKind::PreconditionFailed, join(failed)), failed_(std::move(failed)) {}

const Config& config() { return global_config(); }

void set_config(const Config& cfg) { global_config() = cfg; }

void apply_config_key(Config& cfg, const std::string& key, const std::string& value) {
  try {
    if (key == "zero_tol") cfg.zero_tol = std::stod(value);
    else if (key == "liminf_threshold") cfg.liminf_threshold = std::stod(value);
    else if (key == "opial_window") cfg.opial_window = std::stoul(value);
    else if (key == "opial_converge_tol") cfg.opial_converge_tol = std::stod(value);
    else if (key == "opial_separation") cfg.opial_separation = std::stod(value);
    else if (key == "cluster_eps") cfg.cluster_eps = std::stod(value);
    else if (key == "cluster_min_count") cfg.cluster_min_count = std::stoul(value);
    else if (key == "direction_resolution") cfg.direction_resolution = std::stod(value);
    else if (key == "opial_truncation_divisor") cfg.opial_truncation_divisor = std::stoul(value);
    else if (key == "horizon") cfg.horizon = std::stoul(value);
    else if (key == "grid") cfg.grid = std::stoul(value);
    else if (key == "grid_lo") cfg.grid_lo = std::stod(value);
    else if (key == "grid_hi") cfg.grid_hi = std::stod(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "jobs") cfg.jobs = std::stoul(value);
    else throw Error(ErrorKind::InvalidInput, "unknown config key '" + key + "'");
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidInput, "bad value for '" + key + "': " + value);
  }
}

Config parse_config(const std::string& text, Config base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(ErrorKind::InvalidInput, "config line " + std::to_string(lineno) + " has no '='");
    apply_config_key(base, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return base;
}

Config load_config_file(const std::string& path, Config base) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot open config file " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), base);
}

}  // namespace fejer
