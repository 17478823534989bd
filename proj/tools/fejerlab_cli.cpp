#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fejerlab/asymptotics.hpp"
#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"
#include "fejerlab/verify.hpp"
#include "fejerlab/zoo.hpp"

using namespace fejer;
using oj = nlohmann::ordered_json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

// JSON array of vectors, {"terms": [...]}, or CSV with a header row.
std::vector<Vector> read_vectors(const std::string& path) {
  std::string text = read_file(path);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  std::vector<Vector> out;
  if (text[first] == '[' || text[first] == '{') {
    auto j = nlohmann::json::parse(text);
    const auto& arr = j.is_object() ? j.at("terms") : j;
    for (const auto& v : arr) out.push_back(vector_from_json(v));
    return out;
  }
  std::istringstream in(text);
  std::string line;
  bool header = true, skip_index = false;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    auto cells = split_csv(line);
    if (header) {
      header = false;
      skip_index = !cells.empty() && cells[0] == "n";
      continue;
    }
    std::vector<double> vals;
    for (std::size_t i = skip_index ? 1 : 0; i < cells.size(); ++i) {
      try {
        vals.push_back(std::stod(cells[i]));
      } catch (const std::exception&) {
        throw Error(ErrorKind::InvalidInput, "bad CSV number '" + cells[i] + "'");
      }
    }
    out.push_back(Vector::dense(std::span<const double>(vals)));
  }
  return out;
}

Region read_region(const std::string& arg) {
  std::size_t first = arg.find_first_not_of(" \t\r\n");
  std::string text = (first != std::string::npos && arg[first] == '{') ? arg : read_file(arg);
  return region_from_json(nlohmann::json::parse(text));
}

std::string gen_csv(const std::vector<Vector>& terms, std::size_t width) {
  std::string s = "n";
  for (std::size_t i = 0; i < width; ++i) s += ",x" + std::to_string(i);
  s += "\n";
  for (std::size_t n = 0; n < terms.size(); ++n)
    s += std::to_string(n) + "," + csv_row(terms[n], width) + "\n";
  return s;
}

int cmd_list(const std::string& claims_for, bool as_json) {
  if (!claims_for.empty()) {
    const auto& spec = analytic_facts(claims_for);
    if (as_json) {
      oj j;
      j["example"] = std::string(to_string(spec.id));
      j["claims"] = oj::array();
      for (const auto& c : spec.expected)
        j["claims"].push_back({{"id", c.id}, {"statement", c.statement}});
      j["checks"] = registered_claims(spec.id);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << to_string(spec.id) << ": " << spec.title << "\n";
      for (const auto& c : spec.expected) std::cout << "  " << c.id << "  " << c.statement << "\n";
      std::cout << "checks:";
      for (const auto& c : registered_claims(spec.id)) std::cout << " " << c;
      std::cout << "\n";
    }
    return 0;
  }
  if (as_json) {
    oj arr = oj::array();
    for (auto id : all_examples()) {
      const auto& spec = analytic_facts(id);
      oj row;
      row["id"] = std::string(to_string(id));
      row["title"] = spec.title;
      row["params"] = spec.params;
      row["planar"] = spec.planar;
      row["claims"] = oj::array();
      for (const auto& c : spec.expected) row["claims"].push_back(c.id);
      arr.push_back(row);
    }
    std::cout << oj{{"examples", arr}}.dump(2) << "\n";
    return 0;
  }
  for (auto id : all_examples()) {
    const auto& spec = analytic_facts(id);
    std::cout << std::left << std::setw(20) << to_string(id) << spec.title << "\n";
  }
  return 0;
}

int cmd_gen(const std::string& id_name, std::size_t n, const std::string& format,
            std::size_t width, const std::string& out) {
  const auto& spec = analytic_facts(id_name);
  auto terms = zoo_sequence(spec.id).prefix(n);
  if (width == 0) width = spec.width(n);
  if (format == "csv") {
    write_out(out, gen_csv(terms, width));
  } else {
    oj j;
    j["example"] = std::string(to_string(spec.id));
    j["n"] = n;
    j["terms"] = oj::array();
    for (const auto& t : terms) j["terms"].push_back(to_json(t));
    write_out(out, j.dump() + "\n");
  }
  return 0;
}

int cmd_classify(const std::string& example, const std::string& file, const std::string& set,
                 const std::string& points, std::size_t horizon, const std::string& report) {
  if (example.empty() == file.empty()) throw UsageError("give exactly one of --example, --file");
  const ExampleSpec* spec = example.empty() ? nullptr : &analytic_facts(example);
  std::unique_ptr<TermList> list;
  const Sequence* seq = nullptr;
  if (spec) {
    seq = &zoo_sequence(spec->id);
  } else {
    list = std::make_unique<TermList>(read_vectors(file));
    seq = list.get();
    if (list->terms().size() < 2) throw UsageError("term list needs at least 2 terms");
    horizon = std::min(horizon, list->terms().size() - 1);
  }
  TailCertificate cert;
  const TailCertificate* cert_ptr = nullptr;
  if (!set.empty()) {
    Region r = read_region(set);
    cert = [r](const Vector& y) {
      return contains(r, y, 1e-12) ? TailClaim::EventuallyIn : TailClaim::InfinitelyOftenOut;
    };
    cert_ptr = &cert;
  } else if (spec) {
    cert_ptr = &spec->certificate;
  }
  std::vector<Vector> samples;
  if (!points.empty())
    samples = read_vectors(points);
  else if (spec)
    samples = spec->samples;
  else
    throw UsageError("--points is required with --file");
  ClassifyContext ctx{cert_ptr, spec ? &spec->quasi : nullptr};
  auto rep = classify(*seq, samples, horizon, ctx);
  oj j = to_json(rep);
  if (spec) j["example"] = std::string(to_string(spec->id));
  write_out(report, j.dump(2) + "\n");
  return 0;
}

int cmd_maxset2d(const std::string& id_name, std::size_t first, std::size_t horizon,
                 std::size_t grid_points, const std::string& format, const std::string& out) {
  const auto& spec = analytic_facts(id_name);
  if (!spec.planar) throw UsageError("maxset2d needs a planar example");
  const Config& cfg = config();
  GridSpec g{grid_points ? grid_points : cfg.grid, cfg.grid_lo, cfg.grid_hi};
  Region r = maximal_set_2d(zoo_sequence(spec.id), first, horizon);
  auto cells = grid_snapshot(r, g, 1e-9);
  if (format == "csv") {
    write_out(out, grid_csv(cells));
  } else {
    oj j;
    j["example"] = std::string(to_string(spec.id));
    j["first"] = first;
    j["horizon"] = horizon;
    j["region"] = to_json(r);
    j["cells"] = oj::array();
    for (const auto& c : cells) j["cells"].push_back({c.x, c.y, to_string(c.status)});
    write_out(out, j.dump() + "\n");
  }
  return 0;
}

int cmd_asymptotics(const std::string& id_name, std::size_t horizon, const std::string& out,
                    const std::string& ratio_csv) {
  const auto& spec = analytic_facts(id_name);
  const auto& seq = zoo_sequence(spec.id);
  oj j;
  j["example"] = std::string(to_string(spec.id));
  j["horizon"] = horizon;
  auto clusters = direction_clusters(seq, horizon);
  j["clusters"] = to_json(clusters);
  if (!clusters.representatives.empty()) {
    auto k = cone_from_clusters(clusters, spec.planar ? std::optional<std::size_t>(2)
                                                      : std::nullopt);
    j["cone"] = to_json(k);
  } else {
    j["cone"] = nullptr;
  }
  if (spec.tangent_cone && spec.limit) {
    try {
      auto rp = ratio_profile(seq, *spec.tangent_cone, *spec.limit, horizon);
      j["ratio_profile"] = to_json(rp);
      if (!ratio_csv.empty()) {
        std::string s = "n,ratio\n";
        for (std::size_t n = 0; n < rp.ratios.size(); ++n)
          s += std::to_string(n) + "," + format_real(rp.ratios[n]) + "\n";
        write_out(ratio_csv, s);
      }
    } catch (const Error& e) {
      j["ratio_profile"] = {{"error", e.what()}};
    }
  }
  if (spec.planar) {
    try {
      auto ci = cone_identity_2d(seq, horizon, spec.limit);
      j["identity"] = to_json(ci);
    } catch (const PreconditionFailed& pf) {
      j["identity"] = {{"precondition_failed", pf.failed()}};
    } catch (const Error& e) {
      j["identity"] = {{"error", e.what()}};
    }
  } else {
    try {
      j["opial_flat"] = to_json(maximal_opial_flat(seq, horizon, config().cluster_eps));
    } catch (const Error& e) {
      j["opial_flat"] = {{"error", e.what()}};
    }
  }
  write_out(out, j.dump(2) + "\n");
  return 0;
}

int cmd_verify(const std::string& target, std::size_t jobs, const std::string& report) {
  std::vector<ExampleId> ids;
  if (target == "all")
    ids.assign(all_examples().begin(), all_examples().end());
  else
    ids.push_back(parse_example(target));
  auto t0 = std::chrono::steady_clock::now();
  auto reps = verify_examples(ids, jobs);
  double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool ok = true;
  oj j;
  j["reports"] = oj::array();
  for (const auto& r : reps) {
    ok = ok && r.passed();
    j["reports"].push_back(to_json(r));
    for (const auto& c : r.claims)
      std::cerr << to_string(c.status) << "  " << to_string(r.id) << "/" << c.claim_id << "\n";
  }
  j["wall_time"] = wall;
  j["status"] = ok ? "Pass" : "Fail";
  if (target != "all") j = j["reports"][0];
  write_out(report, j.dump(2) + "\n");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fejerlab: Fejer* monotone sequences, their maximal sets and asymptotics"};
  app.require_subcommand(1);
  std::string config_path;
  std::optional<std::uint64_t> seed;
  app.add_option("--config", config_path, "key=value config file (default $FEJERLAB_CONFIG)");
  app.add_option("--seed", seed, "seed for randomized probes");

  auto* list = app.add_subcommand("list", "examples and their claims");
  std::string list_claims;
  bool list_json = false;
  list->add_option("--claims", list_claims, "show the claims of one example");
  list->add_flag("--json", list_json);

  auto* gen = app.add_subcommand("gen", "emit a trajectory");
  std::string gen_id, gen_format = "csv", gen_out;
  std::size_t gen_n = 10, gen_width = 0;
  gen->add_option("id", gen_id)->required();
  gen->add_option("--n", gen_n, "number of terms");
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"csv", "json"}));
  gen->add_option("--width", gen_width, "CSV coordinate columns (default: example width)");
  gen->add_option("-o,--out", gen_out);

  auto* cls = app.add_subcommand("classify", "monotonicity classification");
  std::string cls_example, cls_file, cls_set, cls_points, cls_report;
  std::optional<std::size_t> cls_horizon;
  cls->add_option("--example", cls_example);
  cls->add_option("--file", cls_file, "term list (CSV or JSON)");
  cls->add_option("--set", cls_set, "Region JSON or a file holding it");
  cls->add_option("--points", cls_points, "sample points (CSV or JSON)");
  cls->add_option("--horizon", cls_horizon);
  cls->add_option("--report", cls_report, "output path (default stdout)");

  auto* ms = app.add_subcommand("maxset2d", "grid snapshot of the intersection of C_n");
  std::string ms_id, ms_format = "csv", ms_out;
  std::size_t ms_first = 0, ms_grid = 0;
  std::optional<std::size_t> ms_horizon;
  ms->add_option("id", ms_id)->required();
  ms->add_option("--N", ms_first, "first index");
  ms->add_option("--horizon", ms_horizon);
  ms->add_option("--grid", ms_grid, "points per axis");
  ms->add_option("--format", ms_format)->check(CLI::IsMember({"csv", "json"}));
  ms->add_option("-o,--out", ms_out);

  auto* as = app.add_subcommand("asymptotics", "directional asymptotics");
  std::string as_id, as_out, as_csv;
  std::optional<std::size_t> as_horizon;
  as->add_option("id", as_id)->required();
  as->add_option("--horizon", as_horizon);
  as->add_option("-o,--out", as_out);
  as->add_option("--ratio-csv", as_csv, "write the ratio profile as CSV");

  auto* ver = app.add_subcommand("verify", "run the registered claims");
  std::string ver_target, ver_report;
  std::optional<std::size_t> ver_jobs;
  ver->add_option("target", ver_target, "example id or 'all'")->required();
  ver->add_option("--jobs", ver_jobs);
  ver->add_option("--report", ver_report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Config cfg;
    if (config_path.empty())
      if (const char* env = std::getenv("FEJERLAB_CONFIG")) config_path = env;
    if (!config_path.empty()) {
      try {
        cfg = load_config_file(config_path);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
    }
    if (seed) cfg.seed = *seed;
    if (ver_jobs) cfg.jobs = *ver_jobs;
    set_config(cfg);

    if (*list) return cmd_list(list_claims, list_json);
    if (*gen) return cmd_gen(gen_id, gen_n, gen_format, gen_width, gen_out);
    if (*cls)
      return cmd_classify(cls_example, cls_file, cls_set, cls_points,
                          cls_horizon.value_or(cfg.horizon), cls_report);
    if (*ms)
      return cmd_maxset2d(ms_id, ms_first, ms_horizon.value_or(ms_first + 64), ms_grid, ms_format,
                          ms_out);
    if (*as) return cmd_asymptotics(as_id, as_horizon.value_or(cfg.horizon), as_out, as_csv);
    if (*ver) return cmd_verify(ver_target, cfg.jobs, ver_report);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::UnknownExample || e.kind() == ErrorKind::InvalidInput ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
