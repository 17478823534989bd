#include "fejerlab/engine.hpp"

#include <cmath>
#include <limits>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"

namespace fejer {

StepHalfspace StepHalfspace::between(const Vector& x, const Vector& x_next) {
  StepHalfspace s;
  if (x == x_next) return s;
  s.all_space_ = false;
  s.normal_ = x_next - x;
  s.midpoint_ = 0.5 * (x + x_next);
  // (|x+|^2 - |x|^2)/2 = <m, x+ - x>
  s.offset_ = inner(s.midpoint_, s.normal_);
  return s;
}

StepHalfspace step_halfspace(const Vector& x, const Vector& x_next) {
  return StepHalfspace::between(x, x_next);
}

double StepHalfspace::signed_distance(const Vector& y) const {
  if (all_space_) return std::numeric_limits<double>::infinity();
  return inner(y - midpoint_, normal_) / norm(normal_);
}

bool StepHalfspace::contains(const Vector& y) const {
  if (all_space_) return true;
  return signed_distance(y) >= -config().zero_tol * (1.0 + norm(y));
}

Region StepHalfspace::to_region() const {
  if (all_space_) return Region::all_space();
  return Region::halfspace_through(normal_, midpoint_);
}

std::vector<StepHalfspace> step_table(const Sequence& seq, std::size_t horizon) {
  require_terms(seq, horizon + 1, "step table");
  std::vector<StepHalfspace> steps;
  steps.reserve(horizon);
  Vector prev = seq.term(0);
  for (std::size_t n = 0; n < horizon; ++n) {
    Vector next = seq.term(n + 1);
    steps.push_back(StepHalfspace::between(prev, next));
    prev = std::move(next);
  }
  return steps;
}

LiminfVerdict liminf_membership(const Sequence& seq, const Vector& y, std::size_t horizon,
                                const TailCertificate* cert) {
  if (horizon < 2) throw Error(ErrorKind::InvalidInput, "horizon must be >= 2");
  return liminf_membership(step_table(seq, horizon), y, cert);
}

LiminfVerdict liminf_membership(const std::vector<StepHalfspace>& steps, const Vector& y,
                                const TailCertificate* cert) {
  const std::size_t horizon = steps.size();
  std::vector<std::size_t> violations;
  for (std::size_t n = 0; n < horizon; ++n)
    if (!steps[n].contains(y)) violations.push_back(n);
  std::size_t N = violations.empty() ? 0 : violations.back() + 1;
  TailClaim claim = cert && *cert ? (*cert)(y) : TailClaim::Unknown;
  if (claim == TailClaim::InfinitelyOftenOut) return Excluded{std::move(violations), true};
  if (claim == TailClaim::EventuallyIn) {
    if (N < horizon) return InTail{N, true};
    return Inconclusive{horizon};
  }
  const double threshold = config().liminf_threshold;
  if (static_cast<double>(N) <= threshold * static_cast<double>(horizon)) return InTail{N, false};
  if (4 * violations.back() >= 3 * horizon) return Excluded{std::move(violations), false};
  return Inconclusive{horizon};
}

bool is_in_tail(const LiminfVerdict& v) { return std::holds_alternative<InTail>(v); }
bool is_excluded(const LiminfVerdict& v) { return std::holds_alternative<Excluded>(v); }

nlohmann::ordered_json to_json(const LiminfVerdict& v) {
  nlohmann::ordered_json j;
  if (auto* t = std::get_if<InTail>(&v)) {
    j["verdict"] = "InTail";
    j["N"] = t->N;
    j["certified"] = t->certified;
  } else if (auto* e = std::get_if<Excluded>(&v)) {
    j["verdict"] = "Excluded";
    j["violations"] = e->violations;
    j["certified"] = e->certified;
  } else {
    j["verdict"] = "Inconclusive";
    j["horizon"] = std::get<Inconclusive>(v).horizon;
  }
  return j;
}

Region maximal_set_2d(const Sequence& seq, std::size_t first, std::size_t horizon) {
  if (first >= horizon) throw Error(ErrorKind::InvalidInput, "need first < horizon");
  require_terms(seq, horizon + 1, "maximal_set_2d");
  std::vector<Region> planes;
  for (std::size_t n = first; n < horizon; ++n) {
    Vector x = seq.term(n), xn = seq.term(n + 1);
    if (x.support_end() > 2 || xn.support_end() > 2)
      throw Error(ErrorKind::InvalidInput, "maximal_set_2d needs a sequence in R^2");
    auto s = StepHalfspace::between(x, xn);
    if (s.is_all_space())
      throw Error(ErrorKind::DegenerateStep, "x_" + std::to_string(n) + " equals its successor");
    planes.push_back(s.to_region());
  }
  return Region::intersect(std::move(planes));
}

double GridSpec::coord(std::size_t i) const {
  if (points < 2) return lo;
  return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
}

std::vector<GridCell> grid_snapshot(const Region& r, const GridSpec& grid, double band) {
  std::vector<GridCell> out;
  out.reserve(grid.points * grid.points);
  for (std::size_t j = 0; j < grid.points; ++j)
    for (std::size_t i = 0; i < grid.points; ++i) {
      double x = grid.coord(i), y = grid.coord(j);
      out.push_back({x, y, classify_cell(r, Vector::dense({x, y}), band)});
    }
  return out;
}

std::string grid_csv(const std::vector<GridCell>& cells) {
  std::string out = "x,y,status\n";
  for (const auto& c : cells)
    out += format_real(c.x) + "," + format_real(c.y) + "," + to_string(c.status) + "\n";
  return out;
}

}  // namespace fejer
