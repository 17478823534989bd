#include "fejerlab/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"

namespace fejer {

namespace {

bool resolvable(const Vector& x, const Vector& x_next) {
  return dist(x, x_next) > config().direction_resolution * (1.0 + norm(x));
}

// Gram-Schmidt; drops vectors dependent within 1e-10.
std::vector<Vector> orthonormalize(const std::vector<Vector>& vs) {
  std::vector<Vector> out;
  for (const auto& v : vs) {
    Vector w = v;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : out) w = w - inner(w, b) * b;
    double nw = norm(w);
    if (nw <= 1e-10 * std::max(1.0, norm(v))) continue;
    w = w / nw;
    // first nonzero coordinate positive
    if (!w.entries().empty() && w.entries().front().value < 0) w = -w;
    out.push_back(w);
  }
  return out;
}

Vector project_onto_span(const std::vector<Vector>& basis, const Vector& x) {
  Vector p;
  for (const auto& b : basis) p = p + inner(x, b) * b;
  return p;
}

}  // namespace

std::vector<Vector> normalized_diffs(const Sequence& seq, std::size_t horizon) {
  auto x = seq.prefix(horizon + 1);
  std::vector<Vector> out;
  out.reserve(horizon);
  for (std::size_t n = 0; n < horizon; ++n) {
    Vector d = x[n] - x[n + 1];
    out.push_back(d.is_zero() ? Vector{} : d / norm(d));
  }
  return out;
}

DirectionClusterSet cluster_directions(const std::vector<Vector>& vs, double epsilon,
                                       std::size_t min_count) {
  if (!(epsilon > 0.0 && epsilon < 0.5))
    throw Error(ErrorKind::InvalidInput, "cluster epsilon must lie in (0, 1/2)");
  std::vector<Vector> sums, reps;
  std::vector<std::size_t> counts;
  for (const auto& v : vs) {
    if (v.is_zero()) continue;
    std::size_t hit = reps.size();
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (dist(v, reps[c]) <= epsilon) {
        hit = c;
        break;
      }
    if (hit == reps.size()) {
      sums.push_back(v);
      reps.push_back(v);
      counts.push_back(1);
    } else {
      sums[hit] = sums[hit] + v;
      ++counts[hit];
      reps[hit] = unit(sums[hit]);
    }
  }
  DirectionClusterSet d;
  d.epsilon = epsilon;
  for (std::size_t c = 0; c < reps.size(); ++c)
    if (counts[c] >= min_count) {
      d.representatives.push_back(reps[c]);
      d.counts.push_back(counts[c]);
    }
  return d;
}

std::vector<Vector> tail_directions(const Sequence& seq, std::size_t horizon) {
  auto x = seq.prefix(horizon + 1);
  std::vector<Vector> dirs;
  for (std::size_t n = 0; n < horizon; ++n)
    if (resolvable(x[n], x[n + 1])) dirs.push_back(unit(x[n] - x[n + 1]));
  dirs.erase(dirs.begin(), dirs.begin() + static_cast<std::ptrdiff_t>(dirs.size() / 2));
  return dirs;
}

std::size_t tail_repeats(const Sequence& seq, std::size_t horizon) {
  auto x = seq.prefix(horizon + 1);
  std::size_t r = 0;
  for (std::size_t n = horizon / 2; n < horizon; ++n)
    if (x[n] == x[n + 1]) ++r;
  return r;
}

DirectionClusterSet direction_clusters(const Sequence& seq, std::size_t horizon) {
  const Config& cfg = config();
  return cluster_directions(tail_directions(seq, horizon), cfg.cluster_eps,
                            cfg.cluster_min_count);
}

FinCone cone_from_clusters(const DirectionClusterSet& d, std::optional<std::size_t> ambient) {
  if (d.representatives.empty())
    throw Error(ErrorKind::NoClusters, "no direction clusters");
  return FinCone::halfspaces(d.representatives, ambient);
}

double support_function(const DirectionClusterSet& d, const Vector& x) {
  double s = -std::numeric_limits<double>::infinity();
  for (const auto& r : d.representatives) s = std::max(s, inner(r, x));
  return s;
}

InclusionReport direct_inclusion_check(const Sequence& seq, const Vector& z,
                                       const std::vector<Vector>& mbar_samples,
                                       std::size_t horizon, double tol) {
  const Config& cfg = config();
  InclusionReport rep;
  rep.step_clusters = direction_clusters(seq, horizon);
  std::vector<Vector> us;
  auto x = seq.prefix(horizon);
  for (std::size_t n = 0; n < horizon; ++n)
    if (resolvable(z, x[n])) us.push_back(unit(x[n] - z));
  us.erase(us.begin(), us.begin() + static_cast<std::ptrdiff_t>(us.size() / 2));
  rep.limit_clusters = cluster_directions(us, cfg.cluster_eps, cfg.cluster_min_count);
  double m = -std::numeric_limits<double>::infinity();
  for (const auto* cs : {&rep.step_clusters, &rep.limit_clusters})
    for (const auto& w : cs->representatives)
      for (const auto& y : mbar_samples) m = std::max(m, inner(w, y - z));
  rep.max_pairing = m;
  rep.ok = m <= tol;
  return rep;
}

RatioProfile ratio_profile(const Sequence& seq, const FinCone& k, const Vector& z,
                           std::size_t horizon, std::size_t window) {
  if (horizon < 2) throw Error(ErrorKind::InvalidInput, "horizon must be >= 2");
  RatioProfile r;
  for (std::size_t n = 0; n < horizon; ++n) {
    Vector d = seq.term(n) - z;
    double nd = norm(d);
    if (nd == 0.0)
      throw Error(ErrorKind::DivideByZero, "x_" + std::to_string(n) + " equals z");
    r.ratios.push_back(k.distance(d) / nd);
  }
  r.liminf_est = *std::min_element(r.ratios.begin() + static_cast<std::ptrdiff_t>(horizon / 2),
                                   r.ratios.end());
  std::size_t w = std::min(window, horizon);
  r.limit_one = std::all_of(r.ratios.end() - static_cast<std::ptrdiff_t>(w), r.ratios.end(),
                            [](double q) { return std::abs(q - 1.0) <= 1e-3; });
  r.gamma_est = r.liminf_est > 0 ? 1.0 / r.liminf_est : std::numeric_limits<double>::infinity();
  return r;
}

ConeIdentityReport cone_identity_2d(const Sequence& seq, std::size_t horizon,
                                    const std::optional<Vector>& z, const GridSpec& grid,
                                    double band) {
  const Config& cfg = config();
  std::vector<std::string> failed;
  double sup = 0.0;
  for (const auto& v : seq.prefix(horizon + 1)) sup = std::max(sup, norm(v));
  if (!(sup < 1e6)) failed.push_back("bounded");
  if (tail_repeats(seq, horizon) >= cfg.cluster_min_count) failed.push_back("0notinD");
  ConeIdentityReport rep;
  rep.clusters = direction_clusters(seq, horizon);
  if (rep.clusters.representatives.empty()) {
    failed.push_back("solid");
  } else {
    auto dual = dual_interior_direction(FinCone::generated_by(rep.clusters.representatives));
    // margins below the clustering radius are not resolved
    if (!dual || dual->margin <= cfg.cluster_eps) failed.push_back("solid");
  }
  if (!failed.empty()) throw PreconditionFailed(failed);
  rep.cone = cone_from_clusters(rep.clusters, 2);
  rep.z = z ? *z : seq.term(horizon);
  rep.first = horizon / 2;
  Region mset = maximal_set_2d(seq, rep.first, horizon);
  for (std::size_t j = 0; j < grid.points; ++j)
    for (std::size_t i = 0; i < grid.points; ++i) {
      Vector y = Vector::dense({grid.coord(i), grid.coord(j)});
      double m = support_function(rep.clusters, y - rep.z);
      Cell c = classify_cell(mset, y, band);
      if (std::abs(m) <= band || c == Cell::Boundary) {
        ++rep.band_cells;
      } else if (m < 0) {
        ++rep.interior_cells;
        if (c != Cell::In) ++rep.interior_mismatches;
      } else {
        ++rep.exterior_cells;
        if (c != Cell::Out) ++rep.exterior_mismatches;
      }
    }
  rep.interior_match = rep.interior_mismatches == 0;
  rep.closure_match = rep.interior_match && rep.exterior_mismatches == 0;
  return rep;
}

std::vector<GammaViolation> gamma_bound_check(const Sequence& seq, const Vector& z,
                                              const std::vector<Vector>& mbar_samples,
                                              double gamma, std::size_t horizon) {
  std::vector<GammaViolation> out;
  for (std::size_t n = horizon / 2; n < horizon; ++n) {
    Vector x = seq.term(n);
    for (std::size_t s = 0; s < mbar_samples.size(); ++s) {
      double lhs = dist(z, mbar_samples[s]);
      double rhs = (gamma + 2.0) * dist(x, mbar_samples[s]);
      if (lhs > rhs + 1e-12 * (1.0 + lhs)) out.push_back({n, s, lhs, rhs});
    }
  }
  return out;
}

OpialFlat maximal_opial_flat(const Sequence& seq, std::size_t horizon, double cluster_eps) {
  const Config& cfg = config();
  if (horizon < 4) throw Error(ErrorKind::InvalidInput, "horizon must be >= 4");
  OpialFlat f;
  f.truncation = std::max<std::size_t>(1, horizon / cfg.opial_truncation_divisor);
  std::vector<Vector> sums;
  std::vector<double> sq;
  std::vector<std::size_t> counts;
  for (std::size_t n = horizon / 2; n < horizon; ++n) {
    Vector full = seq.term(n);
    Vector t = full.truncated(f.truncation);
    std::size_t hit = f.cluster_points.size();
    for (std::size_t c = 0; c < f.cluster_points.size(); ++c)
      if (dist(t, f.cluster_points[c]) <= cluster_eps) {
        hit = c;
        break;
      }
    if (hit == f.cluster_points.size()) {
      f.cluster_points.push_back(t);
      sums.push_back(t);
      sq.push_back(norm_squared(full));
      counts.push_back(1);
    } else {
      sums[hit] = sums[hit] + t;
      sq[hit] += norm_squared(full);
      ++counts[hit];
      f.cluster_points[hit] = sums[hit] / static_cast<double>(counts[hit]);
    }
  }
  std::vector<Vector> W;
  std::vector<double> s;
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c] >= cfg.cluster_min_count) {
      W.push_back(f.cluster_points[c]);
      s.push_back(sq[c] / static_cast<double>(counts[c]));
    }
  if (W.empty()) throw Error(ErrorKind::NoClusters, "no cluster points in the tail");
  f.cluster_points = W;
  std::vector<Vector> diffs;
  for (std::size_t j = 1; j < W.size(); ++j) diffs.push_back(W[j] - W[0]);
  f.basisL = orthonormalize(diffs);
  // z = W0 + sum c_i b_i with <W_j - W_0, z> = (s_j - s_0)/2
  const std::size_t k = f.basisL.size();
  Vector z = W[0];
  if (k > 0) {
    // least squares over the cluster constraints
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;
    for (std::size_t j = 1; j < W.size(); ++j) {
      std::vector<double> row;
      for (const auto& b : f.basisL) row.push_back(inner(diffs[j - 1], b));
      rows.push_back(row);
      rhs.push_back(0.5 * (s[j] - s[0]) - inner(diffs[j - 1], W[0]));
    }
    // normal equations, k is small
    std::vector<std::vector<double>> g(k, std::vector<double>(k + 1, 0.0));
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) g[a][b] += rows[r][a] * rows[r][b];
        g[a][k] += rows[r][a] * rhs[r];
      }
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t piv = a;
      for (std::size_t r = a + 1; r < k; ++r)
        if (std::abs(g[r][a]) > std::abs(g[piv][a])) piv = r;
      std::swap(g[a], g[piv]);
      if (std::abs(g[a][a]) < 1e-14) throw Error(ErrorKind::Internal, "singular flat system");
      for (std::size_t r = 0; r < k; ++r) {
        if (r == a) continue;
        double fct = g[r][a] / g[a][a];
        for (std::size_t c = a; c <= k; ++c) g[r][c] -= fct * g[a][c];
      }
    }
    for (std::size_t a = 0; a < k; ++a) z = z + (g[a][k] / g[a][a]) * f.basisL[a];
  }
  f.z = z;
  f.flat = Region::flat(z, f.basisL, FlatMode::Complement);
  Vector p_o0 = project_onto_span(f.basisL, z);
  Vector p_a0 = W[0] - project_onto_span(f.basisL, W[0]);
  f.z_error = dist(z, p_o0 + p_a0);

  // probes: along L must oscillate, orthogonal to L must converge
  std::size_t width = f.truncation;
  for (const auto& v : W) width = std::max(width, v.support_end());
  f.on_probes.push_back(z);
  for (std::size_t i = 0; i < width + 2 && f.on_probes.size() < 4; ++i) {
    Vector e = Vector::basis(i, 1.0);
    Vector off = e - project_onto_span(f.basisL, e);
    if (norm(off) > 0.5) f.on_probes.push_back(z + unit(off));
  }
  for (const auto& b : f.basisL) {
    f.off_probes.push_back(z + b);
    f.off_probes.push_back(z - 0.5 * b);
  }
  f.on_flat_converges = std::all_of(f.on_probes.begin(), f.on_probes.end(), [&](const Vector& y) {
    return is_converges(opial_verdict(seq, y, horizon));
  });
  f.off_flat_oscillates =
      std::all_of(f.off_probes.begin(), f.off_probes.end(),
                  [&](const Vector& y) { return is_oscillates(opial_verdict(seq, y, horizon)); });
  return f;
}

nlohmann::ordered_json to_json(const DirectionClusterSet& d) {
  nlohmann::ordered_json j;
  j["epsilon"] = d.epsilon;
  j["representatives"] = nlohmann::ordered_json::array();
  for (const auto& r : d.representatives) j["representatives"].push_back(to_json(r));
  j["counts"] = d.counts;
  return j;
}

nlohmann::ordered_json to_json(const FinCone& k) {
  nlohmann::ordered_json j;
  j["form"] = k.form() == FinCone::Form::Generators ? "generators" : "halfspaces";
  j["vectors"] = nlohmann::ordered_json::array();
  for (const auto& v : k.vectors()) j["vectors"].push_back(to_json(v));
  if (k.ambient()) j["ambient"] = *k.ambient();
  return j;
}

nlohmann::ordered_json to_json(const RatioProfile& r) {
  nlohmann::ordered_json j;
  j["liminf_est"] = r.liminf_est;
  j["limit_one"] = r.limit_one;
  if (std::isfinite(r.gamma_est))
    j["gamma_est"] = r.gamma_est;
  else
    j["gamma_est"] = nullptr;
  j["ratios"] = r.ratios;
  return j;
}

nlohmann::ordered_json to_json(const ConeIdentityReport& r) {
  nlohmann::ordered_json j;
  j["z"] = to_json(r.z);
  j["first"] = r.first;
  j["cone"] = to_json(r.cone);
  j["interior_cells"] = r.interior_cells;
  j["interior_mismatches"] = r.interior_mismatches;
  j["exterior_cells"] = r.exterior_cells;
  j["exterior_mismatches"] = r.exterior_mismatches;
  j["band_cells"] = r.band_cells;
  j["interior_match"] = r.interior_match;
  j["closure_match"] = r.closure_match;
  return j;
}

nlohmann::ordered_json to_json(const OpialFlat& f) {
  nlohmann::ordered_json j;
  j["truncation"] = f.truncation;
  j["cluster_points"] = nlohmann::ordered_json::array();
  for (const auto& w : f.cluster_points) j["cluster_points"].push_back(to_json(w));
  j["basisL"] = nlohmann::ordered_json::array();
  for (const auto& b : f.basisL) j["basisL"].push_back(to_json(b));
  j["z"] = to_json(f.z);
  j["flat"] = to_json(f.flat);
  j["z_error"] = f.z_error;
  j["on_flat_converges"] = f.on_flat_converges;
  j["off_flat_oscillates"] = f.off_flat_oscillates;
  return j;
}

}  // namespace fejer
