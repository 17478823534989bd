#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <json.hpp>

#include "fejerlab/cone.hpp"
#include "fejerlab/engine.hpp"
#include "fejerlab/region.hpp"
#include "fejerlab/sequence.hpp"

namespace fejer {

// v_n = (x_n - x_{n+1}) / |x_n - x_{n+1}|, zero on repeats; n < horizon.
std::vector<Vector> normalized_diffs(const Sequence& seq, std::size_t horizon);

struct DirectionClusterSet {
  std::vector<Vector> representatives;
  std::vector<std::size_t> counts;
  double epsilon = 0.05;
};

// Greedy epsilon-ball clustering in input order, zeros dropped, clusters
// with fewer than min_count members discarded.
DirectionClusterSet cluster_directions(const std::vector<Vector>& vs, double epsilon,
                                       std::size_t min_count);

// Directions of the resolvable steps among n < horizon, latter half only.
std::vector<Vector> tail_directions(const Sequence& seq, std::size_t horizon);
// Number of repeats (v_n = 0) in the same tail range.
std::size_t tail_repeats(const Sequence& seq, std::size_t horizon);
DirectionClusterSet direction_clusters(const Sequence& seq, std::size_t horizon);

// K = polar of cone(representatives), as halfspaces.
FinCone cone_from_clusters(const DirectionClusterSet& d,
                           std::optional<std::size_t> ambient = {});
double support_function(const DirectionClusterSet& d, const Vector& x);

struct InclusionReport {
  DirectionClusterSet step_clusters;   // of v_n
  DirectionClusterSet limit_clusters;  // of (x_n - z)/|x_n - z|
  double max_pairing = 0.0;
  bool ok = false;
};
InclusionReport direct_inclusion_check(const Sequence& seq, const Vector& z,
                                       const std::vector<Vector>& mbar_samples,
                                       std::size_t horizon, double tol);

struct RatioProfile {
  std::vector<double> ratios;  // n = 0..horizon-1
  double liminf_est = 0.0;     // min over [horizon/2, horizon)
  bool limit_one = false;      // last `window` ratios within 1e-3 of 1
  double gamma_est = 0.0;      // 1 / liminf_est (inf when 0)
};
// Throws DivideByZero if a scanned term equals z.
RatioProfile ratio_profile(const Sequence& seq, const FinCone& k, const Vector& z,
                           std::size_t horizon, std::size_t window = 20);

struct ConeIdentityReport {
  DirectionClusterSet clusters;
  FinCone cone;
  Vector z;
  std::size_t first = 0;
  std::size_t interior_cells = 0, interior_mismatches = 0;
  std::size_t exterior_cells = 0, exterior_mismatches = 0;
  std::size_t band_cells = 0;
  bool interior_match = false;
  bool closure_match = false;
};
// Compares the finite-horizon maximal set against K + z on a grid.
// Throws PreconditionFailed naming the failed items of {bounded, 0notinD, solid}.
ConeIdentityReport cone_identity_2d(const Sequence& seq, std::size_t horizon,
                                    const std::optional<Vector>& z = {}, const GridSpec& grid = {},
                                    double band = 1e-6);

struct GammaViolation {
  std::size_t n;
  std::size_t sample;
  double lhs, rhs;
};
// |z - y| <= (gamma + 2) |x_n - y| for n in [horizon/2, horizon).
std::vector<GammaViolation> gamma_bound_check(const Sequence& seq, const Vector& z,
                                              const std::vector<Vector>& mbar_samples,
                                              double gamma, std::size_t horizon);

struct OpialFlat {
  std::vector<Vector> cluster_points;  // W on truncated coordinates
  std::vector<Vector> basisL;
  Vector z;
  Region flat;  // L-complement + z
  double z_error = 0.0;  // |z - (P_O(0) + P_affW(0))|
  std::vector<Vector> on_probes, off_probes;
  bool on_flat_converges = false;
  bool off_flat_oscillates = false;
  std::size_t truncation = 0;
};
// Throws NoClusters.
OpialFlat maximal_opial_flat(const Sequence& seq, std::size_t horizon, double cluster_eps);

nlohmann::ordered_json to_json(const DirectionClusterSet& d);
nlohmann::ordered_json to_json(const FinCone& k);
nlohmann::ordered_json to_json(const RatioProfile& r);
nlohmann::ordered_json to_json(const ConeIdentityReport& r);
nlohmann::ordered_json to_json(const OpialFlat& f);

}  // namespace fejer
