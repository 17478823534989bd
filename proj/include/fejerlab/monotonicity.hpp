#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fejerlab/engine.hpp"
#include "fejerlab/projection.hpp"
#include "fejerlab/sequence.hpp"
#include "fejerlab/zoo.hpp"

namespace fejer {

// max(0, |x+ - y| - |x - y|)
double eps1(const Vector& x, const Vector& x_next, const Vector& y);
// max(0, <x+ - x, x+ + x - 2y>) = max(0, |x+ - y|^2 - |x - y|^2)
double eps2(const Vector& x, const Vector& x_next, const Vector& y);
double eps1(const Sequence& seq, std::size_t n, const Vector& y);
double eps2(const Sequence& seq, std::size_t n, const Vector& y);

struct Converges {
  double limit;
  double residual;
};
struct Oscillates {
  double lo;
  double hi;
  std::size_t period;
};
struct OpialUnknown {};
using OpialVerdict = std::variant<Converges, Oscillates, OpialUnknown>;

// Classifies the tail of a scalar sequence (typically |x_n - y|).
OpialVerdict detect_opial(const std::vector<double>& values);
OpialVerdict opial_verdict(const Sequence& seq, const Vector& y, std::size_t horizon);
bool is_converges(const OpialVerdict& v);
bool is_oscillates(const OpialVerdict& v);
nlohmann::ordered_json to_json(const OpialVerdict& v);

struct QuasiTypeReport {
  std::vector<double> partial_sums;        // from sample maxima
  std::vector<double> bound_partial_sums;  // from the analytic sup rule, when finite
  SeriesVerdict verdict = SeriesVerdict::Inconclusive;
  std::string rationale;
};

struct PointReport {
  Vector y;
  bool fejer = false;
  LiminfVerdict fejer_star;
  OpialVerdict opial;
  double type3_sum = 0.0;
};

struct ClassificationReport {
  std::size_t horizon = 0;
  std::vector<PointReport> points;
  QuasiTypeReport type1, type2, type3;
};

struct ClassifyContext {
  const TailCertificate* certificate = nullptr;
  const QuasiRules* rules = nullptr;
};

// Throws EmptySample when samples is empty.
ClassificationReport classify(const Sequence& seq, const std::vector<Vector>& samples,
                              std::size_t horizon, const ClassifyContext& ctx = {});
nlohmann::ordered_json to_json(const ClassificationReport& r);

struct RaikViolation {
  std::size_t n;
  std::size_t k;  // the later index n + m + 1
  int which;      // 1: distance drop vs path length, 2: path length vs chord
  double gap;
};

struct RaikCheck {
  Vector y;
  double rho = 0.0;
  std::size_t N = 0;
  std::size_t horizon = 0;
  std::vector<RaikViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks |x_n - y|^2 - |x_k - y|^2 >= 2 rho sum_{j=n}^{k-1} |P_A x_{j+1} - P_A x_j|
//                                   >= 2 rho |P_A x_k - P_A x_n|
// for N <= n < k <= horizon, slack 1e-9.
RaikCheck raik_verify(const Sequence& seq, const Vector& y, std::size_t N, double rho,
                      std::size_t horizon, const ClosedConvexSet& A);
// rho in {2^-j, j = 0..20}, N in {0..max_N}; smallest N, then largest rho.
std::optional<RaikCheck> raik_search(const Sequence& seq, const Vector& y, std::size_t horizon,
                                     const ClosedConvexSet& A, std::size_t max_N = 64);

struct ShadowProfile {
  std::vector<Vector> shadows;
  std::vector<double> step_norms;       // |P x_{n+1} - P x_n|
  std::vector<double> partial_lengths;  // cumulative step norms
};
ShadowProfile shadow_profile(const Sequence& seq, const ClosedConvexSet& C, std::size_t horizon);

struct DistanceProfile {
  std::vector<double> distances;
  // smallest N with d non-increasing on [N, horizon), if N <= horizon / 2
  std::optional<std::size_t> eventually_decreasing_from;
};
DistanceProfile distance_profile(const Sequence& seq, const ClosedConvexSet& C,
                                 std::size_t horizon);

enum class TailPattern { EventuallyEmpty, FullTail, Mixed };
const char* to_string(TailPattern p);

struct DichotomyReport {
  std::size_t cutoff = 0;
  TailPattern equal_z_pattern = TailPattern::EventuallyEmpty;
  std::vector<std::size_t> in_cone_tail;  // n >= cutoff with x_n in z + K
  std::vector<std::size_t> in_Mbar_tail;  // n >= cutoff with x_n in Mbar
  bool z_in_A = false;
};

// Memberships use the exact projection residual (zero slack).
DichotomyReport dichotomy_exclusion(const Sequence& seq, const Vector& z, const ClosedConvexSet& A,
                                    const ClosedConvexSet& Kplus_z, const ClosedConvexSet& Mbar,
                                    std::size_t horizon);

struct LinearConvergence {
  bool r_ok = false;
  std::optional<std::size_t> first_violation;
  double gamma_est = 0.0;
  Vector z_est;
};

// z defaults to the final iterate x_{horizon-1}.
LinearConvergence linear_conv_check(const Sequence& seq, const ClosedConvexSet& Mbar, double r,
                                    std::size_t horizon, const std::optional<Vector>& z = {});

// Smallest N such that every sample stays in C_n for N <= n < horizon.
std::size_t eventual_fejer_index(const Sequence& seq, const std::vector<Vector>& samples,
                                 std::size_t horizon);

}  // namespace fejer
