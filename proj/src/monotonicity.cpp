#include "fejerlab/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"

namespace fejer {

namespace {

constexpr double kRaikSlack = 1e-9;

// |a - y|^2 - |b - y|^2 without cancellation
double sq_dist_drop(const Vector& a, const Vector& b, const Vector& y) {
  return inner(a - b, a + b - 2.0 * y);
}

QuasiTypeReport quasi_report(const std::vector<double>& sample_max, const SeriesRule* rule,
                             const std::string& no_rule_reason) {
  QuasiTypeReport q;
  double s = 0.0;
  for (double v : sample_max) q.partial_sums.push_back(s += v);
  if (!rule) {
    q.rationale = no_rule_reason;
    return q;
  }
  double b = 0.0;
  bool finite = true;
  std::optional<std::size_t> exceeded;
  BoundKind kind = BoundKind::Exact;
  for (std::size_t n = 0; n < sample_max.size(); ++n) {
    SupBound sb = rule->sup(n);
    kind = sb.kind;
    if (!std::isfinite(sb.value)) finite = false;
    if (finite) q.bound_partial_sums.push_back(b += sb.value);
    bool upper = sb.kind != BoundKind::LowerBound;
    if (upper && sample_max[n] > sb.value + 1e-9 * (1.0 + std::abs(sb.value)) && !exceeded)
      exceeded = n;
  }
  if (!finite) q.bound_partial_sums.clear();
  if (exceeded) {
    q.rationale = "sample maximum exceeds the analytic bound at n=" + std::to_string(*exceeded);
    return q;
  }
  if (rule->verdict == SeriesVerdict::Summable && kind != BoundKind::LowerBound) {
    q.verdict = SeriesVerdict::Summable;
  } else if (rule->verdict == SeriesVerdict::Divergent && kind != BoundKind::UpperBound) {
    q.verdict = SeriesVerdict::Divergent;
  }
  q.rationale = "comparator: " + rule->comparator;
  return q;
}

}  // namespace

double eps1(const Vector& x, const Vector& x_next, const Vector& y) {
  return std::max(0.0, dist(x_next, y) - dist(x, y));
}

double eps2(const Vector& x, const Vector& x_next, const Vector& y) {
  return std::max(0.0, sq_dist_drop(x_next, x, y));
}

double eps1(const Sequence& seq, std::size_t n, const Vector& y) {
  return eps1(seq.term(n), seq.term(n + 1), y);
}

double eps2(const Sequence& seq, std::size_t n, const Vector& y) {
  return eps2(seq.term(n), seq.term(n + 1), y);
}

OpialVerdict detect_opial(const std::vector<double>& values) {
  const Config& cfg = config();
  const std::size_t W = cfg.opial_window;
  if (values.size() < W || W == 0) return OpialUnknown{};
  auto tail_begin = values.end() - static_cast<std::ptrdiff_t>(W);
  auto [mn, mx] = std::minmax_element(tail_begin, values.end());
  if (*mx - *mn <= cfg.opial_converge_tol) return Converges{values.back(), *mx - *mn};
  for (std::size_t p : {2u, 3u}) {
    std::size_t len = p * W;
    if (values.size() < len) break;
    std::size_t start = values.size() - len;
    std::vector<double> lo(p, std::numeric_limits<double>::infinity());
    std::vector<double> hi(p, -std::numeric_limits<double>::infinity());
    for (std::size_t i = start; i < values.size(); ++i) {
      lo[i % p] = std::min(lo[i % p], values[i]);
      hi[i % p] = std::max(hi[i % p], values[i]);
    }
    bool cauchy = true;
    std::vector<double> centers;
    for (std::size_t c = 0; c < p; ++c) {
      if (hi[c] - lo[c] > cfg.opial_converge_tol) cauchy = false;
      centers.push_back(0.5 * (lo[c] + hi[c]));
    }
    if (!cauchy) continue;
    auto [cmin, cmax] = std::minmax_element(centers.begin(), centers.end());
    if (*cmax - *cmin >= cfg.opial_separation) return Oscillates{*cmin, *cmax, p};
  }
  return OpialUnknown{};
}

OpialVerdict opial_verdict(const Sequence& seq, const Vector& y, std::size_t horizon) {
  std::vector<double> d;
  d.reserve(horizon);
  for (std::size_t n = 0; n < horizon; ++n) d.push_back(dist(seq.term(n), y));
  return detect_opial(d);
}

bool is_converges(const OpialVerdict& v) { return std::holds_alternative<Converges>(v); }
bool is_oscillates(const OpialVerdict& v) { return std::holds_alternative<Oscillates>(v); }

nlohmann::ordered_json to_json(const OpialVerdict& v) {
  nlohmann::ordered_json j;
  if (auto* c = std::get_if<Converges>(&v)) {
    j["verdict"] = "Converges";
    j["limit"] = c->limit;
    j["residual"] = c->residual;
  } else if (auto* o = std::get_if<Oscillates>(&v)) {
    j["verdict"] = "Oscillates";
    j["lo"] = o->lo;
    j["hi"] = o->hi;
    j["period"] = o->period;
  } else {
    j["verdict"] = "Inconclusive";
  }
  return j;
}

ClassificationReport classify(const Sequence& seq, const std::vector<Vector>& samples,
                              std::size_t horizon, const ClassifyContext& ctx) {
  if (samples.empty()) throw Error(ErrorKind::EmptySample, "classify needs at least one point");
  if (horizon < 2) throw Error(ErrorKind::InvalidInput, "horizon must be >= 2");
  auto steps = step_table(seq, horizon);
  auto terms = seq.prefix(horizon + 1);
  ClassificationReport rep;
  rep.horizon = horizon;
  std::vector<double> max1(horizon, 0.0), max2(horizon, 0.0), max3(horizon, 0.0);
  std::vector<double> running(samples.size(), 0.0);
  bool all_certified_tail = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const Vector& y = samples[i];
    PointReport pr;
    pr.y = y;
    pr.fejer_star = liminf_membership(steps, y, ctx.certificate);
    pr.fejer = std::all_of(steps.begin(), steps.end(),
                           [&](const StepHalfspace& s) { return s.contains(y); });
    std::vector<double> d;
    for (std::size_t n = 0; n < horizon; ++n) d.push_back(dist(terms[n], y));
    pr.opial = detect_opial(d);
    for (std::size_t n = 0; n < horizon; ++n) {
      double e1 = eps1(terms[n], terms[n + 1], y);
      double e2 = eps2(terms[n], terms[n + 1], y);
      max1[n] = std::max(max1[n], e1);
      max2[n] = std::max(max2[n], e2);
      running[i] += e2;
      max3[n] = std::max(max3[n], running[i]);
    }
    pr.type3_sum = running[i];
    auto* t = std::get_if<InTail>(&pr.fejer_star);
    if (!t || !t->certified) all_certified_tail = false;
    rep.points.push_back(std::move(pr));
  }
  const QuasiRules* rules = ctx.rules;
  rep.type1 = quasi_report(max1, rules && rules->type1 ? &*rules->type1 : nullptr,
                           "no analytic comparator; partial sums alone decide nothing");
  rep.type2 = quasi_report(max2, rules && rules->type2 ? &*rules->type2 : nullptr,
                           "no analytic comparator; partial sums alone decide nothing");
  if (rules && rules->type3) {
    rep.type3 = quasi_report(max2, &*rules->type3, "");
  } else {
    rep.type3.partial_sums = max3;
    if (all_certified_tail) {
      rep.type3.verdict = SeriesVerdict::Summable;
      rep.type3.rationale =
          "every sample is certified in the tail of C_n, so eps2 vanishes after N(y)";
    } else {
      rep.type3.rationale = "some sample lacks a certified tail; no comparator";
    }
  }
  return rep;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
  using oj = nlohmann::ordered_json;
  oj j;
  j["horizon"] = r.horizon;
  j["points"] = oj::array();
  for (const auto& p : r.points) {
    oj pj;
    pj["y"] = to_json(p.y);
    pj["fejer"] = p.fejer;
    pj["fejer_star"] = to_json(p.fejer_star);
    pj["opial"] = to_json(p.opial);
    pj["type3_sum"] = p.type3_sum;
    j["points"].push_back(pj);
  }
  auto q = [](const QuasiTypeReport& t) {
    oj o;
    o["verdict"] = to_string(t.verdict);
    o["rationale"] = t.rationale;
    o["partial_sums"] = t.partial_sums;
    o["bound_partial_sums"] = t.bound_partial_sums;
    return o;
  };
  j["quasi"]["typeI"] = q(r.type1);
  j["quasi"]["typeII"] = q(r.type2);
  j["quasi"]["typeIII"] = q(r.type3);
  return j;
}

namespace {

struct RaikTables {
  std::size_t h;
  std::vector<std::vector<double>> drop;  // drop[n][k - n - 1]
  std::vector<double> path;               // cumulative shadow path length
  std::vector<Vector> shadows;
};

RaikTables raik_tables(const Sequence& seq, const Vector& y, std::size_t horizon,
                       const ClosedConvexSet& A) {
  RaikTables t;
  t.h = horizon;
  auto x = seq.prefix(horizon + 1);
  for (const auto& v : x) t.shadows.push_back(A.project(v));
  t.path.assign(horizon + 1, 0.0);
  for (std::size_t j = 0; j < horizon; ++j)
    t.path[j + 1] = t.path[j] + dist(t.shadows[j + 1], t.shadows[j]);
  t.drop.resize(horizon);
  for (std::size_t n = 0; n < horizon; ++n)
    for (std::size_t k = n + 1; k <= horizon; ++k) t.drop[n].push_back(sq_dist_drop(x[n], x[k], y));
  return t;
}

// Returns violations (up to `limit`) for the given N and rho.
std::vector<RaikViolation> raik_scan(const RaikTables& t, std::size_t N, double rho,
                                     std::size_t limit) {
  std::vector<RaikViolation> out;
  for (std::size_t n = N; n < t.h; ++n)
    for (std::size_t k = n + 1; k <= t.h; ++k) {
      double path = 2.0 * rho * (t.path[k] - t.path[n]);
      double gap1 = t.drop[n][k - n - 1] - path;
      if (gap1 < -kRaikSlack) {
        out.push_back({n, k, 1, gap1});
        if (out.size() >= limit) return out;
      }
      double chord = 2.0 * rho * dist(t.shadows[k], t.shadows[n]);
      double gap2 = path - chord;
      if (gap2 < -kRaikSlack) {
        out.push_back({n, k, 2, gap2});
        if (out.size() >= limit) return out;
      }
    }
  return out;
}

}  // namespace

RaikCheck raik_verify(const Sequence& seq, const Vector& y, std::size_t N, double rho,
                      std::size_t horizon, const ClosedConvexSet& A) {
  require_terms(seq, horizon + 1, "raik_verify");
  auto t = raik_tables(seq, y, horizon, A);
  RaikCheck c{y, rho, N, horizon, raik_scan(t, N, rho, 1000)};
  return c;
}

std::optional<RaikCheck> raik_search(const Sequence& seq, const Vector& y, std::size_t horizon,
                                     const ClosedConvexSet& A, std::size_t max_N) {
  require_terms(seq, horizon + 1, "raik_search");
  auto t = raik_tables(seq, y, horizon, A);
  for (std::size_t N = 0; N <= max_N && N < horizon; ++N)
    for (int j = 0; j <= 20; ++j) {
      double rho = std::ldexp(1.0, -j);
      if (raik_scan(t, N, rho, 1).empty()) return RaikCheck{y, rho, N, horizon, {}};
    }
  return std::nullopt;
}

ShadowProfile shadow_profile(const Sequence& seq, const ClosedConvexSet& C, std::size_t horizon) {
  ShadowProfile p;
  for (std::size_t n = 0; n < horizon; ++n) p.shadows.push_back(C.project(seq.term(n)));
  double s = 0.0;
  for (std::size_t n = 0; n + 1 < horizon; ++n) {
    p.step_norms.push_back(dist(p.shadows[n + 1], p.shadows[n]));
    p.partial_lengths.push_back(s += p.step_norms.back());
  }
  return p;
}

DistanceProfile distance_profile(const Sequence& seq, const ClosedConvexSet& C,
                                 std::size_t horizon) {
  DistanceProfile p;
  for (std::size_t n = 0; n < horizon; ++n) p.distances.push_back(C.distance(seq.term(n)));
  std::size_t N = 0;
  for (std::size_t n = 0; n + 1 < horizon; ++n)
    if (p.distances[n + 1] > p.distances[n] + config().zero_tol) N = n + 1;
  if (2 * N <= horizon) p.eventually_decreasing_from = N;
  return p;
}

const char* to_string(TailPattern p) {
  switch (p) {
    case TailPattern::EventuallyEmpty: return "EventuallyEmpty";
    case TailPattern::FullTail: return "FullTail";
    case TailPattern::Mixed: return "Mixed";
  }
  return "?";
}

DichotomyReport dichotomy_exclusion(const Sequence& seq, const Vector& z, const ClosedConvexSet& A,
                                    const ClosedConvexSet& Kplus_z, const ClosedConvexSet& Mbar,
                                    std::size_t horizon) {
  DichotomyReport r;
  r.cutoff = horizon / 2;
  r.z_in_A = A.distance(z) <= config().zero_tol;
  std::size_t equal = 0;
  for (std::size_t n = r.cutoff; n < horizon; ++n) {
    Vector x = seq.term(n);
    if (x == z) ++equal;
    if (Kplus_z.distance(x) == 0.0) r.in_cone_tail.push_back(n);
    if (Mbar.distance(x) == 0.0) r.in_Mbar_tail.push_back(n);
  }
  std::size_t span = horizon - r.cutoff;
  r.equal_z_pattern = equal == 0      ? TailPattern::EventuallyEmpty
                      : equal == span ? TailPattern::FullTail
                                      : TailPattern::Mixed;
  return r;
}

LinearConvergence linear_conv_check(const Sequence& seq, const ClosedConvexSet& Mbar, double r,
                                    std::size_t horizon, const std::optional<Vector>& z) {
  if (horizon < 2) throw Error(ErrorKind::InvalidInput, "horizon must be >= 2");
  LinearConvergence out;
  auto x = seq.prefix(horizon);
  std::vector<double> d;
  for (const auto& v : x) d.push_back(Mbar.distance(v));
  out.r_ok = true;
  for (std::size_t n = 0; n + 1 < horizon; ++n)
    if (d[n + 1] > r * d[n] + config().zero_tol * std::max(1.0, d[n])) {
      out.r_ok = false;
      out.first_violation = n;
      break;
    }
  out.z_est = z ? *z : x.back();
  if (d[0] == 0.0) throw Error(ErrorKind::DivideByZero, "d_Mbar(x_0) = 0");
  double gamma = 0.0;
  for (std::size_t n = horizon / 2; n < horizon; ++n) {
    double scale = std::pow(r, static_cast<double>(n)) * d[0];
    if (scale > 0) gamma = std::max(gamma, dist(x[n], out.z_est) / scale);
  }
  out.gamma_est = gamma;
  return out;
}

std::size_t eventual_fejer_index(const Sequence& seq, const std::vector<Vector>& samples,
                                 std::size_t horizon) {
  auto steps = step_table(seq, horizon);
  std::size_t N = 0;
  for (const auto& y : samples)
    for (std::size_t n = 0; n < horizon; ++n)
      if (!steps[n].contains(y)) N = std::max(N, n + 1);
  return N;
}

}  // namespace fejer
