#include "fejerlab/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "fejerlab/asymptotics.hpp"
#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"

namespace fejer {

namespace {

using oj = nlohmann::ordered_json;

struct Outcome {
  ClaimStatus status;
  oj measured;
  oj expected;
  double tolerance;
};

Outcome judged(bool ok, oj measured, oj expected, double tol) {
  return {ok ? ClaimStatus::Pass : ClaimStatus::Fail, std::move(measured), std::move(expected),
          tol};
}

struct ClaimDef {
  std::string id;
  std::string anchor;
  std::function<Outcome()> run;
};

Vector p2(double a, double b) { return Vector::dense({a, b}); }
Vector e(std::size_t i, double v = 1.0) { return Vector::basis(i, v); }

oj vec_list(const std::vector<Vector>& vs) {
  oj a = oj::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

double max_dist(const std::vector<Vector>& a, const std::vector<Vector>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, dist(a[i], b[i]));
  return m;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

// --- shared probes ---------------------------------------------------------

Outcome grid_agreement(ExampleId id, std::size_t horizon, const Region& truth, double band_row) {
  const auto& seq = zoo_sequence(id);
  auto steps = step_table(seq, horizon);
  GridSpec g;
  std::size_t cells = 0, agree = 0, skipped = 0;
  for (std::size_t j = 0; j < g.points; ++j)
    for (std::size_t i = 0; i < g.points; ++i) {
      Vector y = p2(g.coord(i), g.coord(j));
      if (std::abs(g.coord(j) - band_row) < 1e-12) {
        ++skipped;
        continue;
      }
      auto v = liminf_membership(steps, y);
      bool want = contains(truth, y);
      if (!is_in_tail(v) && !is_excluded(v)) continue;
      ++cells;
      if (is_in_tail(v) == want) ++agree;
    }
  std::size_t total = g.points * g.points - skipped;
  return judged(agree == total, {{"agree", agree}, {"decided", cells}, {"cells", total}},
                {{"agree", total}}, 0.0);
}

Outcome raik_claim(ExampleId id, const Vector& y, std::size_t horizon, std::size_t max_n) {
  const auto& spec = analytic_facts(id);
  auto found = raik_search(zoo_sequence(id), y, horizon, *spec.affine_hull, max_n);
  if (!found) return judged(false, {{"found", false}}, {{"found", true}}, 1e-9);
  return judged(found->ok(), {{"found", true}, {"N", found->N}, {"rho", found->rho}},
                {{"N_max", max_n}, {"violations", 0}}, 1e-9);
}

// --- per-example claims -------------------------------------------------------

std::vector<ClaimDef> angular_closure_claims() {
  const auto id = ExampleId::AngularClosure;
  return {
      {"maximal_set_grid", "angular cone sequence: maximal set K([0,pi))",
       [=] {
         return grid_agreement(id, 64, analytic_facts(id).maximal_set, 0.0);
       }},
      {"limit", "angular cone sequence: limit (1,0)",
       [=] {
         double d = dist(generate(id, 60), p2(1, 0));
         return judged(d <= 1e-12, d, 0.0, 1e-12);
       }},
      {"cone_identity", "cone identity: closure of the maximal set equals K + z",
       [=] {
         auto r = cone_identity_2d(zoo_sequence(id), 60, p2(1, 0));
         bool dir_ok = r.clusters.representatives.size() == 1 &&
                       dist(r.clusters.representatives[0], p2(0, -1)) <= 1e-4;
         return judged(dir_ok && r.closure_match, to_json(r),
                       {{"direction", to_json(p2(0, -1))}, {"closure_match", true}}, 1e-4);
       }},
  };
}

std::vector<ClaimDef> affine_counter_claims() {
  const auto id = ExampleId::AffineCounter;
  return {
      {"shadow_abscissas_increase", "affine counterexample: shadows on M move right",
       [=] {
         std::size_t bad = 0;
         for (std::size_t n = 0; n < 60; ++n)
           if (!((*high_precision_term(id, n + 1))[0] > (*high_precision_term(id, n))[0])) ++bad;
         return judged(bad == 0, {{"non_increasing_steps", bad}}, {{"non_increasing_steps", 0}},
                       0.0);
       }},
      {"distance_bound", "affine counterexample: d_M(x_n) <= 2^(-n/2)",
       [=] {
         double worst = -std::numeric_limits<double>::infinity();
         for (std::size_t n = 0; n <= 60; ++n) {
           double d = std::abs(generate(id, n)[1]);
           worst = std::max(worst, d - std::pow(2.0, -0.5 * static_cast<double>(n)));
         }
         return judged(worst <= 0.0, {{"max_excess", worst}}, {{"max_excess", 0.0}}, 0.0);
       }},
      {"raik_search", "Raik inequality chain at y = (0,0)",
       [=] { return raik_claim(id, Vector{}, 200, 32); }},
      {"linear_convergence", "linear decay d_M(x_{n+1}) <= 2^(-1/2) d_M(x_n)",
       [=] {
         const auto& spec = analytic_facts(id);
         auto lc = linear_conv_check(zoo_sequence(id), *spec.M_closure, std::sqrt(0.5), 60,
                                     spec.limit);
         return judged(lc.r_ok, {{"r_ok", lc.r_ok}, {"gamma_est", lc.gamma_est}},
                       {{"r_ok", true}}, 0.0);
       }},
      {"exclusion", "x_n never equals z and never lies in Mbar",
       [=] {
         const auto& spec = analytic_facts(id);
         auto kz = ClosedConvexSet::from_region(Region::halfspace(e(1, -1.0), 0.0));
         auto r = dichotomy_exclusion(zoo_sequence(id), *spec.limit, *spec.affine_hull, kz,
                                      *spec.M_closure, 200);
         bool ok = r.equal_z_pattern == TailPattern::EventuallyEmpty && r.in_Mbar_tail.empty();
         return judged(ok,
                       {{"pattern", to_string(r.equal_z_pattern)},
                        {"in_Mbar", r.in_Mbar_tail.size()}},
                       {{"pattern", "EventuallyEmpty"}, {"in_Mbar", 0}}, 0.0);
       }},
      {"eventual_fejer_compact", "eventually Fejer on a compact segment of ri(M)",
       [=] {
         std::vector<Vector> k;
         for (int i = 0; i <= 20; ++i) k.push_back(p2(-1.0 + 0.1 * i, -1.0));
         std::size_t n = eventual_fejer_index(zoo_sequence(id), k, 200);
         return judged(n < 200, {{"N", n}}, {{"N_below", 200}}, 0.0);
       }},
      {"direct_inclusion", "cluster directions pair nonpositively with Mbar - z",
       [=] {
         const auto& spec = analytic_facts(id);
         std::vector<Vector> ys;
         for (int i = -10; i <= 10; ++i) ys.push_back(p2(0.5 * i, 0.0));
         auto r = direct_inclusion_check(zoo_sequence(id), *spec.limit, ys, 200, 1e-6);
         return judged(r.ok, {{"max_pairing", r.max_pairing}}, {{"max_pairing_at_most", 1e-6}},
                       1e-6);
       }},
  };
}

std::vector<ClaimDef> increasing_distance_claims() {
  const auto id = ExampleId::IncreasingDistance;
  return {
      {"distance_equals_norm", "d_Mbar(x_n) = |x_n| strictly increasing",
       [=] {
         const auto& spec = analytic_facts(id);
         auto dp = distance_profile(zoo_sequence(id), *spec.M_closure, 41);
         double err = 0.0;
         bool inc = true;
         for (std::size_t n = 0; n <= 40; ++n) {
           err = std::max(err, std::abs(dp.distances[n] - norm(generate(id, n))));
           if (n > 0 && !(dp.distances[n] > dp.distances[n - 1])) inc = false;
         }
         return judged(err <= 1e-12 && inc, {{"max_error", err}, {"strictly_increasing", inc}},
                       {{"max_error", 0.0}, {"strictly_increasing", true}}, 1e-12);
       }},
      {"samples_in_tail", "sample points of M are eventually in C_n",
       [=] {
         const auto& spec = analytic_facts(id);
         std::size_t ok = 0;
         for (const auto& y : spec.samples)
           if (is_in_tail(liminf_membership(zoo_sequence(id), y, 60, &spec.certificate))) ++ok;
         return judged(ok == spec.samples.size(), ok, spec.samples.size(), 0.0);
       }},
  };
}

std::vector<ClaimDef> l2_shadow_claims() {
  const auto id = ExampleId::L2ShadowFail;
  return {
      {"shadows_Y", "shadow sequence onto Y",
       [=] {
         auto sp = shadow_profile(zoo_sequence(id), *analytic_facts(id).M_closure, 7);
         std::vector<Vector> want = {e(1), e(1), e(1, 2.0), e(1), e(1) + e(2), e(1), e(1) + e(3)};
         double err = max_dist(sp.shadows, want);
         return judged(err <= 1e-12, vec_list(sp.shadows), vec_list(want), 1e-12);
       }},
      {"distances_Y", "d_Y(x_n) is not convergent",
       [=] {
         auto dp = distance_profile(zoo_sequence(id), *analytic_facts(id).M_closure, 7);
         // reference list has 1 at n = 2, but x_2 = 2e1 lies in Y
         std::vector<double> want = {1, 1, 0, 1, 0, 1, 0};
         return judged(max_abs_diff(dp.distances, want) <= 1e-12, dp.distances,
                       {{"values", want}, {"reference", {1, 1, 1, 1, 0, 1, 0}}}, 1e-12);
       }},
      {"shadows_ball", "shadow sequence onto B[0,1] intersect Y",
       [=] {
         auto c = *analytic_facts(ExampleId::QuasiIndCounter).M_closure;
         auto sp = shadow_profile(zoo_sequence(id), c, 5);
         std::vector<Vector> want = {e(1), e(1), e(1), e(1), std::sqrt(0.5) * (e(1) + e(2))};
         double err = max_dist(sp.shadows, want);
         return judged(err <= 1e-12, vec_list(sp.shadows), vec_list(want), 1e-12);
       }},
      {"distances_ball", "d_C(x_n) alternates",
       [=] {
         auto c = *analytic_facts(ExampleId::QuasiIndCounter).M_closure;
         auto dp = distance_profile(zoo_sequence(id), c, 7);
         double r = std::sqrt(2.0) - 1.0;
         std::vector<double> want = {1, 1, 1, 1, r, 1, r};
         return judged(max_abs_diff(dp.distances, want) <= 1e-12, dp.distances, want, 1e-12);
       }},
      {"opial_flat", "maximal Opial set is Y",
       [=] {
         auto f = maximal_opial_flat(zoo_sequence(id), 200, config().cluster_eps);
         bool ok = f.basisL.size() == 1 && dist(f.basisL[0], e(0)) <= 1e-12 &&
                   f.z_error <= 1e-10 && f.on_flat_converges && f.off_flat_oscillates;
         return judged(ok, to_json(f),
                       {{"basisL", vec_list({e(0)})},
                        {"on_flat_converges", true},
                        {"off_flat_oscillates", true}},
                       1e-10);
       }},
      {"classify_span", "Fejer* and Opial with respect to points of M",
       [=] {
         std::vector<Vector> ys = {e(1), e(2) + e(5), e(1, -1.0) + e(6, 0.5), Vector{}};
         const auto& spec = analytic_facts(id);
         ClassifyContext ctx{&spec.certificate, nullptr};
         auto rep = classify(zoo_sequence(id), ys, 200, ctx);
         bool ok = std::all_of(rep.points.begin(), rep.points.end(), [](const PointReport& p) {
           return is_in_tail(p.fejer_star) && is_converges(p.opial);
         });
         auto off = opial_verdict(zoo_sequence(id), e(0), 200);
         ok = ok && is_oscillates(off);
         return judged(ok, {{"points", to_json(rep)["points"]}, {"e0", to_json(off)}},
                       {{"fejer_star", "InTail"}, {"opial", "Converges"}, {"e0", "Oscillates"}},
                       0.0);
       }},
      {"raik_negative_control", "ri(M) empty: no Raik pair at y = e1",
       [=] {
         auto found = raik_search(zoo_sequence(id), e(1), 60, *analytic_facts(id).affine_hull, 8);
         return judged(!found, {{"found", found.has_value()}}, {{"found", false}}, 1e-9);
       }},
  };
}

std::vector<ClaimDef> l2_int_nonempty_claims() {
  const auto id = ExampleId::L2IntNonempty;
  return {
      {"norm_ratio", "|x_n| = sqrt(1+gamma^2) d_Mbar(x_n), gamma = 3",
       [=] {
         const auto& c = *analytic_facts(id).M_closure;
         double err = 0.0;
         for (std::size_t n = 1; n <= 40; ++n) {
           Vector x = generate(id, n);
           err = std::max(err, std::abs(norm(x) - std::sqrt(10.0) * c.distance(x)));
         }
         return judged(err <= 1e-12, {{"max_error", err}}, {{"max_error", 0.0}}, 1e-12);
       }},
      {"witness_increasing", "not eventually Fejer with respect to B[-2e0, 1]",
       [=] {
         std::vector<double> d;
         for (std::size_t n = 0; n <= 40; ++n)
           d.push_back(dist(generate(id, n), e(0, -2.0) + e(n)));
         std::size_t from = 0;
         for (std::size_t n = 0; n + 1 < d.size(); ++n)
           if (!(d[n + 1] > d[n])) from = n + 1;
         return judged(from <= 20, {{"increasing_from", from}}, {{"increasing_from_at_most", 20}},
                       0.0);
       }},
      {"ratio_profile", "d_K(x_n - z)/|x_n - z| = 1/sqrt(10)",
       [=] {
         const auto& spec = analytic_facts(id);
         auto rp = ratio_profile(zoo_sequence(id), *spec.tangent_cone, *spec.limit, 40);
         double err = std::abs(rp.gamma_est - std::sqrt(10.0));
         return judged(err <= 1e-9, {{"gamma_est", rp.gamma_est}}, {{"gamma", std::sqrt(10.0)}},
                       1e-9);
       }},
      {"opial_flat", "convergent sequence: Opial set is the whole space",
       [=] {
         auto f = maximal_opial_flat(zoo_sequence(id), 200, config().cluster_eps);
         bool ok = f.basisL.empty() && norm(f.z) <= 1e-12 && f.on_flat_converges;
         return judged(ok, to_json(f), {{"basisL", oj::array()}}, 1e-12);
       }},
  };
}

std::vector<ClaimDef> l2_no_ineq_claims() {
  const auto id = ExampleId::L2NoIneq;
  return {
      {"terms_in_M", "x_n in Mbar for all n",
       [=] {
         const auto& spec = analytic_facts(id);
         auto r = dichotomy_exclusion(zoo_sequence(id), *spec.limit, *spec.affine_hull,
                                      *spec.M_closure, *spec.M_closure, 200);
         return judged(r.in_Mbar_tail.size() == 200 - r.cutoff, r.in_Mbar_tail.size(),
                       200 - r.cutoff, 0.0);
       }},
      {"ratio_zero", "ratios vanish when ri(M) is empty",
       [=] {
         const auto& spec = analytic_facts(id);
         auto rp = ratio_profile(zoo_sequence(id), *spec.tangent_cone, *spec.limit, 100);
         double mx = *std::max_element(rp.ratios.begin(), rp.ratios.end());
         return judged(mx == 0.0, {{"max_ratio", mx}}, {{"max_ratio", 0.0}}, 0.0);
       }},
  };
}

std::vector<ClaimDef> segment_limit_claims() {
  const auto id = ExampleId::SegmentLimit;
  return {
      {"maximal_set_probes", "maximal set is the segment [-1,1] x {0}",
       [=] {
         const auto& seq = zoo_sequence(id);
         GridSpec g;
         std::size_t bad = 0;
         for (std::size_t N : {0u, 6u, 30u}) {
           Region r = maximal_set_2d(seq, N, N + 6);
           for (std::size_t j = 0; j < g.points; ++j)
             for (std::size_t i = 0; i < g.points; ++i) {
               Vector y = p2(g.coord(i), g.coord(j));
               bool want = g.coord(j) == 0.0 && std::abs(g.coord(i)) <= 1.0;
               if (contains(r, y, 1e-9) != want) ++bad;
             }
         }
         return judged(bad == 0, {{"mismatches", bad}}, {{"mismatches", 0}}, 1e-9);
       }},
      {"ratio_limit", "d_K(x_n - z)/|x_n - z| -> 1",
       [=] {
         const auto& spec = analytic_facts(id);
         auto rp = ratio_profile(zoo_sequence(id), *spec.tangent_cone, *spec.limit, 200);
         return judged(rp.limit_one, {{"last", rp.ratios.back()}, {"liminf", rp.liminf_est}},
                       {{"limit", 1.0}}, 1e-3);
       }},
      {"cone_not_solid", "K = R x {0} has empty interior",
       [=] {
         try {
           cone_identity_2d(zoo_sequence(id), 200, analytic_facts(id).limit);
         } catch (const PreconditionFailed& pf) {
           bool solid = std::find(pf.failed().begin(), pf.failed().end(), "solid") !=
                        pf.failed().end();
           return judged(solid, {{"failed", pf.failed()}}, {{"failed", {"solid"}}}, 0.0);
         }
         return judged(false, {{"failed", oj::array()}}, {{"failed", {"solid"}}}, 0.0);
       }},
      {"block_linear_decay", "d_M(x_{3n+3}) <= 2^(-1/2) d_M(x_{3n})",
       [=] {
         const auto& spec = analytic_facts(id);
         StridedSequence blocks(zoo_sequence(id), 3, 0);
         auto lc = linear_conv_check(blocks, *spec.M_closure, std::sqrt(0.5), 60, spec.limit);
         return judged(lc.r_ok, {{"r_ok", lc.r_ok}}, {{"r_ok", true}}, 0.0);
       }},
      {"gamma_bound", "|z - y| <= (Gamma + 2)|x_n - y| on the segment",
       [=] {
         const auto& spec = analytic_facts(id);
         auto rp = ratio_profile(zoo_sequence(id), *spec.tangent_cone, *spec.limit, 200);
         std::vector<Vector> ys;
         for (int i = -10; i <= 10; ++i) ys.push_back(p2(0.1 * i, 0.0));
         auto v = gamma_bound_check(zoo_sequence(id), *spec.limit, ys, rp.gamma_est + 0.1, 200);
         return judged(v.empty(), {{"violations", v.size()}}, {{"violations", 0}}, 1e-12);
       }},
  };
}

std::vector<ClaimDef> authors_claims() {
  const auto id = ExampleId::AuthorsExample;
  const Vector z = p2(0, 2.0 / std::sqrt(3.0));
  return {
      {"limit", "iterates approach (0, 2/sqrt3)",
       [=] {
         double d = dist(generate(id, 60), z);
         return judged(d <= 1e-6, d, to_json(z), 1e-6);
       }},
      {"verdicts", "z excluded, (0.5,0) in the tail",
       [=] {
         const auto& spec = analytic_facts(id);
         auto vz = liminf_membership(zoo_sequence(id), z, 60, &spec.certificate);
         auto vp = liminf_membership(zoo_sequence(id), p2(0.5, 0), 60, &spec.certificate);
         return judged(is_excluded(vz) && is_in_tail(vp), {{"z", to_json(vz)}, {"p", to_json(vp)}},
                       {{"z", "Excluded"}, {"p", "InTail"}}, 0.0);
       }},
      {"cluster_cone", "K = {x >= 0, y <= -2x/sqrt3} on 360 directions",
       [=] {
         auto k = cone_from_clusters(direction_clusters(zoo_sequence(id), 60), 2);
         std::size_t bad = 0;
         for (int t = 0; t < 360; ++t) {
           double a = 2.0 * std::acos(-1.0) * t / 360.0;
           Vector u = p2(std::cos(a), std::sin(a));
           bool want = u[0] >= -1e-6 && u[1] <= -2.0 * u[0] / std::sqrt(3.0) + 1e-6;
           if (k.contains(u, 1e-6) != want) ++bad;
         }
         return judged(bad == 0, {{"disagreements", bad}, {"cone", to_json(k)}},
                       {{"disagreements", 0}}, 1e-6);
       }},
      {"cone_identity", "int of the maximal set equals int K + z",
       [=] {
         auto r = cone_identity_2d(zoo_sequence(id), 60, z);
         return judged(r.interior_match, to_json(r), {{"interior_match", true}}, 1e-6);
       }},
  };
}

std::vector<ClaimDef> type1_claims() {
  const auto id = ExampleId::Type1Counter;
  return {
      {"sup_eps1_scaling", "sup eps1 at block k behaves like 1/(k ln k)",
       [=] {
         const auto& seq = zoo_sequence(id);
         double lo = 1e300, hi = -1e300;
         for (std::size_t k = 1000; k <= 100000; ++k) {
           double s = eps1(seq, 2 * k, Vector{}) * k * std::log(static_cast<double>(k));
           lo = std::min(lo, s);
           hi = std::max(hi, s);
         }
         return judged(lo >= 0.5 && hi <= 2.0, {{"min", lo}, {"max", hi}},
                       {{"range", {0.5, 2.0}}}, 0.0);
       }},
      {"partial_sum_growth", "partial sums of sup eps1 keep growing",
       [=] {
         const auto& seq = zoo_sequence(id);
         double s100 = 0.0, s = 0.0;
         for (std::size_t k = 1; k <= 100000; ++k) {
           s += eps1(seq, 2 * k, Vector{});
           if (k == 100) s100 = s;
         }
         return judged(s >= 1.4 * s100, {{"ratio", s / s100}}, {{"ratio_at_least", 1.4}}, 0.0);
       }},
      {"classify_type1", "Fejer* but not quasi-Fejer of Type I",
       [=] {
         const auto& spec = analytic_facts(id);
         std::vector<Vector> ys = {p2(-2, 0), p2(-1, 0), p2(-0.5, 0), p2(-0.1, 0)};
         ClassifyContext ctx{&spec.certificate, &spec.quasi};
         auto rep = classify(zoo_sequence(id), ys, 200, ctx);
         bool tail = std::all_of(rep.points.begin(), rep.points.end(),
                                 [](const PointReport& p) { return is_in_tail(p.fejer_star); });
         bool ok = tail && rep.type1.verdict == SeriesVerdict::Divergent &&
                   rep.type2.verdict == SeriesVerdict::Summable;
         return judged(ok,
                       {{"fejer_star_all", tail},
                        {"typeI", to_string(rep.type1.verdict)},
                        {"typeII", to_string(rep.type2.verdict)}},
                       {{"fejer_star_all", true}, {"typeI", "Divergent"}, {"typeII", "Summable"}},
                       0.0);
       }},
  };
}

std::vector<ClaimDef> quasi_ind_claims() {
  const auto id = ExampleId::QuasiIndCounter;
  return {
      {"max_eps2", "max eps2 over +-e_k equals 2",
       [=] {
         const auto& seq = zoo_sequence(id);
         double err = 0.0;
         for (std::size_t k = 2; k <= 50; ++k)
           for (std::size_t n : {2 * k, 2 * k + 1}) {
             double m = 0.0;
             for (std::size_t j = 0; j <= n + 2; ++j)
               for (double sgn : {1.0, -1.0}) m = std::max(m, eps2(seq, n, e(j, sgn)));
             err = std::max(err, std::abs(m - 2.0));
           }
         return judged(err <= 1e-12, {{"max_error", err}}, {{"value", 2.0}}, 1e-12);
       }},
      {"classify_quasi", "Fejer* monotone yet not quasi-Fejer of Types I/II",
       [=] {
         const auto& spec = analytic_facts(id);
         ClassifyContext ctx{&spec.certificate, &spec.quasi};
         auto rep = classify(zoo_sequence(id), spec.samples, 120, ctx);
         bool ok = rep.type1.verdict == SeriesVerdict::Divergent &&
                   rep.type2.verdict == SeriesVerdict::Divergent &&
                   rep.type3.verdict == SeriesVerdict::Summable;
         return judged(ok,
                       {{"typeI", to_string(rep.type1.verdict)},
                        {"typeII", to_string(rep.type2.verdict)},
                        {"typeIII", to_string(rep.type3.verdict)}},
                       {{"typeI", "Divergent"}, {"typeII", "Divergent"}, {"typeIII", "Summable"}},
                       0.0);
       }},
  };
}

std::vector<ClaimDef> claims_for(ExampleId id) {
  switch (id) {
    case ExampleId::AngularClosure: return angular_closure_claims();
    case ExampleId::AffineCounter: return affine_counter_claims();
    case ExampleId::IncreasingDistance: return increasing_distance_claims();
    case ExampleId::L2ShadowFail: return l2_shadow_claims();
    case ExampleId::L2IntNonempty: return l2_int_nonempty_claims();
    case ExampleId::L2NoIneq: return l2_no_ineq_claims();
    case ExampleId::SegmentLimit: return segment_limit_claims();
    case ExampleId::AuthorsExample: return authors_claims();
    case ExampleId::Type1Counter: return type1_claims();
    case ExampleId::QuasiIndCounter: return quasi_ind_claims();
  }
  return {};
}

}  // namespace

const char* to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Pass: return "Pass";
    case ClaimStatus::Fail: return "Fail";
    case ClaimStatus::Inconclusive: return "Inconclusive";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::all_of(claims.begin(), claims.end(),
                     [](const ClaimResult& c) { return c.status != ClaimStatus::Fail; });
}

std::vector<std::string> registered_claims(ExampleId id) {
  std::vector<std::string> out;
  for (const auto& c : claims_for(id)) out.push_back(c.id);
  return out;
}

VerifyReport verify_example(ExampleId id) {
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.id = id;
  for (const auto& def : claims_for(id)) {
    ClaimResult r;
    r.claim_id = def.id;
    r.anchor = def.anchor;
    try {
      Outcome o = def.run();
      r.status = o.status;
      r.measured = std::move(o.measured);
      r.expected = std::move(o.expected);
      r.tolerance = o.tolerance;
    } catch (const std::exception& ex) {
      r.status = ClaimStatus::Fail;
      r.measured = {{"error", ex.what()}};
    }
    rep.claims.push_back(std::move(r));
  }
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::vector<VerifyReport> verify_examples(const std::vector<ExampleId>& ids, std::size_t jobs) {
  std::vector<VerifyReport> out(ids.size());
  jobs = std::max<std::size_t>(1, std::min(jobs, ids.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) out[i] = verify_example(ids[i]);
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return out;
}

nlohmann::ordered_json to_json(const VerifyReport& r) {
  oj j;
  j["example"] = std::string(to_string(r.id));
  j["claims"] = oj::array();
  for (const auto& c : r.claims) {
    oj cj;
    cj["claim_id"] = c.claim_id;
    cj["anchor"] = c.anchor;
    cj["status"] = to_string(c.status);
    cj["measured"] = c.measured;
    cj["expected"] = c.expected;
    cj["tolerance"] = c.tolerance;
    j["claims"].push_back(cj);
  }
  j["wall_time"] = r.wall_time;
  return j;
}

}  // namespace fejer
