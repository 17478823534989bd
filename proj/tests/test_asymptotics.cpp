#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fejerlab/asymptotics.hpp"
#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"
#include "fejerlab/zoo.hpp"
#include "support.hpp"

using namespace fejer;
using testing::e;
using testing::p2;

namespace {
bool near_unit(const Vector& v) { return std::abs(norm(v) - 1.0) <= 1e-12; }
}  // namespace

TEST_CASE("normalized diffs") {
  TermList t({p2(0, 0), p2(3, 4), p2(3, 4), p2(3, 0)});
  auto v = normalized_diffs(t, 3);
  REQUIRE(v.size() == 3);
  CHECK(dist(v[0], p2(-0.6, -0.8)) <= 1e-15);
  CHECK(v[1].is_zero());
  CHECK(dist(v[2], p2(0, 1)) <= 1e-15);
}

TEST_CASE("clustering invariants") {
  auto g = testing::rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> vs;
    std::size_t k = 1 + g() % 4;
    std::vector<double> centers;
    for (std::size_t c = 0; c < k; ++c) centers.push_back(2 * std::numbers::pi * c / k);
    for (int i = 0; i < 60; ++i) {
      double a = centers[g() % k] + testing::uniform(g, -0.005, 0.005);
      vs.push_back(p2(std::cos(a), std::sin(a)));
    }
    vs.push_back(Vector{});
    auto d = cluster_directions(vs, 0.05, 3);
    CHECK(d.representatives.size() <= k);
    CHECK(d.representatives.size() == d.counts.size());
    std::size_t total = 0;
    for (std::size_t i = 0; i < d.representatives.size(); ++i) {
      CHECK(near_unit(d.representatives[i]));
      CHECK(d.counts[i] >= 3);
      total += d.counts[i];
      for (std::size_t j = 0; j < i; ++j)
        CHECK(dist(d.representatives[i], d.representatives[j]) > 0.05);
    }
    CHECK(total <= vs.size() - 1);
  }
  CHECK_THROWS_AS(cluster_directions({p2(1, 0)}, 0.0, 3), Error);
  CHECK_THROWS_AS(cluster_directions({p2(1, 0)}, 0.6, 3), Error);
}

TEST_CASE("AngularClosure and AuthorsExample cluster directions") {
  auto ac = direction_clusters(zoo_sequence(ExampleId::AngularClosure), 60);
  REQUIRE(ac.representatives.size() == 1);
  CHECK(dist(ac.representatives[0], p2(0, -1)) <= 1e-4);

  auto au = direction_clusters(zoo_sequence(ExampleId::AuthorsExample), 60);
  REQUIRE(au.representatives.size() == 2);
  Vector w = p2(2, std::sqrt(3.0)) / std::sqrt(7.0);
  bool has_w = false, has_left = false;
  for (const auto& r : au.representatives) {
    has_w = has_w || dist(r, w) <= 1e-4;
    has_left = has_left || dist(r, p2(-1, 0)) <= 1e-4;
  }
  CHECK(has_w);
  CHECK(has_left);
}

TEST_CASE("SegmentLimit cluster cone is the horizontal axis") {
  auto k = cone_from_clusters(direction_clusters(zoo_sequence(ExampleId::SegmentLimit), 200), 2);
  CHECK(k.contains(p2(1, 0), 5e-2));
  CHECK(k.contains(p2(-1, 0), 5e-2));
  CHECK_FALSE(k.contains(p2(0, 1), 1e-3));
  CHECK_FALSE(k.contains(p2(0, -1), 1e-3));
}

TEST_CASE("cluster cone projection lands in K with residual in the polar") {
  auto d = direction_clusters(zoo_sequence(ExampleId::AuthorsExample), 60);
  auto k = cone_from_clusters(d, 2);
  auto g = testing::rng(43);
  for (int t = 0; t < 100; ++t) {
    Vector u = testing::rand_vec(g, 2, 2.0);
    Vector p = k.project(u);
    Vector q = u - p;
    CHECK(k.contains(p, 1e-9));
    CHECK(std::abs(inner(p, q)) <= 1e-9 * (1 + norm_squared(u)));
    Vector back = project_onto_conic_hull(d.representatives, q);
    CHECK(dist(back, q) <= 1e-9 * (1 + norm(u)));
  }
}

TEST_CASE("support function bounds the cone distance") {
  for (auto id : {ExampleId::AuthorsExample, ExampleId::AngularClosure}) {
    auto d = direction_clusters(zoo_sequence(id), 60);
    auto k = cone_from_clusters(d, 2);
    for (int t = 0; t < 20; ++t) {
      double a = 2 * std::numbers::pi * (t + 0.5) / 20;
      Vector x = p2(std::cos(a), std::sin(a));
      double s = support_function(d, x);
      double dk = k.distance(x);
      CHECK(s <= dk + 5e-3);
      if (s < -5e-3) CHECK(dk <= 1e-9);
      if (dk > 5e-3) CHECK(s > 0.0);
    }
  }
}

TEST_CASE("empty cluster set") {
  DirectionClusterSet none;
  CHECK_THROWS_AS(cone_from_clusters(none, 2), Error);
  FunctionSequence line([](std::size_t n) { return e(0, static_cast<double>(n)); });
  CHECK_THROWS_AS(maximal_opial_flat(line, 200, 0.05), Error);
}

TEST_CASE("ratio profiles") {
  const auto& seg = analytic_facts(ExampleId::SegmentLimit);
  auto rs = ratio_profile(zoo_sequence(ExampleId::SegmentLimit), *seg.tangent_cone, *seg.limit, 200);
  CHECK(rs.limit_one);
  for (std::size_t n = 180; n < 200; ++n) CHECK(std::abs(rs.ratios[n] - 1.0) <= 1e-3);

  const auto& l2 = analytic_facts(ExampleId::L2IntNonempty);
  auto rl = ratio_profile(zoo_sequence(ExampleId::L2IntNonempty), *l2.tangent_cone, *l2.limit, 40);
  for (std::size_t n = 1; n < 40; ++n) CHECK(rl.ratios[n] == doctest::Approx(1 / std::sqrt(10.0)));
  CHECK(rl.gamma_est == doctest::Approx(std::sqrt(10.0)));

  const auto& nq = analytic_facts(ExampleId::L2NoIneq);
  auto rn = ratio_profile(zoo_sequence(ExampleId::L2NoIneq), *nq.tangent_cone, *nq.limit, 50);
  for (double r : rn.ratios) CHECK(r == 0.0);
  CHECK(std::isinf(rn.gamma_est));

  TermList hit({p2(1, 0), p2(0, 0), p2(0, 0)});
  CHECK_THROWS_AS(ratio_profile(hit, FinCone::whole_space(2), Vector{}, 3), Error);
}

TEST_CASE("cone identity") {
  const Vector z = p2(0, 2 / std::sqrt(3.0));
  auto r = cone_identity_2d(zoo_sequence(ExampleId::AuthorsExample), 60, z);
  CHECK(r.interior_match);
  CHECK(r.interior_cells > 0);
  CHECK(r.exterior_cells > 0);

  auto a = cone_identity_2d(zoo_sequence(ExampleId::AngularClosure), 60, p2(1, 0));
  CHECK(a.closure_match);

  try {
    cone_identity_2d(zoo_sequence(ExampleId::SegmentLimit), 200,
                     analytic_facts(ExampleId::SegmentLimit).limit);
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& pf) {
    CHECK(std::find(pf.failed().begin(), pf.failed().end(), "solid") != pf.failed().end());
  }
  // repeats in the tail put 0 into the direction set
  FunctionSequence stall([](std::size_t n) {
    return n < 10 ? p2(std::ldexp(1.0, -static_cast<int>(n)), 1) : p2(0, 1);
  });
  try {
    cone_identity_2d(stall, 40, p2(0, 1));
    FAIL("expected PreconditionFailed");
  } catch (const PreconditionFailed& pf) {
    CHECK(std::find(pf.failed().begin(), pf.failed().end(), "0notinD") != pf.failed().end());
  }
}

TEST_CASE("gamma bound") {
  const auto& seg = analytic_facts(ExampleId::SegmentLimit);
  const auto& seq = zoo_sequence(ExampleId::SegmentLimit);
  std::vector<Vector> ys = {p2(-1, 0), p2(0.5, 0), p2(1, 0)};
  CHECK(gamma_bound_check(seq, *seg.limit, ys, 1.1, 200).empty());
  // gamma + 2 = 0.01 is far too small
  auto v = gamma_bound_check(seq, *seg.limit, {p2(50, 0)}, -1.99, 200);
  CHECK(v.empty() == false);
}

TEST_CASE("Opial flat") {
  auto f = maximal_opial_flat(zoo_sequence(ExampleId::L2ShadowFail), 200, config().cluster_eps);
  REQUIRE(f.basisL.size() == 1);
  CHECK(dist(f.basisL[0], e(0)) <= 1e-12);
  CHECK(dist(f.z, e(1)) <= 1e-10);
  CHECK(f.z_error <= 1e-10);
  CHECK(f.on_flat_converges);
  CHECK(f.off_flat_oscillates);
  for (const auto& p : f.on_probes) {
    CHECK(contains(f.flat, p, 1e-9));
    CHECK(is_converges(opial_verdict(zoo_sequence(ExampleId::L2ShadowFail), p, 200)));
  }
  for (const auto& p : f.off_probes) {
    CHECK_FALSE(contains(f.flat, p, 1e-9));
    CHECK(is_oscillates(opial_verdict(zoo_sequence(ExampleId::L2ShadowFail), p, 200)));
  }
  // a convergent sequence has the whole space as Opial set
  auto g = maximal_opial_flat(zoo_sequence(ExampleId::L2IntNonempty), 200, config().cluster_eps);
  CHECK(g.basisL.empty());
}

TEST_CASE("direct inclusion") {
  const auto& ac = analytic_facts(ExampleId::AffineCounter);
  std::vector<Vector> ys;
  for (int i = -10; i <= 10; ++i) ys.push_back(p2(0.5 * i, 0.0));
  auto r = direct_inclusion_check(zoo_sequence(ExampleId::AffineCounter), *ac.limit, ys, 200, 1e-6);
  CHECK(r.ok);
  CHECK(r.max_pairing <= 1e-6);
  // a point outside the halfplane pairs positively
  ys.push_back(p2(0, 5));
  auto bad = direct_inclusion_check(zoo_sequence(ExampleId::AffineCounter), *ac.limit, ys, 200, 1e-6);
  CHECK_FALSE(bad.ok);
}
