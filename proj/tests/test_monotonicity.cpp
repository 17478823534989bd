#include <doctest.h>

#include <cmath>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"
#include "fejerlab/zoo.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace fejer;
using testing::e;
using testing::p2;

TEST_CASE("eps values at known points") {
  const auto& q = zoo_sequence(ExampleId::QuasiIndCounter);
  for (std::size_t k = 2; k <= 30; ++k) CHECK(eps2(q, 2 * k, e(k)) == doctest::Approx(2.0).epsilon(1e-14));
  // n = 1 jumps to 2e1
  CHECK(eps2(q, 1, e(1, -1.0)) == doctest::Approx(4.0));
  auto g = testing::rng(21);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = g() % 30;
    Vector y = testing::rand_vec(g, 3, 2.0);
    auto s = step_halfspace(q.term(n), q.term(n + 1));
    if (s.signed_distance(y) > 1e-9) {
      CHECK(eps1(q, n, y) == 0.0);
      CHECK(eps2(q, n, y) == 0.0);
    }
  }
}

TEST_CASE("Type1Counter eps2 at the origin") {
  const auto& s = zoo_sequence(ExampleId::Type1Counter);
  for (std::size_t k = 1; k < 50; ++k) {
    double kk = static_cast<double>(k);
    double want =
        (2.0 / ((kk + 1) * (kk + 2))) * (1.0 / std::log(kk + 1) - (2 * kk + 3) / (2 * (kk + 1) * (kk + 2)));
    CHECK(eps2(s, 2 * k, Vector{}) == doctest::Approx(want).epsilon(1e-10));
  }
}

TEST_CASE("eps1 and eps2 vanish together on 10^4 samples") {
  auto r = testing::eps_zero_set(10000);
  CAPTURE(r.first_failure);
  CHECK(r.trials == 10000);
  CHECK(r.failures == 0);
}

TEST_CASE("opial detector") {
  std::vector<double> conv, osc2, osc3, drift;
  for (int n = 0; n < 100; ++n) {
    conv.push_back(1.0 + std::ldexp(1.0, -n));
    osc2.push_back(n % 2 ? 1.0 : std::sqrt(3.0));
    osc3.push_back(n % 3 == 0 ? 2.0 : (n % 3 == 1 ? 1.0 : 1.5));
    drift.push_back(1.0 / (n + 1));
  }
  REQUIRE(is_converges(detect_opial(conv)));
  CHECK(std::get<Converges>(detect_opial(conv)).limit == doctest::Approx(1.0));
  REQUIRE(is_oscillates(detect_opial(osc2)));
  auto o = std::get<Oscillates>(detect_opial(osc2));
  CHECK(o.lo == doctest::Approx(1.0));
  CHECK(o.hi == doctest::Approx(std::sqrt(3.0)));
  CHECK(o.period == 2);
  REQUIRE(is_oscillates(detect_opial(osc3)));
  CHECK(std::get<Oscillates>(detect_opial(osc3)).period == 3);
  CHECK(std::holds_alternative<OpialUnknown>(detect_opial(drift)));
  CHECK(std::holds_alternative<OpialUnknown>(detect_opial({1.0, 2.0})));
}

TEST_CASE("classify L2ShadowFail") {
  const auto& spec = analytic_facts(ExampleId::L2ShadowFail);
  std::vector<Vector> ys;
  for (std::size_t i = 1; i <= 6; ++i) ys.push_back(e(i, 0.5 * static_cast<double>(i)) + e(1));
  ClassifyContext ctx{&spec.certificate, nullptr};
  auto rep = classify(zoo_sequence(ExampleId::L2ShadowFail), ys, 200, ctx);
  REQUIRE(rep.points.size() == 6);
  for (const auto& p : rep.points) {
    CHECK(is_in_tail(p.fejer_star));
    CHECK(is_converges(p.opial));
  }
  // no comparator: Types I/II stay inconclusive, Type III follows from the certified tails
  CHECK(rep.type1.verdict == SeriesVerdict::Inconclusive);
  CHECK(rep.type2.verdict == SeriesVerdict::Inconclusive);
  CHECK(rep.type3.verdict == SeriesVerdict::Summable);
  auto off = opial_verdict(zoo_sequence(ExampleId::L2ShadowFail), e(0), 200);
  REQUIRE(is_oscillates(off));
  CHECK(std::get<Oscillates>(off).lo == doctest::Approx(1.0));
  CHECK(std::get<Oscillates>(off).hi == doctest::Approx(std::sqrt(3.0)));
}

TEST_CASE("classify report invariants") {
  for (auto id : all_examples()) {
    const auto& spec = analytic_facts(id);
    CAPTURE(to_string(id));
    ClassifyContext ctx{&spec.certificate, &spec.quasi};
    auto rep = classify(zoo_sequence(id), spec.samples, 80, ctx);
    for (const auto& p : rep.points) {
      if (p.fejer) {
        REQUIRE(is_in_tail(p.fejer_star));
        CHECK(std::get<InTail>(p.fejer_star).N == 0);
      }
    }
    CHECK(rep.type1.partial_sums.size() == 80);
    CHECK(rep.points.size() == spec.samples.size());
    auto j = to_json(rep);
    CHECK(j["quasi"]["typeIII"].contains("rationale"));
  }
  CHECK_THROWS_AS(classify(zoo_sequence(ExampleId::AngularClosure), {}, 10, {}), Error);
}

TEST_CASE("Type1Counter quasi verdicts") {
  const auto& spec = analytic_facts(ExampleId::Type1Counter);
  std::vector<Vector> ys = {p2(-2, 0), p2(-1, 0), p2(-0.5, 0), p2(-0.1, 0)};
  ClassifyContext ctx{&spec.certificate, &spec.quasi};
  auto rep = classify(zoo_sequence(ExampleId::Type1Counter), ys, 200, ctx);
  CHECK(rep.type1.verdict == SeriesVerdict::Divergent);
  CHECK(rep.type2.verdict == SeriesVerdict::Summable);
  // without the comparator nothing is claimed
  ClassifyContext bare{&spec.certificate, nullptr};
  auto rep2 = classify(zoo_sequence(ExampleId::Type1Counter), ys, 200, bare);
  CHECK(rep2.type1.verdict == SeriesVerdict::Inconclusive);
}

TEST_CASE("Fejer* upgrade to midpoints") {
  const auto& seq = zoo_sequence(ExampleId::L2ShadowFail);
  auto g = testing::rng(31);
  for (int t = 0; t < 50; ++t) {
    Vector a = Vector::from_entries({{1 + g() % 5, testing::uniform(g, -2, 2)},
                                     {1 + g() % 5, testing::uniform(g, -2, 2)}});
    Vector b = Vector::from_entries({{1 + g() % 5, testing::uniform(g, -2, 2)}});
    if (is_in_tail(liminf_membership(seq, a, 100)) && is_in_tail(liminf_membership(seq, b, 100)))
      CHECK(is_in_tail(liminf_membership(seq, 0.5 * (a + b), 100)));
  }
}

TEST_CASE("Raik chain") {
  FunctionSequence toy([](std::size_t n) { return p2(std::ldexp(1.0, -static_cast<int>(n)), 0); });
  auto ball = ClosedConvexSet::from_region(Region::all_space());
  auto c = raik_verify(toy, p2(-1, 0), 0, 0.5, 40, ball);
  CHECK(c.ok());
  auto found = raik_search(toy, p2(-1, 0), 40, ball);
  REQUIRE(found.has_value());
  CHECK(found->N == 0);

  const auto& spec = analytic_facts(ExampleId::AffineCounter);
  auto r = raik_search(zoo_sequence(ExampleId::AffineCounter), Vector{}, 200, *spec.affine_hull, 32);
  REQUIRE(r.has_value());
  CHECK(r->N <= 32);
  CHECK(r->rho >= std::ldexp(1.0, -20));
  auto again = raik_verify(zoo_sequence(ExampleId::AffineCounter), Vector{}, r->N, r->rho, 200,
                           *spec.affine_hull);
  CHECK(again.violations.empty());
  // a too large rho breaks the chain
  auto big = raik_verify(zoo_sequence(ExampleId::AffineCounter), Vector{}, 0, 100.0, 200,
                         *spec.affine_hull);
  CHECK_FALSE(big.ok());

  const auto& l2 = analytic_facts(ExampleId::L2ShadowFail);
  CHECK_FALSE(raik_search(zoo_sequence(ExampleId::L2ShadowFail), e(1), 40, *l2.affine_hull, 8));
}

TEST_CASE("shadow and distance profiles") {
  const auto& seq = zoo_sequence(ExampleId::L2ShadowFail);
  auto Y = *analytic_facts(ExampleId::L2ShadowFail).M_closure;
  auto sp = shadow_profile(seq, Y, 7);
  std::vector<Vector> want = {e(1), e(1), e(1, 2.0), e(1), e(1) + e(2), e(1), e(1) + e(3)};
  for (std::size_t n = 0; n < 7; ++n) CHECK(dist(sp.shadows[n], want[n]) <= 1e-12);
  CHECK(sp.partial_lengths.size() == 6);
  CHECK(sp.partial_lengths.back() == doctest::Approx(5.0));

  const auto& ac = analytic_facts(ExampleId::AffineCounter);
  auto lengths = shadow_profile(zoo_sequence(ExampleId::AffineCounter), *ac.M_closure, 200);
  double tail = lengths.partial_lengths.back() - lengths.partial_lengths[150];
  CHECK(tail <= 1e-6);

  const auto& id = analytic_facts(ExampleId::IncreasingDistance);
  auto dp = distance_profile(zoo_sequence(ExampleId::IncreasingDistance), *id.M_closure, 30);
  for (std::size_t n = 0; n < 30; ++n)
    CHECK(std::abs(dp.distances[n] - norm(generate(ExampleId::IncreasingDistance, n))) <= 1e-12);
  CHECK_FALSE(dp.eventually_decreasing_from.has_value());
}

TEST_CASE("dichotomy and exclusion") {
  TermList toy({p2(3, 3), p2(2, 2), p2(1, 1), p2(1, 1), p2(1, 1), p2(1, 1), p2(1, 1), p2(1, 1),
                p2(1, 1), p2(1, 1)});
  auto all = ClosedConvexSet::from_region(Region::all_space());
  auto r = dichotomy_exclusion(toy, p2(1, 1), all, all, all, 8);
  CHECK(r.equal_z_pattern == TailPattern::FullTail);

  const auto& nq = analytic_facts(ExampleId::L2NoIneq);
  auto r2 = dichotomy_exclusion(zoo_sequence(ExampleId::L2NoIneq), Vector{}, *nq.affine_hull,
                                *nq.M_closure, *nq.M_closure, 100);
  CHECK(r2.equal_z_pattern == TailPattern::EventuallyEmpty);
  CHECK(r2.in_Mbar_tail.size() == 50);
}

TEST_CASE("linear convergence") {
  FunctionSequence toy([](std::size_t n) { return p2(std::ldexp(1.0, -static_cast<int>(n)), 0); });
  auto origin = ClosedConvexSet::from_region(Region::singleton(Vector{}));
  auto lc = linear_conv_check(toy, origin, 0.5, 40, Vector{});
  CHECK(lc.r_ok);
  CHECK(lc.gamma_est == 1.0);
  CHECK_FALSE(linear_conv_check(toy, origin, 0.4, 40, Vector{}).r_ok);

  const auto& ac = analytic_facts(ExampleId::AffineCounter);
  CHECK(linear_conv_check(zoo_sequence(ExampleId::AffineCounter), *ac.M_closure, std::sqrt(0.5), 60,
                          ac.limit)
            .r_ok);
}

TEST_CASE("eventual Fejer on a compact set and the weakly compact failure") {
  std::vector<Vector> k;
  for (int i = 0; i <= 20; ++i) k.push_back(p2(-1.0 + 0.1 * i, -1.0));
  std::size_t n = eventual_fejer_index(zoo_sequence(ExampleId::AffineCounter), k, 200);
  CHECK(n < 200);
  const auto& seq = zoo_sequence(ExampleId::AffineCounter);
  for (std::size_t m = n; m < 200; ++m)
    for (const auto& y : k) CHECK(dist(seq.term(m + 1), y) <= dist(seq.term(m), y) + 1e-9);

  // witnesses y_n = -2 e0 + e_n: |x_n - y_n| strictly increases after a computed index
  const auto& l2 = zoo_sequence(ExampleId::L2IntNonempty);
  std::vector<double> d;
  for (std::size_t m = 0; m <= 40; ++m) d.push_back(dist(l2.term(m), e(0, -2.0) + e(m)));
  std::size_t from = 0;
  for (std::size_t m = 0; m + 1 < d.size(); ++m)
    if (!(d[m + 1] > d[m])) from = m + 1;
  CHECK(from < 10);
}
