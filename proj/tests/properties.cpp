#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "fejerlab/cone.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/monotonicity.hpp"
#include "fejerlab/projection.hpp"
#include "fejerlab/zoo.hpp"
#include "support.hpp"

namespace testing {

using namespace fejer;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<Vector> orthonormal(std::mt19937_64& g, std::size_t d, std::size_t k) {
  std::vector<Vector> out;
  while (out.size() < k) {
    Vector v = rand_vec(g, d);
    for (const auto& b : out) v = v - inner(v, b) * b;
    if (norm(v) > 1e-3) out.push_back(unit(v));
  }
  return out;
}

struct Instance {
  ClosedConvexSet set;
  std::function<Vector(const Vector&)> oracle;  // empty: use optimality check
  std::function<bool(const Vector& y, const Vector& p)> optimal;
  std::size_t dim;
};

Vector rotate2(double t) { return p2(std::cos(t), std::sin(t)); }

// nearest point of a closed planar wedge by enumerating candidates
Vector wedge_oracle(const Vector& apex, double lo, double hi, const Vector& y) {
  Vector v = y - apex;
  double ang = std::atan2(v[1], v[0]);
  double rel = std::fmod(ang - lo + 4 * kPi, 2 * kPi);
  if (rel <= hi - lo) return y;
  Vector best = apex;
  for (double t : {lo, hi}) {
    Vector r = rotate2(t);
    double s = std::max(0.0, inner(v, r));
    Vector c = apex + s * r;
    if (dist(c, y) < dist(best, y)) best = c;
  }
  return best;
}

Instance make_instance(const std::string& kind, std::mt19937_64& g) {
  std::size_t d = 2 + g() % 5;
  if (kind == "halfspace") {
    Vector a = rand_vec(g, d);
    double b = uniform(g, -1, 1);
    return {ClosedConvexSet::from_region(Region::halfspace(a, b)),
            [a, b](const Vector& y) {
              double s = inner(a, y) - b;
              return s >= 0 ? y : y - (s / norm_squared(a)) * a;
            },
            {}, d};
  }
  if (kind == "ball") {
    Vector c = rand_vec(g, d);
    double r = uniform(g, 0.1, 2.0);
    return {ClosedConvexSet::from_region(Region::ball(c, r)),
            [c, r](const Vector& y) {
              double n = dist(y, c);
              return n <= r ? y : c + (r / n) * (y - c);
            },
            {}, d};
  }
  if (kind == "flat_span" || kind == "flat_complement") {
    std::size_t k = 1 + g() % (d - 1);
    auto basis = orthonormal(g, d, k);
    Vector a = rand_vec(g, d);
    bool span = kind == "flat_span";
    return {ClosedConvexSet::from_region(
                Region::flat(a, basis, span ? FlatMode::Span : FlatMode::Complement)),
            [a, basis, span](const Vector& y) {
              Vector along;
              for (const auto& b : basis) along = along + inner(y - a, b) * b;
              return span ? a + along : y - along;
            },
            {}, d};
  }
  if (kind == "angular_cone") {
    Vector apex = rand_vec(g, 2);
    double lo = uniform(g, -kPi, kPi), w = uniform(g, 0.05, kPi);
    return {ClosedConvexSet::from_region(Region::angular_cone(apex, lo, lo + w)),
            [apex, lo, w](const Vector& y) { return wedge_oracle(apex, lo, lo + w, y); }, {}, 2};
  }
  if (kind == "singleton") {
    Vector p = rand_vec(g, d);
    return {ClosedConvexSet::from_region(Region::singleton(p)),
            [p](const Vector&) { return p; }, {}, d};
  }
  if (kind == "translate") {
    Vector s = rand_vec(g, d);
    double r = uniform(g, 0.1, 2.0);
    return {ClosedConvexSet::from_region(Region::translate(Region::ball(Vector{}, r), s)),
            [s, r](const Vector& y) {
              double n = dist(y, s);
              return n <= r ? y : s + (r / n) * (y - s);
            },
            {}, d};
  }
  if (kind == "ball_in_flat") {
    std::size_t k = 1 + g() % (d - 1);
    auto basis = orthonormal(g, d, k);
    Vector a = rand_vec(g, d);
    Vector c = a + uniform(g, -1, 1) * basis[0];
    double r = uniform(g, 0.2, 2.0);
    return {ClosedConvexSet::from_region(
                Region::intersect({Region::ball(c, r), Region::flat(a, basis)})),
            [a, basis, c, r](const Vector& y) {
              Vector p = a;
              for (const auto& b : basis) p = p + inner(y - a, b) * b;
              double n = dist(p, c);
              return n <= r ? p : c + (r / n) * (p - c);
            },
            {}, d};
  }
  if (kind == "orthogonal_halfspaces") {
    std::vector<Region> hs;
    std::vector<std::pair<Vector, double>> raw;
    for (std::size_t i = 0; i < d; i += 2) {
      Vector a = e(i, uniform(g, 0.5, 2.0) * (g() % 2 ? 1.0 : -1.0));
      double b = uniform(g, -1, 1);
      hs.push_back(Region::halfspace(a, b));
      raw.emplace_back(a, b);
    }
    return {ClosedConvexSet::from_region(Region::intersect(hs)),
            [raw](const Vector& y) {
              Vector p = y;
              for (const auto& [a, b] : raw) {
                double s = inner(a, p) - b;
                if (s < 0) p = p - (s / norm_squared(a)) * a;
              }
              return p;
            },
            {}, d};
  }
  if (kind == "cone_generators" || kind == "cone_halfspaces") {
    std::size_t k = 1 + g() % (d + 2);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(rand_vec(g, d));
    bool gens = kind == "cone_generators";
    FinCone cone = gens ? FinCone::generated_by(vs) : FinCone::halfspaces(vs, d);
    // KKT: p in K, y - p in K polar, <y - p, p> = 0
    auto optimal = [vs, gens, cone](const Vector& y, const Vector& p) {
      Vector r = y - p;
      double scale = 1e-8 * (1.0 + norm(y));
      if (std::abs(inner(r, p)) > scale * (1.0 + norm(p))) return false;
      if (gens) {
        for (const auto& v : vs)
          if (inner(r, v) > scale * norm(v)) return false;
        return cone.distance(p) <= scale;
      }
      for (const auto& v : vs)
        if (inner(v, p) > scale * norm(v)) return false;
      return dist(r, project_onto_conic_hull(vs, r)) <= scale;
    };
    return {ClosedConvexSet::from_cone(cone), {}, optimal, d};
  }
  throw Error(ErrorKind::InvalidInput, "unknown primitive " + kind);
}

void fail(PropertyResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

}  // namespace

std::vector<std::string> projection_primitives() {
  return {"halfspace",    "ball",      "flat_span",    "flat_complement",
          "angular_cone", "singleton", "translate",    "ball_in_flat",
          "orthogonal_halfspaces",     "cone_generators", "cone_halfspaces"};
}

PropertyResult projection_properties(const std::string& primitive, std::size_t trials,
                                     double slack) {
  auto g = rng(std::hash<std::string>{}(primitive));
  PropertyResult r;
  for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
    Instance in = make_instance(primitive, g);
    Vector x = rand_vec(g, in.dim, 2.0), y = rand_vec(g, in.dim, 2.0);
    Vector px = in.set.project(x), py = in.set.project(y);
    double sx = slack * (1.0 + norm(x)) * (1.0 + norm(y));
    if (dist(in.set.project(px), px) > slack * (1.0 + norm(px))) fail(r, primitive + ": idempotence");
    if (dist(px, py) > dist(x, y) + sx) fail(r, primitive + ": nonexpansive");
    if (norm_squared(px - py) > inner(px - py, x - y) + sx) fail(r, primitive + ": firm");
    if (in.oracle) {
      if (dist(px, in.oracle(x)) > 1e-9 * (1.0 + norm(x))) fail(r, primitive + ": oracle");
    } else if (!in.optimal(x, px)) {
      fail(r, primitive + ": optimality");
    }
  }
  return r;
}

PropertyResult moreau_properties(std::size_t trials, double slack) {
  auto g = rng(77);
  PropertyResult r;
  for (std::size_t t = 0; t < trials; ++t, ++r.trials) {
    std::size_t d = 2 + t % 7;
    std::size_t k = 1 + g() % (d + 2);
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < k; ++i) vs.push_back(rand_vec(g, d));
    bool gens = t % 2 == 0;
    FinCone cone = gens ? FinCone::generated_by(vs) : FinCone::halfspaces(vs, d);
    Vector x = rand_vec(g, d, 3.0);
    MoreauSplit s;
    try {
      s = moreau_split(cone, x);
    } catch (const Error& ex) {
      fail(r, std::string("moreau_split threw: ") + ex.what());
      continue;
    }
    double sc = slack * (1.0 + norm_squared(x));
    if (dist(x, s.p + s.q) > sc) fail(r, "reconstruction");
    if (std::abs(inner(s.p, s.q)) > sc) fail(r, "orthogonality");
    if (gens) {
      for (const auto& v : vs)
        if (inner(s.q, v) > sc * norm(v)) fail(r, "q not in polar");
    } else {
      for (const auto& v : vs)
        if (inner(s.p, v) > sc * norm(v)) fail(r, "p not in K");
    }
  }
  return r;
}

PropertyResult eps_zero_set(std::size_t samples) {
  auto g = rng(99);
  PropertyResult r;
  const auto& ids = all_examples();
  for (std::size_t t = 0; t < samples; ++t, ++r.trials) {
    ExampleId id = ids[t % ids.size()];
    std::size_t n = g() % 40;
    const auto& spec = analytic_facts(id);
    std::size_t w = std::max<std::size_t>(spec.width(n + 2), 2);
    Vector x = generate(id, n);
    Vector y = (t % 3 == 0) ? x + rand_vec(g, w, 0.3) : rand_vec(g, w, 1.5);
    double a = eps1(zoo_sequence(id), n, y), b = eps2(zoo_sequence(id), n, y);
    if (a < 0 || b < 0) fail(r, "negative tolerance");
    if ((a > 0) != (b > 0))
      fail(r, std::string(to_string(id)) + " n=" + std::to_string(n) + " y=" + to_string(y));
  }
  return r;
}

PropertyResult double_polar_2d(std::size_t cones, std::size_t directions) {
  auto g = rng(5);
  PropertyResult r;
  const double step = 2 * kPi / static_cast<double>(directions);
  for (std::size_t c = 0; c < cones; ++c) {
    double lo = uniform(g, -kPi, kPi);
    double w = uniform(g, 0.1, kPi - 0.1);
    FinCone k = (c % 2 == 0) ? FinCone::angular(lo, lo + w)
                             : FinCone::generated_by({rotate2(lo), rotate2(lo + w),
                                                      rotate2(lo + 0.3 * w)});
    FinCone kp = polar(k);
    // sampled polar: directions accepted by the library's polar, plus its
    // boundary rays located by bisection between accepted and rejected samples
    std::vector<Vector> sampled;
    const std::size_t fine = 4 * directions;
    const double fstep = 2 * kPi / static_cast<double>(fine);
    for (std::size_t j = 0; j < fine; ++j) {
      double a = fstep * static_cast<double>(j), b = a + fstep;
      bool ina = kp.contains(rotate2(a), 1e-12), inb = kp.contains(rotate2(b), 1e-12);
      if (ina) sampled.push_back(rotate2(a));
      if (ina == inb) continue;
      for (int it = 0; it < 60; ++it) {
        double mid = 0.5 * (a + b);
        (kp.contains(rotate2(mid), 1e-12) == ina ? a : b) = mid;
      }
      sampled.push_back(rotate2(ina ? a : b));
    }
    for (std::size_t i = 0; i < directions; ++i, ++r.trials) {
      double t = step * static_cast<double>(i);
      Vector u = rotate2(t);
      double rel = std::fmod(t - lo + 4 * kPi, 2 * kPi);
      bool in_k = k.contains(u, 1e-9);
      double m = -1.0;
      for (const auto& s : sampled) m = std::max(m, inner(u, s));
      bool in_bipolar = m <= 1e-9;
      bool truth = rel <= w;
      if (in_k != truth || in_bipolar != truth)
        fail(r, "cone " + std::to_string(c) + " direction " + std::to_string(i));
    }
  }
  return r;
}

}  // namespace testing
