#include "fejerlab/projection.hpp"

#include <cmath>
#include <numbers>

#include "fejerlab/error.hpp"

namespace fejer {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vector project_halfspace(const Halfspace& h, const Vector& y) {
  double a2 = norm_squared(h.normal);
  double v = h.anchor.empty() ? inner(h.normal, y) - h.offset : inner(h.normal, y - h.anchor.front());
  if (v >= 0) return y;
  return scale_add(1.0, y, -v / a2, h.normal);
}

Vector project_ball(const Ball& b, const Vector& y) {
  double d = dist(y, b.center);
  if (d <= b.radius) return y;
  return scale_add(1.0, b.center, b.radius / d, y - b.center);
}

Vector project_flat(const AffineFlat& f, const Vector& y) {
  Vector r = y - f.anchor;
  if (f.mode == FlatMode::Span) {
    Vector p = f.anchor;
    for (const auto& b : f.basis) p = scale_add(1.0, p, inner(r, b), b);
    return p;
  }
  Vector p = y;
  for (const auto& b : f.basis) p = scale_add(1.0, p, -inner(r, b), b);
  return p;
}

Vector project_angular(const AngularCone2D& c, const Vector& y) {
  double vx = y[0] - c.apex[0], vy = y[1] - c.apex[1];
  double w = c.theta_hi - c.theta_lo;
  double rel = std::fmod(std::atan2(vy, vx) - c.theta_lo, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  Vector planar = Vector::dense({y[0], y[1]});
  if (rel <= w) return planar;
  // clamp to the nearer bounding angle; ties go to theta_lo
  double theta = (rel - w < kTwoPi - rel) ? c.theta_hi : c.theta_lo;
  double ex = std::cos(theta), ey = std::sin(theta);
  double t = std::max(0.0, vx * ex + vy * ey);
  return Vector::dense({c.apex[0] + t * ex, c.apex[1] + t * ey});
}

}  // namespace

ClosedConvexSet ClosedConvexSet::registered(Region region, Projector projector, std::string rule) {
  return ClosedConvexSet(std::move(region), std::move(projector), std::move(rule));
}

ClosedConvexSet ClosedConvexSet::from_cone(const FinCone& cone) {
  Region region;
  if (cone.form() == FinCone::Form::Halfspaces) {
    std::vector<Region> parts;
    for (const auto& n : cone.vectors()) parts.push_back(Region::halfspace(-n, 0.0));
    region = Region::intersect(std::move(parts));
  } else {
    // generated cones carry no Region form; use contains() on the set
    region = Region::all_space();
  }
  return ClosedConvexSet(region, [cone](const Vector& y) { return cone.project(y); }, "cone");
}

ClosedConvexSet ClosedConvexSet::from_region(const Region& region) {
  const auto& node = region.node();
  if (auto* h = std::get_if<Halfspace>(&node)) {
    if (h->boundary == Boundary::Open)
      throw Error(ErrorKind::UnsupportedSet, "open halfspace has no metric projection");
    return ClosedConvexSet(region, [h = *h](const Vector& y) { return project_halfspace(h, y); },
                           "halfspace");
  }
  if (auto* b = std::get_if<Ball>(&node))
    return ClosedConvexSet(region, [b = *b](const Vector& y) { return project_ball(b, y); }, "ball");
  if (auto* f = std::get_if<AffineFlat>(&node))
    return ClosedConvexSet(region, [f = *f](const Vector& y) { return project_flat(f, y); }, "flat");
  if (auto* c = std::get_if<AngularCone2D>(&node)) {
    if (!c->include_lo || !c->include_hi)
      throw Error(ErrorKind::UnsupportedSet, "angular cone is not closed");
    if (c->theta_hi - c->theta_lo > std::numbers::pi + 1e-15)
      throw Error(ErrorKind::UnsupportedSet, "angular cone wider than pi is not convex");
    return ClosedConvexSet(region, [c = *c](const Vector& y) { return project_angular(c, y); },
                           "angular_cone");
  }
  if (auto* s = std::get_if<Singleton>(&node))
    return ClosedConvexSet(region, [p = s->point](const Vector&) { return p; }, "singleton");
  if (std::holds_alternative<AllSpace>(node))
    return ClosedConvexSet(region, [](const Vector& y) { return y; }, "all");
  if (auto* t = std::get_if<Translate>(&node)) {
    auto inner_set = from_region(t->child.front());
    return ClosedConvexSet(
        region,
        [inner_set, s = t->shift](const Vector& y) { return inner_set.project(y - s) + s; },
        "translate(" + inner_set.rule() + ")");
  }
  if (auto* in = std::get_if<IntersectionOf>(&node)) {
    const auto& ch = in->children;
    if (ch.size() == 1) return from_region(ch.front());
    // ball centered in a flat: project onto the flat, then onto the ball
    if (ch.size() == 2) {
      for (int k = 0; k < 2; ++k) {
        auto* b = std::get_if<Ball>(&ch[k].node());
        auto* f = std::get_if<AffineFlat>(&ch[1 - k].node());
        if (b && f && fejer::contains(ch[1 - k], b->center, 1e-12)) {
          return ClosedConvexSet(
              region,
              [b = *b, f = *f](const Vector& y) { return project_ball(b, project_flat(f, y)); },
              "ball_in_flat");
        }
      }
    }
    // closed halfspaces with pairwise orthogonal normals: compose
    bool orthogonal = true;
    std::vector<Halfspace> hs;
    for (const auto& c : ch) {
      auto* h = std::get_if<Halfspace>(&c.node());
      if (!h || h->boundary != Boundary::Closed) {
        orthogonal = false;
        break;
      }
      hs.push_back(*h);
    }
    for (std::size_t i = 0; orthogonal && i < hs.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (std::abs(inner(hs[i].normal, hs[j].normal)) > 1e-12) orthogonal = false;
    if (orthogonal) {
      return ClosedConvexSet(
          region,
          [hs](const Vector& y) {
            Vector p = y;
            for (const auto& h : hs) p = project_halfspace(h, p);
            return p;
          },
          "orthogonal_halfspaces");
    }
  }
  throw Error(ErrorKind::UnsupportedSet, "no projection rule registered for this region");
}

}  // namespace fejer
