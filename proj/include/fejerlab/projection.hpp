#pragma once

#include <functional>
#include <string>

#include "fejerlab/cone.hpp"
#include "fejerlab/region.hpp"

namespace fejer {

// A closed convex Region paired with its metric projection.
class ClosedConvexSet {
 public:
  using Projector = std::function<Vector(const Vector&)>;

  // Picks a projection rule for supported primitives; throws UnsupportedSet otherwise.
  static ClosedConvexSet from_region(const Region& region);
  static ClosedConvexSet from_cone(const FinCone& cone);
  // A per-example closed form for a set not covered by the generic rules.
  static ClosedConvexSet registered(Region region, Projector projector, std::string rule);

  const Region& region() const { return region_; }
  const std::string& rule() const { return rule_; }
  Vector project(const Vector& y) const { return projector_(y); }
  double distance(const Vector& y) const { return dist(y, project(y)); }
  // Membership by projection residual.
  bool contains(const Vector& y, double tol = 1e-10) const {
    return distance(y) <= tol * (1.0 + norm(y));
  }

 private:
  ClosedConvexSet(Region region, Projector projector, std::string rule)
      : region_(std::move(region)), projector_(std::move(projector)), rule_(std::move(rule)) {}

  Region region_;
  Projector projector_;
  std::string rule_;
};

inline Vector project(const ClosedConvexSet& set, const Vector& y) { return set.project(y); }

}  // namespace fejer
