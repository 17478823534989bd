#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fejerlab/hilbert.hpp"

namespace fejer {

class Region;

enum class Boundary { Closed, Open };

// {y : <normal, y> >= offset} (Closed) or > offset (Open).
// When an anchor on the boundary is known, membership uses <normal, y - anchor>.
struct Halfspace {
  Vector normal;
  double offset = 0.0;
  Boundary boundary = Boundary::Closed;
  std::vector<Vector> anchor;  // empty or one point with <normal, anchor> = offset
};

struct Ball {
  Vector center;
  double radius = 1.0;
};

enum class FlatMode {
  Span,        // anchor + span(basis)
  Complement,  // anchor + basis^perp
};

struct AffineFlat {
  Vector anchor;
  std::vector<Vector> basis;  // orthonormal
  FlatMode mode = FlatMode::Span;
};

// apex + R_+ e([theta_lo, theta_hi]) with boundary rays included per flag.
struct AngularCone2D {
  Vector apex;
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  bool include_lo = true;
  bool include_hi = true;
};

struct UnionOf {
  std::vector<Region> children;
};

struct IntersectionOf {
  std::vector<Region> children;
};

struct Translate {
  std::vector<Region> child;  // exactly one
  Vector shift;
};

struct AllSpace {};

struct Singleton {
  Vector point;
};

using RegionNode = std::variant<Halfspace, Ball, AffineFlat, AngularCone2D, UnionOf,
                                IntersectionOf, Translate, AllSpace, Singleton>;

class Region {
 public:
  Region();  // AllSpace
  Region(RegionNode node);  // validates invariants

  static Region halfspace(Vector normal, double offset, Boundary b = Boundary::Closed);
  // {y : <normal, y - anchor> >= 0} (or > 0)
  static Region halfspace_through(Vector normal, Vector anchor, Boundary b = Boundary::Closed);
  static Region ball(Vector center, double radius);
  static Region flat(Vector anchor, std::vector<Vector> basis, FlatMode mode = FlatMode::Span);
  static Region angular_cone(Vector apex, double lo, double hi, bool include_lo = true,
                             bool include_hi = true);
  static Region unite(std::vector<Region> children);
  static Region intersect(std::vector<Region> children);
  static Region translate(Region child, Vector shift);
  static Region all_space();
  static Region empty();
  static Region singleton(Vector point);

  const RegionNode& node() const { return *node_; }

 private:
  std::shared_ptr<const RegionNode> node_;
};

// Exact membership with boundary flags; points within `tol` of a boundary count as on it.
bool contains(const Region& r, const Vector& y, double tol);
bool contains(const Region& r, const Vector& y);  // tol = config().zero_tol

// Approximate signed distance: positive inside, negative outside.
double margin(const Region& r, const Vector& y);

enum class Cell { In, Out, Boundary };
Cell classify_cell(const Region& r, const Vector& y, double band);
const char* to_string(Cell c);

nlohmann::ordered_json to_json(const Region& r);
Region region_from_json(const nlohmann::json& j);

}  // namespace fejer
