#include "fejerlab/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"

namespace fejer {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void validate(const RegionNode& node) {
  if (auto* h = std::get_if<Halfspace>(&node)) {
    if (h->normal.is_zero()) throw Error(ErrorKind::InvalidInput, "halfspace normal is zero");
  } else if (auto* b = std::get_if<Ball>(&node)) {
    if (!(b->radius > 0)) throw Error(ErrorKind::InvalidInput, "ball radius must be positive");
  } else if (auto* f = std::get_if<AffineFlat>(&node)) {
    for (std::size_t i = 0; i < f->basis.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double expect = (i == j) ? 1.0 : 0.0;
        if (std::abs(inner(f->basis[i], f->basis[j]) - expect) > 1e-12)
          throw Error(ErrorKind::InvalidInput, "flat basis is not orthonormal");
      }
  } else if (auto* c = std::get_if<AngularCone2D>(&node)) {
    double w = c->theta_hi - c->theta_lo;
    if (!(w > 0) || w > kTwoPi + 1e-15)
      throw Error(ErrorKind::InvalidInput, "angular cone needs 0 < theta_hi - theta_lo <= 2pi");
    if (c->apex.support_end() > 2) throw Error(ErrorKind::InvalidInput, "angular cone apex not in R^2");
  } else if (auto* t = std::get_if<Translate>(&node)) {
    if (t->child.size() != 1) throw Error(ErrorKind::InvalidInput, "translate needs one child");
  }
}

double halfspace_value(const Halfspace& h, const Vector& y) {
  double a = norm(h.normal);
  if (!h.anchor.empty()) return inner(h.normal, y - h.anchor.front()) / a;
  return (inner(h.normal, y) - h.offset) / a;
}

double flat_distance(const AffineFlat& f, const Vector& y) {
  Vector r = y - f.anchor;
  if (f.mode == FlatMode::Span) {
    for (const auto& b : f.basis) r = scale_add(1.0, r, -inner(r, b), b);
    return norm(r);
  }
  double s = 0.0;
  for (const auto& b : f.basis) {
    double c = inner(r, b);
    s += c * c;
  }
  return std::sqrt(s);
}

// Distance from v to the ray R_+ e(theta).
double ray_distance(double vx, double vy, double theta) {
  double ex = std::cos(theta), ey = std::sin(theta);
  double along = vx * ex + vy * ey;
  if (along >= 0) return std::abs(vx * ey - vy * ex);
  return std::hypot(vx, vy);
}

struct ConeProbe {
  bool at_apex;
  double rel;  // angle above theta_lo in [0, 2pi)
  double d_lo, d_hi;
};

ConeProbe probe_cone(const AngularCone2D& c, const Vector& y) {
  if (y.support_end() > 2) return {false, kInf, kInf, kInf};
  double vx = y[0] - c.apex[0];
  double vy = y[1] - c.apex[1];
  ConeProbe p{};
  double r = std::hypot(vx, vy);
  p.at_apex = (r == 0.0);
  double rel = std::fmod(std::atan2(vy, vx) - c.theta_lo, kTwoPi);
  if (rel < 0) rel += kTwoPi;
  p.rel = rel;
  p.d_lo = ray_distance(vx, vy, c.theta_lo);
  p.d_hi = ray_distance(vx, vy, c.theta_hi);
  return p;
}

}  // namespace

Region::Region() : node_(std::make_shared<const RegionNode>(AllSpace{})) {}

Region::Region(RegionNode node) {
  validate(node);
  node_ = std::make_shared<const RegionNode>(std::move(node));
}

Region Region::halfspace(Vector normal, double offset, Boundary b) {
  return Region(Halfspace{std::move(normal), offset, b, {}});
}

Region Region::halfspace_through(Vector normal, Vector anchor, Boundary b) {
  double offset = inner(normal, anchor);
  return Region(Halfspace{std::move(normal), offset, b, {std::move(anchor)}});
}

Region Region::ball(Vector center, double radius) { return Region(Ball{std::move(center), radius}); }

Region Region::flat(Vector anchor, std::vector<Vector> basis, FlatMode mode) {
  return Region(AffineFlat{std::move(anchor), std::move(basis), mode});
}

Region Region::angular_cone(Vector apex, double lo, double hi, bool include_lo, bool include_hi) {
  return Region(AngularCone2D{std::move(apex), lo, hi, include_lo, include_hi});
}

Region Region::unite(std::vector<Region> children) { return Region(UnionOf{std::move(children)}); }

Region Region::intersect(std::vector<Region> children) {
  return Region(IntersectionOf{std::move(children)});
}

Region Region::translate(Region child, Vector shift) {
  return Region(Translate{{std::move(child)}, std::move(shift)});
}

Region Region::all_space() { return Region(AllSpace{}); }
Region Region::empty() { return Region(UnionOf{}); }
Region Region::singleton(Vector point) { return Region(Singleton{std::move(point)}); }

bool contains(const Region& r, const Vector& y) { return contains(r, y, config().zero_tol); }

bool contains(const Region& r, const Vector& y, double tol) {
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          double s = halfspace_value(n, y);
          return n.boundary == Boundary::Closed ? s >= -tol : s > tol;
        } else if constexpr (std::is_same_v<T, Ball>) {
          return dist(y, n.center) <= n.radius + tol;
        } else if constexpr (std::is_same_v<T, AffineFlat>) {
          return flat_distance(n, y) <= tol;
        } else if constexpr (std::is_same_v<T, AngularCone2D>) {
          ConeProbe p = probe_cone(n, y);
          if (p.rel == kInf) return false;
          bool near_lo = p.d_lo <= tol, near_hi = p.d_hi <= tol;
          if (near_lo || near_hi) return (near_lo && n.include_lo) || (near_hi && n.include_hi);
          return p.rel < n.theta_hi - n.theta_lo;
        } else if constexpr (std::is_same_v<T, UnionOf>) {
          return std::any_of(n.children.begin(), n.children.end(),
                             [&](const Region& c) { return contains(c, y, tol); });
        } else if constexpr (std::is_same_v<T, IntersectionOf>) {
          return std::all_of(n.children.begin(), n.children.end(),
                             [&](const Region& c) { return contains(c, y, tol); });
        } else if constexpr (std::is_same_v<T, Translate>) {
          return contains(n.child.front(), y - n.shift, tol);
        } else if constexpr (std::is_same_v<T, AllSpace>) {
          return true;
        } else {
          return dist(y, n.point) <= tol;
        }
      },
      r.node());
}

double margin(const Region& r, const Vector& y) {
  return std::visit(
      [&](const auto& n) -> double {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Halfspace>) {
          return halfspace_value(n, y);
        } else if constexpr (std::is_same_v<T, Ball>) {
          return n.radius - dist(y, n.center);
        } else if constexpr (std::is_same_v<T, AffineFlat>) {
          return -flat_distance(n, y);
        } else if constexpr (std::is_same_v<T, AngularCone2D>) {
          ConeProbe p = probe_cone(n, y);
          if (p.rel == kInf) return -kInf;
          double d = std::min(p.d_lo, p.d_hi);
          if (p.at_apex) return 0.0;
          return p.rel < n.theta_hi - n.theta_lo ? d : -d;
        } else if constexpr (std::is_same_v<T, UnionOf>) {
          double m = -kInf;
          for (const auto& c : n.children) m = std::max(m, margin(c, y));
          return m;
        } else if constexpr (std::is_same_v<T, IntersectionOf>) {
          double m = kInf;
          for (const auto& c : n.children) m = std::min(m, margin(c, y));
          return m;
        } else if constexpr (std::is_same_v<T, Translate>) {
          return margin(n.child.front(), y - n.shift);
        } else if constexpr (std::is_same_v<T, AllSpace>) {
          return kInf;
        } else {
          return -dist(y, n.point);
        }
      },
      r.node());
}

Cell classify_cell(const Region& r, const Vector& y, double band) {
  double m = margin(r, y);
  if (m > band) return Cell::In;
  if (m < -band) return Cell::Out;
  return Cell::Boundary;
}

const char* to_string(Cell c) {
  switch (c) {
    case Cell::In: return "in";
    case Cell::Out: return "out";
    case Cell::Boundary: return "boundary";
  }
  return "?";
}

nlohmann::ordered_json to_json(const Region& r) {
  using oj = nlohmann::ordered_json;
  return std::visit(
      [&](const auto& n) -> oj {
        using T = std::decay_t<decltype(n)>;
        oj j;
        if constexpr (std::is_same_v<T, Halfspace>) {
          j["type"] = "halfspace";
          j["normal"] = to_json(n.normal);
          j["offset"] = n.offset;
          j["boundary"] = n.boundary == Boundary::Closed ? "closed" : "open";
          if (!n.anchor.empty()) j["anchor"] = to_json(n.anchor.front());
        } else if constexpr (std::is_same_v<T, Ball>) {
          j["type"] = "ball";
          j["center"] = to_json(n.center);
          j["radius"] = n.radius;
        } else if constexpr (std::is_same_v<T, AffineFlat>) {
          j["type"] = "flat";
          j["anchor"] = to_json(n.anchor);
          j["basis"] = oj::array();
          for (const auto& b : n.basis) j["basis"].push_back(to_json(b));
          j["mode"] = n.mode == FlatMode::Span ? "span" : "complement";
        } else if constexpr (std::is_same_v<T, AngularCone2D>) {
          j["type"] = "angular_cone";
          j["apex"] = to_json(n.apex);
          j["theta_lo"] = n.theta_lo;
          j["theta_hi"] = n.theta_hi;
          j["include_lo"] = n.include_lo;
          j["include_hi"] = n.include_hi;
        } else if constexpr (std::is_same_v<T, UnionOf> || std::is_same_v<T, IntersectionOf>) {
          j["type"] = std::is_same_v<T, UnionOf> ? "union" : "intersection";
          j["children"] = oj::array();
          for (const auto& c : n.children) j["children"].push_back(to_json(c));
        } else if constexpr (std::is_same_v<T, Translate>) {
          j["type"] = "translate";
          j["child"] = to_json(n.child.front());
          j["shift"] = to_json(n.shift);
        } else if constexpr (std::is_same_v<T, AllSpace>) {
          j["type"] = "all";
        } else {
          j["type"] = "singleton";
          j["point"] = to_json(n.point);
        }
        return j;
      },
      r.node());
}

Region region_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw Error(ErrorKind::InvalidInput, "region JSON needs a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  auto boundary = [&]() {
    std::string b = j.value("boundary", "closed");
    if (b == "closed") return Boundary::Closed;
    if (b == "open") return Boundary::Open;
    throw Error(ErrorKind::InvalidInput, "boundary must be closed or open");
  };
  auto children = [&]() {
    std::vector<Region> out;
    for (const auto& c : j.at("children")) out.push_back(region_from_json(c));
    return out;
  };
  try {
    if (type == "halfspace") {
      if (j.contains("anchor"))
        return Region::halfspace_through(vector_from_json(j.at("normal")),
                                         vector_from_json(j.at("anchor")), boundary());
      return Region::halfspace(vector_from_json(j.at("normal")), j.at("offset").get<double>(),
                               boundary());
    }
    if (type == "ball")
      return Region::ball(vector_from_json(j.at("center")), j.at("radius").get<double>());
    if (type == "flat") {
      std::vector<Vector> basis;
      for (const auto& b : j.at("basis")) basis.push_back(vector_from_json(b));
      std::string mode = j.value("mode", "span");
      if (mode != "span" && mode != "complement")
        throw Error(ErrorKind::InvalidInput, "flat mode must be span or complement");
      return Region::flat(vector_from_json(j.at("anchor")), std::move(basis),
                          mode == "span" ? FlatMode::Span : FlatMode::Complement);
    }
    if (type == "angular_cone")
      return Region::angular_cone(vector_from_json(j.at("apex")), j.at("theta_lo").get<double>(),
                                  j.at("theta_hi").get<double>(), j.value("include_lo", true),
                                  j.value("include_hi", true));
    if (type == "union") return Region::unite(children());
    if (type == "intersection") return Region::intersect(children());
    if (type == "translate")
      return Region::translate(region_from_json(j.at("child")), vector_from_json(j.at("shift")));
    if (type == "all") return Region::all_space();
    if (type == "empty") return Region::empty();
    if (type == "singleton") return Region::singleton(vector_from_json(j.at("point")));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("region JSON: ") + e.what());
  }
  throw Error(ErrorKind::InvalidInput, "unknown region type '" + type + "'");
}

}  // namespace fejer
