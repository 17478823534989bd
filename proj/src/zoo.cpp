#include "fejerlab/zoo.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "fejerlab/error.hpp"

namespace fejer {

namespace {

using HP = HighPrecision;
constexpr double kPi = std::numbers::pi;

const std::array<std::string_view, 10> kNames = {
    "AngularClosure", "AffineCounter",  "IncreasingDistance", "L2ShadowFail", "L2IntNonempty",
    "L2NoIneq",       "SegmentLimit",   "AuthorsExample",     "Type1Counter", "QuasiIndCounter"};

Vector round_point(const HighPoint& p) {
  return Vector::dense({static_cast<double>(p[0]), static_cast<double>(p[1])});
}

HP hp_norm(const HP& a, const HP& b) { return boost::multiprecision::sqrt(a * a + b * b); }

// Midpoint of the minor arc from x toward the unit direction w around center c.
HighPoint arc_midpoint(const HighPoint& c, const HighPoint& x, const HighPoint& w) {
  HP dx = x[0] - c[0], dy = x[1] - c[1];
  HP r = hp_norm(dx, dy);
  HP sx = dx / r + w[0], sy = dy / r + w[1];
  HP s = hp_norm(sx, sy);
  return {c[0] + r * sx / s, c[1] + r * sy / s};
}

// Append-only memo of a planar recursion x_{n+1} = step(n, x_n).
class PlanarRecursion {
 public:
  using Step = std::function<HighPoint(std::size_t, const HighPoint&)>;
  PlanarRecursion(HighPoint x0, Step step) : step_(std::move(step)) { cache_.push_back(x0); }

  HighPoint at(std::size_t n) const {
    std::lock_guard lock(mu_);
    while (cache_.size() <= n) {
      std::size_t k = cache_.size() - 1;
      cache_.push_back(step_(k, cache_[k]));
    }
    return cache_[n];
  }

 private:
  Step step_;
  mutable std::mutex mu_;
  mutable std::vector<HighPoint> cache_;
};

// --- recursive constructions -------------------------------------------------

HighPoint affine_center(std::size_t n) { return {HP(-static_cast<double>(n)), HP(0)}; }

HighPoint affine_step(std::size_t n, const HighPoint& x) {
  // circle around (-n, 0) through x; rightmost axis point
  return arc_midpoint(affine_center(n), x, {HP(1), HP(0)});
}

HighPoint segment_center(std::size_t n) { return {HP(n % 2 == 0 ? 1 : -1), HP(0)}; }

HighPoint segment_step(std::size_t n, const HighPoint& x) {
  if (n % 3 != 0) return {x[0], -x[1]};
  // leftmost axis point for even n, rightmost for odd n
  return arc_midpoint(segment_center(n), x, {HP(n % 2 == 0 ? -1 : 1), HP(0)});
}

HP increasing_a(std::size_t n) { return boost::multiprecision::pow(HP(2), -HP(n) / 2); }

HighPoint increasing_step(std::size_t n, const HighPoint& x) {
  HP a = increasing_a(n);
  HP shift = a * boost::multiprecision::pow(HP(2), -HP(n));
  HP r2 = (x[0] + a) * (x[0] + a) + x[1] * x[1];
  return {shift, boost::multiprecision::sqrt(r2 - shift * shift)};
}

HighPoint authors_step(std::size_t n, const HighPoint& x) {
  if (n % 2 == 0) return {x[0] + boost::multiprecision::pow(HP(2), -HP(n / 2)), x[1]};
  HP dx = x[0] - 1;
  return {HP(0), boost::multiprecision::sqrt(dx * dx + x[1] * x[1] - 1)};
}

const PlanarRecursion* recursion(ExampleId id) {
  static const PlanarRecursion affine({HP(0), HP(1)}, affine_step);
  static const PlanarRecursion segment({HP(0), HP(1)}, segment_step);
  static const PlanarRecursion increasing({HP(1), HP(1)}, increasing_step);
  static const PlanarRecursion authors({HP(0), HP(2)}, authors_step);
  switch (id) {
    case ExampleId::AffineCounter: return &affine;
    case ExampleId::SegmentLimit: return &segment;
    case ExampleId::IncreasingDistance: return &increasing;
    case ExampleId::AuthorsExample: return &authors;
    default: return nullptr;
  }
}

// --- closed-form sequences ---------------------------------------------------

Vector angular_closure(std::size_t n) {
  double a = -kPi * std::ldexp(1.0, -static_cast<int>(n) - 2);
  return Vector::dense({std::cos(a), std::sin(a)});
}

Vector l2_shadow(std::size_t n) {
  if (n % 2 == 1) return Vector::basis(0) + Vector::basis(1);
  return Vector::basis(1) + Vector::basis(n / 2);
}

Vector l2_int_nonempty(std::size_t n) {
  double alpha = std::ldexp(1.0, -static_cast<int>(n));
  return alpha * (Vector::basis(0) + Vector::basis(n, 3.0));
}

Vector l2_no_ineq(std::size_t n) { return Vector::basis(n, 1.0 / static_cast<double>(n + 1)); }

Vector type1_counter(std::size_t n) {
  double k = static_cast<double>(n / 2);
  if (n % 2 == 0) return Vector::dense({1.0 / (k + 1.0), 0.0});
  // ln(k+1) vanishes at k = 0; that block uses ln 2
  double lg = n == 1 ? std::log(2.0) : std::log(k + 1.0);
  return Vector::dense({1.0 / (k + 2.0), std::sqrt(2.0 / ((k + 1.0) * (k + 2.0) * lg))});
}

class ZooSequence : public Sequence {
 public:
  explicit ZooSequence(ExampleId id) : id_(id) {}
  Vector term(std::size_t n) const override {
    if (auto* r = recursion(id_)) return round_point(r->at(n));
    switch (id_) {
      case ExampleId::AngularClosure: return angular_closure(n);
      case ExampleId::L2ShadowFail:
      case ExampleId::QuasiIndCounter: return l2_shadow(n);
      case ExampleId::L2IntNonempty: return l2_int_nonempty(n);
      case ExampleId::L2NoIneq: return l2_no_ineq(n);
      case ExampleId::Type1Counter: return type1_counter(n);
      default: break;
    }
    throw Error(ErrorKind::Internal, "no generator");
  }

 private:
  ExampleId id_;
};

// --- analytic records ----------------------------------------------------------

Vector e(std::size_t i, double v = 1.0) { return Vector::basis(i, v); }
Vector p2(double x, double y) { return Vector::dense({x, y}); }

Region x_axis() { return Region::flat(Vector{}, {e(0)}, FlatMode::Span); }
Region y_perp() { return Region::flat(Vector{}, {e(0)}, FlatMode::Complement); }

TailCertificate region_certificate(Region region) {
  return [region](const Vector& y) {
    return contains(region, y, 1e-12) ? TailClaim::EventuallyIn : TailClaim::InfinitelyOftenOut;
  };
}

SeriesRule step_length_rule(ExampleId id, std::string why) {
  return SeriesRule{[id](std::size_t n) {
                      return SupBound{dist(generate(id, n + 1), generate(id, n)),
                                      BoundKind::UpperBound};
                    },
                    SeriesVerdict::Summable, std::move(why)};
}

std::function<std::size_t(std::size_t)> planar_width() {
  return [](std::size_t) { return std::size_t{2}; };
}

ExampleSpec make_angular_closure() {
  ExampleSpec s;
  s.id = ExampleId::AngularClosure;
  s.title = "angular cone sequence on the unit circle";
  s.params = "alpha_n = -pi 2^-(n+2)";
  Region maxset = Region::angular_cone(Vector{}, 0.0, kPi, true, false);
  s.M = maxset;
  s.maximal_set = maxset;
  s.M_closure = ClosedConvexSet::from_region(Region::halfspace(e(1), 0.0));
  s.ri_M = Region::halfspace(e(1), 0.0, Boundary::Open);
  s.affine_hull = ClosedConvexSet::from_region(Region::all_space());
  s.limit = p2(1, 0);
  s.certificate = region_certificate(maxset);
  s.tangent_cone = FinCone::halfspaces({e(1, -1.0)}, 2);
  s.quasi.type1 = step_length_rule(ExampleId::AngularClosure,
                                   "eps1 <= |x_{n+1} - x_n|, steps decay geometrically");
  s.quasi.type2 = SeriesRule{[](std::size_t) {
                               return SupBound{std::numeric_limits<double>::infinity(),
                                               BoundKind::LowerBound};
                             },
                             SeriesVerdict::Divergent,
                             "eps2 unbounded along rays of the maximal set near angle pi"};
  s.samples = {p2(1, 1), p2(-1, 0.5), p2(0.5, 0), p2(0, 1), p2(2, 0.1), p2(-2, 2)};
  s.width = planar_width();
  s.expected = {{"maximal_set", "maximal set K([0,π)) = (R x R_++) u (R_+ x {0}), not closed"},
                {"limit", "x_n -> (1,0)"},
                {"directions", "D = {(0,-1)}, K = R x R_+"}};
  return s;
}

ExampleSpec make_affine_counter() {
  ExampleSpec s;
  s.id = ExampleId::AffineCounter;
  s.title = "affine counterexample: shadows on the x-axis move";
  s.params = "x0 = (0,1), circles centered at (-n,0)";
  s.M = x_axis();
  s.M_closure = ClosedConvexSet::from_region(x_axis());
  s.ri_M = x_axis();
  s.affine_hull = s.M_closure;
  Region maxset = Region::halfspace(e(1, -1.0), 0.0);
  s.maximal_set = maxset;
  s.certificate = region_certificate(maxset);
  HighPoint far = recursion(ExampleId::AffineCounter)->at(400);
  s.limit = p2(static_cast<double>(far[0]), 0.0);
  s.limit_is_estimate = true;
  s.tangent_cone = FinCone::generated_by({e(0), e(0, -1.0)}).with_ambient(2);
  s.quasi.type1 = step_length_rule(ExampleId::AffineCounter,
                                   "eps1 <= |x_{n+1} - x_n|, trajectory has finite length");
  s.samples = {p2(-1, 0), p2(0, 0), p2(0.5, 0), p2(1, 0), p2(3, 0)};
  s.width = planar_width();
  s.expected = {{"shadows", "abscissas of P_M(x_n) strictly increase"},
                {"distance", "d_M(x_n) <= 2^(-n/2)"},
                {"maximal_set", "liminf C_n = R x R_-"},
                {"limit", "x_n -> (zeta,0), zeta > 0"}};
  return s;
}

ExampleSpec make_increasing_distance() {
  ExampleSpec s;
  s.id = ExampleId::IncreasingDistance;
  s.title = "distances to the closure strictly increase";
  s.params = "a_n = 2^(-n/2), x0 = (1,1)";
  s.M = Region::intersect({Region::halfspace(e(0, -1.0), 0.0, Boundary::Open),
                           Region::halfspace(e(1, -1.0), 0.0, Boundary::Open)});
  s.M_closure = ClosedConvexSet::from_region(
      Region::intersect({Region::halfspace(e(0, -1.0), 0.0), Region::halfspace(e(1, -1.0), 0.0)}));
  s.ri_M = s.M;
  s.affine_hull = ClosedConvexSet::from_region(Region::all_space());
  HighPoint far = recursion(ExampleId::IncreasingDistance)->at(400);
  double znorm = static_cast<double>(hp_norm(far[0], far[1]));
  s.limit = p2(0.0, znorm);
  s.limit_is_estimate = true;
  Region maxset = Region::unite(
      {Region::halfspace(e(0, -1.0), 0.0, Boundary::Open),
       Region::intersect({Region::flat(Vector{}, {e(0)}, FlatMode::Complement),
                          Region::halfspace(e(1), znorm)})});
  s.maximal_set = maxset;
  s.certificate = region_certificate(maxset);
  s.tangent_cone = FinCone::generated_by({e(0, -1.0), e(1, -1.0)}).with_ambient(2);
  s.quasi.type1 = step_length_rule(ExampleId::IncreasingDistance,
                                   "eps1 <= |x_{n+1} - x_n|, trajectory has finite length");
  s.samples = {p2(-1, -1), p2(-0.5, -2), p2(-2, -0.1)};
  s.width = planar_width();
  s.expected = {{"distance", "d_Mbar(x_n) = |x_n| strictly increasing"},
                {"maximal_set", "liminf C_n = (R_-- x R) u ({0} x [|z|, inf))"}};
  return s;
}

ExampleSpec make_l2_shadow(ExampleId id) {
  ExampleSpec s;
  s.id = id;
  bool quasi = id == ExampleId::QuasiIndCounter;
  s.title = quasi ? "l2 sequence against the unit ball of M" : "l2 shadow failure";
  s.params = "x_n = e1 + e_{n/2} (n even), e0 + e1 (n odd)";
  s.planar = false;
  Region Y = y_perp();
  s.maximal_set = Y;
  s.certificate = region_certificate(Y);
  s.ri_M = Region::empty();
  s.affine_hull = ClosedConvexSet::from_region(Y);
  if (quasi) {
    s.M = Region::intersect({Region::ball(Vector{}, 1.0), Y});
    s.M_closure = ClosedConvexSet::from_region(s.M);
    s.quasi.type1 = SeriesRule{[](std::size_t n) {
                                 // y = e_k at n = 2k gives sqrt(3) - 1
                                 double v = (n % 2 == 0 && n >= 4) ? std::sqrt(3.0) - 1.0 : 0.0;
                                 return SupBound{v, BoundKind::LowerBound};
                               },
                               SeriesVerdict::Divergent, "eps1 >= sqrt(3)-1 at y = e_k, n = 2k"};
    s.quasi.type2 = SeriesRule{[](std::size_t n) {
                                 double v = n >= 3 ? 2.0 : (n == 1 ? 4.0 : 0.0);
                                 return SupBound{v, BoundKind::Exact};
                               },
                               SeriesVerdict::Divergent, "max eps2 over the ball equals 2"};
    s.samples = {e(1), e(2, -1.0), 0.5 * (e(1) + e(3)), Vector{}};
  } else {
    s.M = Y;
    s.M_closure = ClosedConvexSet::from_region(Y);
    s.samples = {e(1), e(2), e(1) + e(2), e(3, -1.0), Vector{}};
  }
  s.width = [](std::size_t h) { return std::max<std::size_t>(2, (h + 1) / 2 + 1); };
  s.expected = {{"shadows_Y", "P_Y(x_n) = (e1, e1, 2e1, e1, e1+e2, e1, e1+e3, ...)"},
                {"opial_set", "maximal Opial set is Y = {e0}^perp"}};
  return s;
}

ExampleSpec make_l2_int_nonempty() {
  ExampleSpec s;
  s.id = ExampleId::L2IntNonempty;
  s.title = "l2 sequence with nonempty interior target";
  s.params = "alpha_n = 2^-n, gamma = 3";
  s.planar = false;
  s.M = Region::halfspace(e(0, -1.0), 0.0, Boundary::Open);
  Region closed = Region::halfspace(e(0, -1.0), 0.0);
  s.M_closure = ClosedConvexSet::from_region(closed);
  s.ri_M = s.M;
  s.affine_hull = ClosedConvexSet::from_region(Region::all_space());
  s.maximal_set = closed;
  s.certificate = region_certificate(closed);
  s.limit = Vector{};
  s.tangent_cone = FinCone::halfspaces({e(0)});
  s.quasi.type1 = step_length_rule(ExampleId::L2IntNonempty,
                                   "eps1 <= |x_{n+1} - x_n|, steps decay geometrically");
  s.samples = {e(0, -1.0), e(0, -1.0) + e(1), e(0, -2.0) + e(3), e(0, -0.5) + e(2, -1.0)};
  s.width = [](std::size_t h) { return std::max<std::size_t>(h, 1); };
  s.expected = {{"ratio", "|x_n| = sqrt(10) d_Mbar(x_n), n >= 1"},
                {"witness", "|x_n - (-2e0 + e_n)| eventually increases"}};
  return s;
}

ExampleSpec make_l2_no_ineq() {
  ExampleSpec s;
  s.id = ExampleId::L2NoIneq;
  s.title = "l2 sequence inside M with no distance inequality";
  s.params = "alpha_n = 1/(n+1)";
  s.planar = false;
  s.M = Region::all_space();
  s.M_closure = ClosedConvexSet::from_region(Region::all_space());
  s.ri_M = Region::empty();
  s.affine_hull = s.M_closure;
  s.maximal_set = Region::all_space();
  s.certificate = [](const Vector&) { return TailClaim::EventuallyIn; };
  s.limit = Vector{};
  s.tangent_cone = FinCone::whole_space();
  s.samples = {Vector{}, e(0), e(1) + e(2), e(3, -1.0)};
  s.width = [](std::size_t h) { return std::max<std::size_t>(h, 1); };
  s.expected = {{"membership", "x_n in M, consecutive terms distinct"}};
  return s;
}

ExampleSpec make_segment_limit() {
  ExampleSpec s;
  s.id = ExampleId::SegmentLimit;
  s.title = "maximal set is a segment";
  s.params = "x0 = (0,1), circles centered at (+-1,0), reflections";
  Region seg = Region::intersect({x_axis(), Region::halfspace(e(0), -1.0),
                                  Region::halfspace(e(0, -1.0), -1.0)});
  s.M = seg;
  s.maximal_set = seg;
  s.M_closure = ClosedConvexSet::registered(
      seg, [](const Vector& y) { return p2(std::clamp(y[0], -1.0, 1.0), 0.0); }, "segment");
  s.ri_M = Region::intersect({x_axis(), Region::halfspace(e(0), -1.0, Boundary::Open),
                              Region::halfspace(e(0, -1.0), -1.0, Boundary::Open)});
  s.affine_hull = ClosedConvexSet::from_region(x_axis());
  s.certificate = region_certificate(seg);
  HighPoint far = recursion(ExampleId::SegmentLimit)->at(600);
  s.limit = p2(static_cast<double>(far[0]), 0.0);
  s.limit_is_estimate = true;
  s.tangent_cone = FinCone::generated_by({e(0), e(0, -1.0)}).with_ambient(2);
  s.quasi.type1 = step_length_rule(ExampleId::SegmentLimit,
                                   "eps1 <= |x_{n+1} - x_n|, steps decay geometrically");
  s.samples = {p2(-1, 0), p2(-0.5, 0), p2(0, 0), p2(0.5, 0), p2(1, 0)};
  s.width = planar_width();
  s.expected = {{"maximal_set", "liminf C_n = [-1,1] x {0}"},
                {"cone", "K = R x {0}, not solid"},
                {"b_values", "b in [1-sqrt2, 0), even increasing, odd decreasing"}};
  return s;
}

ExampleSpec make_authors_example() {
  ExampleSpec s;
  s.id = ExampleId::AuthorsExample;
  s.title = "horizontal moves and arcs around (1,0)";
  s.params = "x0 = (0,2)";
  const double zy = 2.0 / std::sqrt(3.0);
  Vector z = p2(0, zy);
  const double lo = -kPi / 2, hi = std::atan2(-2.0, std::sqrt(3.0));
  Region open_cone = Region::translate(Region::angular_cone(Vector{}, lo, hi, false, false), z);
  Vector dir = p2(1, 0) - z;
  Region segment = Region::intersect(
      {Region::flat(z, {unit(dir)}, FlatMode::Span),
       Region::halfspace_through(dir, z, Boundary::Open),
       Region::halfspace_through(-dir, p2(1, 0))});
  Region maxset = Region::unite({open_cone, segment});
  s.M = maxset;
  s.maximal_set = maxset;
  s.M_closure = ClosedConvexSet::from_region(Region::angular_cone(z, lo, hi));
  s.ri_M = open_cone;
  s.affine_hull = ClosedConvexSet::from_region(Region::all_space());
  s.certificate = region_certificate(maxset);
  s.limit = z;
  s.tangent_cone = FinCone::angular(lo, hi);
  s.quasi.type1 = step_length_rule(ExampleId::AuthorsExample,
                                   "eps1 <= |x_{n+1} - x_n|, trajectory has finite length");
  s.samples = {p2(0.5, 0), p2(0.25, 0.75 * zy), p2(0.2, zy - 1), p2(1, -2)};
  s.width = planar_width();
  s.expected = {{"limit", "x_n -> (0, 2/sqrt3)"},
                {"maximal_set", "liminf C_n = (z + int K) u (z, (1,0)]"},
                {"cone", "K = {x >= 0, y <= -2x/sqrt3}"}};
  return s;
}

ExampleSpec make_type1_counter() {
  ExampleSpec s;
  s.id = ExampleId::Type1Counter;
  s.title = "Fejer* but not quasi-Fejer of Type I";
  s.params = "k = 0 block uses ln 2";
  Region ray = Region::intersect({x_axis(), Region::halfspace(e(0, -1.0), 0.0, Boundary::Open)});
  s.M = ray;
  s.maximal_set = ray;
  s.ri_M = ray;
  s.M_closure = ClosedConvexSet::registered(
      Region::intersect({x_axis(), Region::halfspace(e(0, -1.0), 0.0)}),
      [](const Vector& y) { return p2(std::min(y[0], 0.0), 0.0); }, "ray");
  s.affine_hull = ClosedConvexSet::from_region(x_axis());
  s.certificate = region_certificate(ray);
  s.limit = Vector{};
  s.tangent_cone = FinCone::generated_by({e(0, -1.0)}).with_ambient(2);
  auto gap = [](std::size_t n, bool squared) {
    if (n % 2 == 1) return 0.0;
    Vector a = type1_counter(n + 1), b = type1_counter(n);
    return squared ? norm_squared(a) - norm_squared(b) : norm(a) - norm(b);
  };
  s.quasi.type1 = SeriesRule{[gap](std::size_t n) { return SupBound{gap(n, false), BoundKind::Exact}; },
                             SeriesVerdict::Divergent, "sup eps1 ~ 1/(k ln k), harmonic-log series"};
  s.quasi.type2 = SeriesRule{[gap](std::size_t n) { return SupBound{gap(n, true), BoundKind::Exact}; },
                             SeriesVerdict::Summable, "sup eps2 ~ 2/(k^2 ln k)"};
  s.samples = {p2(-1, 0), p2(-0.1, 0), p2(-3, 0)};
  s.width = planar_width();
  s.expected = {{"maximal_set", "liminf C_n = R_-- x {0}"},
                {"type1", "sup eps1 k ln k -> 1, series diverges"}};
  return s;
}

std::map<ExampleId, ExampleSpec> build_specs() {
  std::map<ExampleId, ExampleSpec> m;
  auto add = [&](ExampleSpec s) { m.emplace(s.id, std::move(s)); };
  add(make_angular_closure());
  add(make_affine_counter());
  add(make_increasing_distance());
  add(make_l2_shadow(ExampleId::L2ShadowFail));
  add(make_l2_int_nonempty());
  add(make_l2_no_ineq());
  add(make_segment_limit());
  add(make_authors_example());
  add(make_type1_counter());
  add(make_l2_shadow(ExampleId::QuasiIndCounter));
  return m;
}

}  // namespace

const std::array<ExampleId, 10>& all_examples() {
  static const std::array<ExampleId, 10> ids = {
      ExampleId::AngularClosure, ExampleId::AffineCounter, ExampleId::IncreasingDistance,
      ExampleId::L2ShadowFail,   ExampleId::L2IntNonempty, ExampleId::L2NoIneq,
      ExampleId::SegmentLimit,   ExampleId::AuthorsExample, ExampleId::Type1Counter,
      ExampleId::QuasiIndCounter};
  return ids;
}

std::string_view to_string(ExampleId id) { return kNames[static_cast<std::size_t>(id)]; }

ExampleId parse_example(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (kNames[i] == name) return all_examples()[i];
  throw Error(ErrorKind::UnknownExample, std::string(name));
}

const Sequence& zoo_sequence(ExampleId id) {
  static const std::array<ZooSequence, 10> seqs = {
      ZooSequence(ExampleId::AngularClosure), ZooSequence(ExampleId::AffineCounter),
      ZooSequence(ExampleId::IncreasingDistance), ZooSequence(ExampleId::L2ShadowFail),
      ZooSequence(ExampleId::L2IntNonempty), ZooSequence(ExampleId::L2NoIneq),
      ZooSequence(ExampleId::SegmentLimit), ZooSequence(ExampleId::AuthorsExample),
      ZooSequence(ExampleId::Type1Counter), ZooSequence(ExampleId::QuasiIndCounter)};
  return seqs[static_cast<std::size_t>(id)];
}

Vector generate(ExampleId id, std::size_t n) { return zoo_sequence(id).term(n); }

std::optional<HighPoint> high_precision_term(ExampleId id, std::size_t n) {
  if (auto* r = recursion(id)) return r->at(n);
  return std::nullopt;
}

std::optional<ArcStep> high_precision_arc(ExampleId id, std::size_t n) {
  HighPoint c;
  HP dir;
  if (id == ExampleId::AffineCounter) {
    c = affine_center(n);
    dir = 1;
  } else if (id == ExampleId::SegmentLimit && n % 3 == 0) {
    c = segment_center(n);
    dir = n % 2 == 0 ? -1 : 1;
  } else {
    return std::nullopt;
  }
  HighPoint x = recursion(id)->at(n);
  HP r = hp_norm(x[0] - c[0], x[1] - c[1]);
  return ArcStep{c, {c[0] + dir * r, HP(0)}};
}

const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Summable: return "Summable";
    case SeriesVerdict::Divergent: return "Divergent";
    case SeriesVerdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const ExampleSpec& analytic_facts(ExampleId id) {
  static const std::map<ExampleId, ExampleSpec> specs = build_specs();
  return specs.at(id);
}

const ExampleSpec& analytic_facts(std::string_view name) {
  return analytic_facts(parse_example(name));
}

}  // namespace fejer
