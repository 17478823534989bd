#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "fejerlab/hilbert.hpp"

namespace fejer {

constexpr std::size_t kMaxConeDimension = 16;

// Closed convex cone, either as the conic hull of finitely many generators
// or as {u : <n_i, u> <= 0} for finitely many normals (the form produced by polar).
class FinCone {
 public:
  enum class Form { Generators, Halfspaces };

  static FinCone generated_by(std::vector<Vector> generators);
  static FinCone halfspaces(std::vector<Vector> normals, std::optional<std::size_t> ambient = {});
  static FinCone whole_space(std::optional<std::size_t> ambient = {});
  static FinCone origin();
  // K([lo, hi]) in R^2 from its extreme rays; needs hi - lo <= pi.
  static FinCone angular(double lo, double hi);

  Form form() const { return form_; }
  const std::vector<Vector>& vectors() const { return vectors_; }
  std::optional<std::size_t> ambient() const { return ambient_; }
  FinCone with_ambient(std::size_t d) const;

  Vector project(const Vector& x) const;
  double distance(const Vector& x) const;
  bool contains(const Vector& x, double tol = 1e-10) const;
  // Number of coordinates touched by the stored vectors.
  std::size_t active_dimension() const;

 private:
  Form form_ = Form::Generators;
  std::vector<Vector> vectors_;
  std::optional<std::size_t> ambient_;
};

// Nearest point of cone(generators) to y (Lawson-Hanson NNLS on the active coordinates).
Vector project_onto_conic_hull(std::span<const Vector> generators, const Vector& y);

struct MoreauSplit {
  Vector p;  // P_K(x)
  Vector q;  // P_{K polar}(x)
};

MoreauSplit moreau_split(const FinCone& k, const Vector& x);
FinCone polar(const FinCone& k);
bool is_pointed(const FinCone& k);
// min over normalized generators g of <g, u>; u is in int(K^dual) iff the result is > 0.
double is_solid_dual(const FinCone& k, const Vector& u);

struct DualDirection {
  Vector u;        // unit vector
  double margin;   // is_solid_dual(k, u)
};
// Direction maximizing the dual margin (LP); empty when the dual cone has no interior.
std::optional<DualDirection> dual_interior_direction(const FinCone& k);

struct KreinRutmanRow {
  std::size_t dim;
  double min_conv_norm;
  bool pointed;
};
std::vector<KreinRutmanRow> krein_rutman_truncation_demo(std::span<const std::size_t> dims);

}  // namespace fejer
