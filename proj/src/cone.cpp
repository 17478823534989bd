#include "fejerlab/cone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>

#include "fejerlab/error.hpp"
#include "fejerlab/simplex.hpp"

namespace fejer {

namespace {

// Maps the union of supports onto 0..d-1.
std::vector<std::size_t> active_indices(std::span<const Vector> vs) {
  std::vector<std::size_t> idx;
  for (const auto& v : vs)
    for (const auto& e : v.entries()) idx.push_back(e.index);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

Eigen::VectorXd restrict(const Vector& v, const std::vector<std::size_t>& idx) {
  Eigen::VectorXd out(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) out[i] = v[idx[i]];
  return out;
}

Vector lift(const Eigen::VectorXd& x, const std::vector<std::size_t>& idx) {
  std::vector<Vector::Entry> e;
  for (std::size_t i = 0; i < idx.size(); ++i) e.push_back({idx[i], x[i]});
  return Vector::from_entries(std::move(e));
}

void check_dimension(std::size_t d) {
  if (d > kMaxConeDimension)
    throw Error(ErrorKind::DimensionTooLarge,
                "cone uses " + std::to_string(d) + " coordinates (limit 16)");
}

std::vector<Vector> normalized_nonzero(std::span<const Vector> vs) {
  std::vector<Vector> out;
  for (const auto& v : vs)
    if (!v.is_zero()) out.push_back(unit(v));
  return out;
}

// Lawson-Hanson: min |G l - y| subject to l >= 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& G, const Eigen::VectorXd& y) {
  const Eigen::Index k = G.cols();
  Eigen::VectorXd lam = Eigen::VectorXd::Zero(k);
  std::vector<bool> passive(k, false);
  const double tol = 1e-13 * (1.0 + y.norm()) * (1.0 + G.norm());
  auto solve_passive = [&]() {
    std::vector<Eigen::Index> cols;
    for (Eigen::Index j = 0; j < k; ++j)
      if (passive[j]) cols.push_back(j);
    Eigen::MatrixXd Gp(G.rows(), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) Gp.col(c) = G.col(cols[c]);
    Eigen::VectorXd sp = Gp.colPivHouseholderQr().solve(y);
    Eigen::VectorXd s = Eigen::VectorXd::Zero(k);
    for (std::size_t c = 0; c < cols.size(); ++c) s[cols[c]] = sp[c];
    return s;
  };
  for (int outer = 0; outer < 3 * k + 10; ++outer) {
    Eigen::VectorXd w = G.transpose() * (y - G * lam);
    Eigen::Index best = -1;
    double wmax = tol;
    for (Eigen::Index j = 0; j < k; ++j)
      if (!passive[j] && w[j] > wmax) {
        wmax = w[j];
        best = j;
      }
    if (best < 0) break;
    passive[best] = true;
    for (int inner_it = 0; inner_it < 3 * k + 10; ++inner_it) {
      Eigen::VectorXd s = solve_passive();
      bool ok = true;
      for (Eigen::Index j = 0; j < k; ++j)
        if (passive[j] && s[j] <= 0) ok = false;
      if (ok) {
        lam = s;
        break;
      }
      double alpha = 1.0;
      for (Eigen::Index j = 0; j < k; ++j)
        if (passive[j] && s[j] <= 0) alpha = std::min(alpha, lam[j] / (lam[j] - s[j]));
      lam += alpha * (s - lam);
      for (Eigen::Index j = 0; j < k; ++j)
        if (passive[j] && lam[j] <= 1e-15) {
          passive[j] = false;
          lam[j] = 0.0;
        }
    }
  }
  return lam;
}

}  // namespace

Vector project_onto_conic_hull(std::span<const Vector> generators, const Vector& y) {
  auto idx = active_indices(generators);
  if (idx.empty()) return Vector{};
  check_dimension(idx.size());
  Eigen::MatrixXd G(idx.size(), generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j) G.col(j) = restrict(generators[j], idx);
  Eigen::VectorXd lam = nnls(G, restrict(y, idx));
  return lift(G * lam, idx);
}

FinCone FinCone::generated_by(std::vector<Vector> generators) {
  FinCone k;
  k.form_ = Form::Generators;
  for (auto& g : generators)
    if (!g.is_zero()) k.vectors_.push_back(std::move(g));
  return k;
}

FinCone FinCone::halfspaces(std::vector<Vector> normals, std::optional<std::size_t> ambient) {
  FinCone k;
  k.form_ = Form::Halfspaces;
  for (auto& n : normals)
    if (!n.is_zero()) k.vectors_.push_back(std::move(n));
  k.ambient_ = ambient;
  return k;
}

FinCone FinCone::whole_space(std::optional<std::size_t> ambient) { return halfspaces({}, ambient); }

FinCone FinCone::origin() { return generated_by({}); }

FinCone FinCone::angular(double lo, double hi) {
  double w = hi - lo;
  if (!(w > 0) || w > std::numbers::pi + 1e-15)
    throw Error(ErrorKind::UnsupportedSet, "angular cone wider than pi is not convex");
  auto e = [](double t) { return Vector::dense({std::cos(t), std::sin(t)}); };
  std::vector<Vector> g{e(lo), e(hi)};
  if (w > std::numbers::pi / 2) g.push_back(e(0.5 * (lo + hi)));
  FinCone k = generated_by(std::move(g));
  k.ambient_ = 2;
  return k;
}

FinCone FinCone::with_ambient(std::size_t d) const {
  FinCone k = *this;
  k.ambient_ = d;
  return k;
}

std::size_t FinCone::active_dimension() const { return active_indices(vectors_).size(); }

Vector FinCone::project(const Vector& x) const {
  if (form_ == Form::Generators) return project_onto_conic_hull(vectors_, x);
  return x - project_onto_conic_hull(vectors_, x);
}

double FinCone::distance(const Vector& x) const { return dist(x, project(x)); }

bool FinCone::contains(const Vector& x, double tol) const {
  if (form_ == Form::Halfspaces) {
    for (const auto& n : vectors_)
      if (inner(n, x) > tol * norm(n)) return false;
    return true;
  }
  return distance(x) <= tol * (1.0 + norm(x));
}

MoreauSplit moreau_split(const FinCone& k, const Vector& x) {
  Vector p = k.project(x);
  Vector q = x - p;
  Vector q_polar = polar(k).project(x);
  double scale = 1.0 + norm_squared(x);
  if (dist(q, q_polar) > 1e-10 * std::sqrt(scale) || std::abs(inner(p, q)) > 1e-10 * scale)
    throw Error(ErrorKind::Internal, "Moreau decomposition check failed");
  return {std::move(p), std::move(q)};
}

FinCone polar(const FinCone& k) {
  check_dimension(k.active_dimension());
  if (k.form() == FinCone::Form::Generators) return FinCone::halfspaces(k.vectors(), k.ambient());
  FinCone out = FinCone::generated_by(k.vectors());
  return k.ambient() ? out.with_ambient(*k.ambient()) : out;
}

bool is_pointed(const FinCone& k) {
  check_dimension(k.active_dimension());
  if (k.form() == FinCone::Form::Halfspaces) {
    // lineality space is the kernel of the normal matrix
    if (!k.ambient()) return false;
    std::size_t d = *k.ambient();
    if (k.vectors().empty()) return d == 0;
    Eigen::MatrixXd N(k.vectors().size(), d);
    for (std::size_t i = 0; i < k.vectors().size(); ++i)
      for (std::size_t j = 0; j < d; ++j) N(i, j) = k.vectors()[i][j];
    Eigen::FullPivLU<Eigen::MatrixXd> lu(N);
    lu.setThreshold(1e-12);
    return static_cast<std::size_t>(lu.rank()) == d;
  }
  auto g = normalized_nonzero(k.vectors());
  if (g.empty()) return true;
  auto idx = active_indices(g);
  // 0 in conv(g): sum l_i g_i = 0, sum l_i = 1, l >= 0
  std::vector<std::vector<double>> A(idx.size() + 1, std::vector<double>(g.size(), 0.0));
  std::vector<double> b(idx.size() + 1, 0.0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    for (std::size_t r = 0; r < idx.size(); ++r) A[r][j] = g[j][idx[r]];
    A[idx.size()][j] = 1.0;
  }
  b[idx.size()] = 1.0;
  return !lp::feasible(A, b);
}

double is_solid_dual(const FinCone& k, const Vector& u) {
  if (k.form() == FinCone::Form::Halfspaces)
    throw Error(ErrorKind::UnsupportedSet, "dual margin needs a generator form");
  double delta = std::numeric_limits<double>::infinity();
  for (const auto& g : normalized_nonzero(k.vectors())) delta = std::min(delta, inner(g, u));
  return delta;
}

std::optional<DualDirection> dual_interior_direction(const FinCone& k) {
  if (k.form() == FinCone::Form::Halfspaces)
    throw Error(ErrorKind::UnsupportedSet, "dual direction needs a generator form");
  auto g = normalized_nonzero(k.vectors());
  auto idx = active_indices(g);
  check_dimension(idx.size());
  if (g.empty()) return std::nullopt;
  const std::size_t d = idx.size(), m = g.size();
  // variables: u+ (d), u- (d), delta, slack per generator (m), bound slacks (2d), delta slack
  const std::size_t nvar = 2 * d + 1 + m + 2 * d + 1;
  std::vector<std::vector<double>> A;
  std::vector<double> b;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<double> row(nvar, 0.0);
    for (std::size_t r = 0; r < d; ++r) {
      row[r] = g[i][idx[r]];
      row[d + r] = -g[i][idx[r]];
    }
    row[2 * d] = -1.0;
    row[2 * d + 1 + i] = -1.0;
    A.push_back(row);
    b.push_back(0.0);
  }
  for (std::size_t r = 0; r < 2 * d; ++r) {
    std::vector<double> row(nvar, 0.0);
    row[r] = 1.0;
    row[2 * d + 1 + m + r] = 1.0;
    A.push_back(row);
    b.push_back(1.0);
  }
  std::vector<double> row(nvar, 0.0);
  row[2 * d] = 1.0;
  row[nvar - 1] = 1.0;
  A.push_back(row);
  b.push_back(1.0);
  std::vector<double> c(nvar, 0.0);
  c[2 * d] = 1.0;
  auto res = lp::maximize(A, b, c);
  if (res.status != lp::Status::Optimal || res.objective <= 1e-9) return std::nullopt;
  Eigen::VectorXd u(d);
  for (std::size_t r = 0; r < d; ++r) u[r] = res.x[r] - res.x[d + r];
  Vector uv = unit(lift(u, idx));
  double delta = is_solid_dual(k, uv);
  if (delta <= 0) return std::nullopt;
  return DualDirection{uv, delta};
}

std::vector<KreinRutmanRow> krein_rutman_truncation_demo(std::span<const std::size_t> dims) {
  std::vector<KreinRutmanRow> rows;
  std::size_t prev = 0;
  for (std::size_t d : dims) {
    if (d == 0 || d > 64 || d <= prev)
      throw Error(ErrorKind::InvalidInput, "dims must be increasing and within 1..64");
    prev = d;
    std::vector<Vector> gens;
    Vector avg;
    for (std::size_t i = 0; i < d; ++i) {
      gens.push_back(Vector::basis(i));
      avg = avg + Vector::basis(i, 1.0 / static_cast<double>(d));
    }
    FinCone k = FinCone::generated_by(gens);
    // the all-ones direction is a strictly positive functional on every generator
    Vector ones;
    for (std::size_t i = 0; i < d; ++i) ones = ones + Vector::basis(i);
    bool pointed = is_solid_dual(k, unit(ones)) > 0;
    rows.push_back({d, norm(avg), pointed});
  }
  return rows;
}

}  // namespace fejer
