#include <doctest.h>

#include <cmath>
#include <limits>

#include "fejerlab/config.hpp"
#include "fejerlab/error.hpp"
#include "fejerlab/hilbert.hpp"
#include "fejerlab/simplex.hpp"
#include "support.hpp"

using namespace fejer;
using testing::e;

TEST_CASE("vector construction normalizes entries") {
  Vector v = Vector::from_entries({{3, 1.0}, {0, 2.0}, {3, -1.0}, {5, 0.0}, {1, 4.0}, {1, 1.0}});
  REQUIRE(v.support_size() == 2);
  CHECK(v[0] == 2.0);
  CHECK(v[1] == 5.0);
  CHECK(v[3] == 0.0);
  CHECK(v.support_end() == 2);
  CHECK(Vector::dense({0.0, 0.0}).is_zero());
  CHECK(Vector::basis(7, 0.0).is_zero());
  CHECK(Vector::dense({1.0, 0.0, 3.0}) == Vector::from_entries({{2, 3.0}, {0, 1.0}}));
}

TEST_CASE("arithmetic agrees with dense arrays") {
  auto g = testing::rng(1);
  for (int t = 0; t < 200; ++t) {
    std::size_t d = 1 + t % 9;
    auto a = testing::gauss(g, d), b = testing::gauss(g, d);
    Vector u = Vector::dense(std::span<const double>(a)), v = Vector::dense(std::span<const double>(b));
    CHECK(inner(u, v) == doctest::Approx(testing::dot(a, b)).epsilon(1e-12));
    CHECK(norm(u) == doctest::Approx(std::sqrt(testing::dot(a, a))).epsilon(1e-12));
    auto s = testing::dense(u + 2.0 * v, d);
    auto w = testing::dense(u - v, d);
    for (std::size_t i = 0; i < d; ++i) {
      CHECK(s[i] == doctest::Approx(a[i] + 2.0 * b[i]));
      CHECK(w[i] == doctest::Approx(a[i] - b[i]));
    }
    CHECK(dist(u, v) == doctest::Approx(norm(u - v)));
  }
}

TEST_CASE("norm does not overflow or underflow") {
  CHECK(norm(Vector::dense({1e200, 1e200})) == doctest::Approx(std::sqrt(2.0) * 1e200));
  CHECK(norm(Vector::dense({1e-200, 1e-200})) == doctest::Approx(std::sqrt(2.0) * 1e-200));
}

TEST_CASE("unit vector of zero throws") {
  CHECK_THROWS_AS(unit(Vector{}), Error);
  try {
    unit(Vector{});
  } catch (const Error& ex) {
    CHECK(ex.kind() == ErrorKind::ZeroVector);
  }
  CHECK(norm(unit(Vector::dense({3, 4}))) == doctest::Approx(1.0));
}

TEST_CASE("sparse vectors with far indices") {
  Vector a = e(0) + e(1000000);
  CHECK(norm_squared(a) == 2.0);
  CHECK(inner(a, e(1000000, 3.0)) == 3.0);
  CHECK(a.truncated(10) == e(0));
}

TEST_CASE("json round trip") {
  Vector v = Vector::from_entries({{0, 0.1}, {4, -1.0 / 3.0}, {9, 1e-300}});
  auto j = to_json(v);
  CHECK(vector_from_json(nlohmann::json::parse(j.dump())) == v);
  CHECK(vector_from_json(nlohmann::json::parse("[1, 0, 2]")) == Vector::dense({1, 0, 2}));
}

TEST_CASE("csv row and real formatting") {
  CHECK(csv_row(Vector::dense({1, 0.5}), 3) == "1,0.5,0");
  double x = 0.1 + 0.2;
  CHECK(std::stod(format_real(x)) == x);
}

TEST_CASE("config parsing") {
  Config c = parse_config("# comment\nhorizon = 77\ncluster_eps=0.1  # trailing\n\nseed = 5\n");
  CHECK(c.horizon == 77);
  CHECK(c.cluster_eps == 0.1);
  CHECK(c.seed == 5);
  CHECK(c.opial_window == 32);
  CHECK_THROWS_AS(parse_config("no_such_key = 1\n"), Error);
  CHECK_THROWS_AS(parse_config("horizon\n"), Error);
  CHECK_THROWS_AS(parse_config("horizon = abc\n"), Error);
}

namespace {

// Brute-force oracle: enumerate basic solutions of Ax = b, x >= 0.
double brute_max(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                 const std::vector<double>& c, bool& feasible) {
  std::size_t m = A.size(), n = c.size();
  double best = -std::numeric_limits<double>::infinity();
  feasible = false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1u << j)) cols.push_back(j);
    if (cols.size() != m) continue;
    std::vector<std::vector<double>> M(m, std::vector<double>(m + 1));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) M[i][k] = A[i][cols[k]];
      M[i][m] = b[i];
    }
    bool singular = false;
    for (std::size_t k = 0; k < m && !singular; ++k) {
      std::size_t p = k;
      for (std::size_t i = k + 1; i < m; ++i)
        if (std::abs(M[i][k]) > std::abs(M[p][k])) p = i;
      if (std::abs(M[p][k]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(M[k], M[p]);
      for (std::size_t i = 0; i < m; ++i)
        if (i != k) {
          double f = M[i][k] / M[k][k];
          for (std::size_t c2 = k; c2 <= m; ++c2) M[i][c2] -= f * M[k][c2];
        }
    }
    if (singular) continue;
    std::vector<double> x(n, 0.0);
    bool ok = true;
    for (std::size_t k = 0; k < m; ++k) {
      x[cols[k]] = M[k][m] / M[k][k];
      if (x[cols[k]] < -1e-9) ok = false;
    }
    if (!ok) continue;
    feasible = true;
    best = std::max(best, testing::dot(c, x));
  }
  return best;
}

}  // namespace

TEST_CASE("simplex matches vertex enumeration on bounded random LPs") {
  auto g = testing::rng(2);
  for (int t = 0; t < 200; ++t) {
    std::size_t m = 1 + t % 3, n = m + 2 + t % 3;
    std::vector<std::vector<double>> A(m, std::vector<double>(n));
    std::vector<double> b(m), c(n);
    // a positive row keeps the feasible set bounded
    for (std::size_t j = 0; j < n; ++j) A[0][j] = testing::uniform(g, 0.5, 2.0);
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) A[i][j] = testing::uniform(g, -1.0, 1.0);
    for (std::size_t i = 0; i < m; ++i) b[i] = testing::uniform(g, i == 0 ? 0.5 : -0.3, 1.0);
    for (auto& x : c) x = testing::uniform(g, -1.0, 1.0);
    bool feas = false;
    double want = brute_max(A, b, c, feas);
    auto r = lp::maximize(A, b, c);
    if (!feas) {
      CHECK(r.status == lp::Status::Infeasible);
      continue;
    }
    REQUIRE(r.status == lp::Status::Optimal);
    CHECK(r.objective == doctest::Approx(want).epsilon(1e-7));
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += A[i][j] * r.x[j];
      CHECK(s == doctest::Approx(b[i]).epsilon(1e-7));
    }
    for (double x : r.x) CHECK(x >= -1e-9);
  }
}

TEST_CASE("simplex reports unbounded and infeasible problems") {
  auto r = lp::maximize({{1.0, -1.0}}, {0.0}, {1.0, 0.0});
  CHECK(r.status == lp::Status::Unbounded);
  CHECK_FALSE(lp::feasible({{1.0, 1.0}}, {-1.0}));
  CHECK(lp::feasible({{1.0, 1.0}}, {1.0}));
}
