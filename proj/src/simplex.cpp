#include "fejerlab/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "fejerlab/error.hpp"

namespace fejer::lp {

namespace {

constexpr double kSlack = 1e-9;

struct Tableau {
  std::size_t m, n;  // rows, structural+artificial columns
  std::vector<std::vector<double>> t;  // m rows of n+1 (last = rhs)
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    double p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double f = t[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Maximizes obj over columns allowed[j]; returns false if unbounded.
  bool run(const std::vector<double>& obj, const std::vector<bool>& allowed) {
    for (std::size_t iter = 0; iter < 100000; ++iter) {
      // reduced costs: obj_j - sum_i obj_{basis_i} t[i][j]
      std::size_t enter = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (!allowed[j]) continue;
        double rc = obj[j];
        for (std::size_t i = 0; i < m; ++i) rc -= obj[basis[i]] * t[i][j];
        if (rc > kSlack) {
          enter = j;
          break;
        }
      }
      if (enter == n) return true;
      std::size_t leave = m;
      double best = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] > kSlack) {
          double ratio = t[i][n] / t[i][enter];
          if (ratio < best - 1e-15 ||
              (std::abs(ratio - best) <= 1e-15 && leave < m && basis[i] < basis[leave])) {
            best = ratio;
            leave = i;
          }
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
    throw Error(ErrorKind::Internal, "simplex iteration limit");
  }
};

}  // namespace

Result maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                const std::vector<double>& c) {
  const std::size_t m = A.size();
  const std::size_t nx = c.size();
  Tableau tab;
  tab.m = m;
  tab.n = nx + m;
  tab.t.assign(m, std::vector<double>(tab.n + 1, 0.0));
  tab.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    double sign = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < nx; ++j) tab.t[i][j] = sign * A[i][j];
    tab.t[i][nx + i] = 1.0;
    tab.t[i][tab.n] = sign * b[i];
    tab.basis[i] = nx + i;
  }
  // phase 1: maximize -sum(artificials)
  std::vector<double> obj1(tab.n, 0.0);
  for (std::size_t i = 0; i < m; ++i) obj1[nx + i] = -1.0;
  std::vector<bool> all(tab.n, true);
  tab.run(obj1, all);
  double infeas = 0.0;
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] >= nx) infeas += tab.t[i][tab.n];
  Result res;
  if (infeas > kSlack) {
    res.status = Status::Infeasible;
    return res;
  }
  // drive remaining artificials out of the basis where possible
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < nx) continue;
    for (std::size_t j = 0; j < nx; ++j) {
      if (std::abs(tab.t[i][j]) > kSlack) {
        tab.pivot(i, j);
        break;
      }
    }
  }
  std::vector<double> obj2(tab.n, 0.0);
  for (std::size_t j = 0; j < nx; ++j) obj2[j] = c[j];
  std::vector<bool> structural(tab.n, false);
  for (std::size_t j = 0; j < nx; ++j) structural[j] = true;
  if (!tab.run(obj2, structural)) {
    res.status = Status::Unbounded;
    return res;
  }
  res.status = Status::Optimal;
  res.x.assign(nx, 0.0);
  for (std::size_t i = 0; i < m; ++i)
    if (tab.basis[i] < nx) res.x[tab.basis[i]] = tab.t[i][tab.n];
  for (std::size_t j = 0; j < nx; ++j) res.objective += c[j] * res.x[j];
  return res;
}

bool feasible(const std::vector<std::vector<double>>& A, const std::vector<double>& b) {
  std::size_t nx = A.empty() ? 0 : A[0].size();
  return maximize(A, b, std::vector<double>(nx, 0.0)).status != Status::Infeasible;
}

}  // namespace fejer::lp
