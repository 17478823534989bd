#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fejerlab/config.hpp"
#include "fejerlab/hilbert.hpp"

namespace testing {

inline std::mt19937_64 rng(std::uint64_t salt = 0) {
  return std::mt19937_64(fejer::config().seed ^ (salt * 0x9E3779B97F4A7C15ull));
}

inline std::vector<double> gauss(std::mt19937_64& g, std::size_t d, double s = 1.0) {
  std::normal_distribution<double> n(0.0, s);
  std::vector<double> v(d);
  for (auto& x : v) x = n(g);
  return v;
}

inline fejer::Vector rand_vec(std::mt19937_64& g, std::size_t d, double s = 1.0) {
  auto v = gauss(g, d, s);
  return fejer::Vector::dense(std::span<const double>(v));
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(g);
}

// Plain-array oracles, independent of the Vector implementation.
inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline std::vector<double> dense(const fejer::Vector& v, std::size_t d) { return v.dense_prefix(d); }

inline fejer::Vector p2(double a, double b) { return fejer::Vector::dense({a, b}); }
inline fejer::Vector e(std::size_t i, double v = 1.0) { return fejer::Vector::basis(i, v); }

}  // namespace testing
