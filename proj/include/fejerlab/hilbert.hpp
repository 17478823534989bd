#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace fejer {

// Finite-support real vector over the index set {0, 1, 2, ...}.
// Entries are sorted by index and never store an exact zero.
class Vector {
 public:
  struct Entry {
    std::size_t index;
    double value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Vector() = default;

  // Entries may be unsorted; duplicates are summed and zeros dropped.
  static Vector from_entries(std::vector<Entry> entries);
  static Vector dense(std::initializer_list<double> values);
  static Vector dense(std::span<const double> values);
  static Vector basis(std::size_t index, double value = 1.0);

  double operator[](std::size_t index) const;
  std::span<const Entry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  // One past the largest stored index; 0 for the zero vector.
  std::size_t support_end() const;
  bool is_zero() const { return entries_.empty(); }
  std::vector<double> dense_prefix(std::size_t width) const;
  // Keeps only coordinates with index < width.
  Vector truncated(std::size_t width) const;

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  std::vector<Entry> entries_;
};

double inner(const Vector& u, const Vector& v);
double norm_squared(const Vector& v);
double norm(const Vector& v);
double dist(const Vector& u, const Vector& v);
// alpha*u + beta*v
Vector scale_add(double alpha, const Vector& u, double beta, const Vector& v);
// Throws Error(ZeroVector) for the zero vector.
Vector unit(const Vector& v);

Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator-(const Vector& v);
Vector operator*(double a, const Vector& v);
Vector operator/(const Vector& v, double a);

nlohmann::ordered_json to_json(const Vector& v);
// Accepts {"idx":[...],"val":[...]} or a plain dense array.
Vector vector_from_json(const nlohmann::json& j);
// Dense prefix of the given width, comma separated, full round-trip precision.
std::string csv_row(const Vector& v, std::size_t width);
std::string format_real(double x);
std::string to_string(const Vector& v);

}  // namespace fejer
