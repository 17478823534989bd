#include "fejerlab/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "fejerlab/error.hpp"

namespace fejer {

Vector Vector::from_entries(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  Vector v;
  for (const auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      v.entries_.push_back(e);
    }
  }
  std::erase_if(v.entries_, [](const Entry& e) { return e.value == 0.0; });
  return v;
}

Vector Vector::dense(std::initializer_list<double> values) {
  return dense(std::span<const double>(values.begin(), values.size()));
}

Vector Vector::dense(std::span<const double> values) {
  Vector v;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0.0) v.entries_.push_back({i, values[i]});
  return v;
}

Vector Vector::basis(std::size_t index, double value) {
  Vector v;
  if (value != 0.0) v.entries_.push_back({index, value});
  return v;
}

double Vector::operator[](std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return 0.0;
}

std::size_t Vector::support_end() const {
  return entries_.empty() ? 0 : entries_.back().index + 1;
}

std::vector<double> Vector::dense_prefix(std::size_t width) const {
  std::vector<double> out(width, 0.0);
  for (const auto& e : entries_)
    if (e.index < width) out[e.index] = e.value;
  return out;
}

Vector Vector::truncated(std::size_t width) const {
  Vector v;
  for (const auto& e : entries_)
    if (e.index < width) v.entries_.push_back(e);
  return v;
}

double inner(const Vector& u, const Vector& v) {
  auto a = u.entries();
  auto b = v.entries();
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].index < b[j].index) ++i;
    else if (b[j].index < a[i].index) ++j;
    else s += a[i++].value * b[j++].value;
  }
  return s;
}

double norm_squared(const Vector& v) {
  double s = 0.0;
  for (const auto& e : v.entries()) s += e.value * e.value;
  return s;
}

double norm(const Vector& v) {
  double scale = 0.0;
  for (const auto& e : v.entries()) scale = std::max(scale, std::abs(e.value));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& e : v.entries()) {
    double r = e.value / scale;
    s += r * r;
  }
  return scale * std::sqrt(s);
}

double dist(const Vector& u, const Vector& v) { return norm(u - v); }

Vector scale_add(double alpha, const Vector& u, double beta, const Vector& v) {
  auto a = u.entries();
  auto b = v.entries();
  std::vector<Vector::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      out.push_back({a[i].index, alpha * a[i].value});
      ++i;
    } else if (i == a.size() || b[j].index < a[i].index) {
      out.push_back({b[j].index, beta * b[j].value});
      ++j;
    } else {
      out.push_back({a[i].index, alpha * a[i].value + beta * b[j].value});
      ++i;
      ++j;
    }
  }
  return Vector::from_entries(std::move(out));
}

Vector unit(const Vector& v) {
  double n = norm(v);
  if (n == 0.0) throw Error(ErrorKind::ZeroVector, "unit() of the zero vector");
  return v / n;
}

Vector operator+(const Vector& u, const Vector& v) { return scale_add(1.0, u, 1.0, v); }
Vector operator-(const Vector& u, const Vector& v) { return scale_add(1.0, u, -1.0, v); }
Vector operator-(const Vector& v) { return scale_add(-1.0, v, 0.0, Vector{}); }
Vector operator*(double a, const Vector& v) { return scale_add(a, v, 0.0, Vector{}); }

Vector operator/(const Vector& v, double a) {
  std::vector<Vector::Entry> out;
  for (const auto& e : v.entries()) out.push_back({e.index, e.value / a});
  return Vector::from_entries(std::move(out));
}

nlohmann::ordered_json to_json(const Vector& v) {
  nlohmann::ordered_json j;
  j["idx"] = nlohmann::ordered_json::array();
  j["val"] = nlohmann::ordered_json::array();
  for (const auto& e : v.entries()) {
    j["idx"].push_back(e.index);
    j["val"].push_back(e.value);
  }
  return j;
}

Vector vector_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    std::vector<double> vals;
    for (const auto& x : j) vals.push_back(x.get<double>());
    return Vector::dense(vals);
  }
  if (!j.is_object() || !j.contains("idx") || !j.contains("val"))
    throw Error(ErrorKind::InvalidInput, "vector JSON needs idx and val arrays");
  const auto& idx = j.at("idx");
  const auto& val = j.at("val");
  if (idx.size() != val.size()) throw Error(ErrorKind::InvalidInput, "idx/val length mismatch");
  std::vector<Vector::Entry> entries;
  for (std::size_t k = 0; k < idx.size(); ++k)
    entries.push_back({idx[k].get<std::size_t>(), val[k].get<double>()});
  return Vector::from_entries(std::move(entries));
}

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string csv_row(const Vector& v, std::size_t width) {
  std::string out;
  auto d = v.dense_prefix(width);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) out += ',';
    out += format_real(d[i]);
  }
  return out;
}

std::string to_string(const Vector& v) {
  std::string out = "{";
  bool first = true;
  for (const auto& e : v.entries()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(e.index) + ":" + format_real(e.value);
  }
  return out + "}";
}

}  // namespace fejer
