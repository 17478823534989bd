#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fejerlab/hilbert.hpp"
#include "fejerlab/region.hpp"
#include "fejerlab/sequence.hpp"

namespace fejer {

// C(x, x+) = {y : |x+ - y| <= |x - y|}.
class StepHalfspace {
 public:
  static StepHalfspace between(const Vector& x, const Vector& x_next);

  bool is_all_space() const { return all_space_; }
  const Vector& normal() const { return normal_; }     // x+ - x
  double offset() const { return offset_; }            // (|x+|^2 - |x|^2) / 2
  const Vector& midpoint() const { return midpoint_; } // (x + x+) / 2
  // <y - m, normal> / |normal|; +inf for all space.
  double signed_distance(const Vector& y) const;
  // Closed membership with slack zero_tol * (1 + |y|).
  bool contains(const Vector& y) const;
  Region to_region() const;

 private:
  bool all_space_ = true;
  Vector normal_;
  double offset_ = 0.0;
  Vector midpoint_;
};

StepHalfspace step_halfspace(const Vector& x, const Vector& x_next);
// C_0 .. C_{horizon-1}
std::vector<StepHalfspace> step_table(const Sequence& seq, std::size_t horizon);

struct InTail {
  std::size_t N;
  bool certified;  // tail beyond the horizon confirmed by a certificate
};
struct Excluded {
  std::vector<std::size_t> violations;
  bool certified;
};
struct Inconclusive {
  std::size_t horizon;
};
using LiminfVerdict = std::variant<InTail, Excluded, Inconclusive>;

enum class TailClaim { EventuallyIn, InfinitelyOftenOut, Unknown };
using TailCertificate = std::function<TailClaim(const Vector&)>;

LiminfVerdict liminf_membership(const Sequence& seq, const Vector& y, std::size_t horizon,
                                const TailCertificate* cert = nullptr);
LiminfVerdict liminf_membership(const std::vector<StepHalfspace>& steps, const Vector& y,
                                const TailCertificate* cert = nullptr);

bool is_in_tail(const LiminfVerdict& v);
bool is_excluded(const LiminfVerdict& v);
nlohmann::ordered_json to_json(const LiminfVerdict& v);

// Intersection of C_n for n in [first, horizon); throws DegenerateStep on repeated terms.
Region maximal_set_2d(const Sequence& seq, std::size_t first, std::size_t horizon);

struct GridSpec {
  std::size_t points = 41;  // per axis
  double lo = -2.0;
  double hi = 2.0;
  double coord(std::size_t i) const;
};

struct GridCell {
  double x, y;
  Cell status;
};

std::vector<GridCell> grid_snapshot(const Region& r, const GridSpec& grid, double band);
std::string grid_csv(const std::vector<GridCell>& cells);

}  // namespace fejer
