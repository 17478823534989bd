#pragma once

#include <vector>

namespace fejer::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Result {
  Status status = Status::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
};

// maximize c.x  subject to  A x = b, x >= 0.
// Dense two-phase tableau simplex with Bland's rule; feasibility slack 1e-9.
Result maximize(const std::vector<std::vector<double>>& A, const std::vector<double>& b,
                const std::vector<double>& c);

// Is {x >= 0 : A x = b} nonempty?
bool feasible(const std::vector<std::vector<double>>& A, const std::vector<double>& b);

}  // namespace fejer::lp
