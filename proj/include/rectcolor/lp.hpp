#pragma once

#include <span>
#include <vector>

namespace rectcolor {

/// maximize c.x  s.t.  A x <= b, x >= 0, with b >= 0 (the origin is feasible).
struct PackingLp {
  std::vector<std::vector<double>> rows;  // A, one dense row per constraint
  std::vector<double> rhs;                // b
  std::vector<double> objective;          // c
};

struct LpResult {
  std::vector<double> x;
  std::vector<double> duals;  // one per row, >= 0
  double objective = 0.0;
  /// Upper bound on the optimum from the (scaled) dual vector.
  double dual_bound = 0.0;
  long pivots = 0;
};

/// Primal simplex on the dictionary (rows x structural columns), Bland's rule.
/// Throws SolverFailure when the pivot budget runs out or the result fails
/// its own primal/dual checks at `tolerance`.
LpResult solve_packing_lp(const PackingLp& lp, double tolerance = 1e-9, long max_pivots = -1);

}  // namespace rectcolor
