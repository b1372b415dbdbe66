#pragma once

#include <utility>
#include <vector>

namespace revsi::lp {

enum class RowSense { LessEqual, Equal };

struct LpRow {
  std::vector<std::pair<int, double>> coeffs;  // (variable index, coefficient)
  RowSense sense = RowSense::LessEqual;
  double rhs = 0.0;
};

/// maximize c'x  s.t.  rows,  lower <= x <= upper.
/// All variable bounds must be finite; unboundedness is therefore impossible
/// and is reported as an internal error if detected.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<LpRow> rows;

  int num_vars() const { return static_cast<int>(objective.size()); }
  int add_var(double lo, double up, double obj = 0.0);
  void add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense, double rhs);
};

enum class LpStatus { Optimal, Infeasible, IterLimit };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  double value = 0.0;
  std::vector<double> x;
  std::vector<double> row_duals;  // one per row; >= 0 for <= rows at optimum
  double dual_value = 0.0;        // bounded-variable dual objective at the returned duals
  long iterations = 0;
};

/// Dense-tableau bounded-variable primal simplex, two phases.
/// Entering rule is Dantzig with Bland's least-index fallback after a run of
/// degenerate pivots; all ties break on the smallest index, so the solve is
/// deterministic.
LpResult lp_solve(const LinearProgram& prog);

}  // namespace revsi::lp
