#include "revsi/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace revsi::lp {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kReducedCostTol = 1e-9;
constexpr double kDegenerateStep = 1e-11;
constexpr int kStallLimit = 60;

enum class VarStatus { Basic, AtLower, AtUpper };

struct Tableau {
  // Columns: structural vars, then one slack per <= row, then artificials.
  int num_rows = 0;
  int num_cols = 0;
  std::vector<std::vector<double>> rows;  // num_rows x (num_cols + 1), last col = rhs
  std::vector<double> obj;                // reduced-cost row, size num_cols + 1
  std::vector<int> basis;                 // basic column per row
  std::vector<VarStatus> status;
  std::vector<double> lower, upper, cost;
  std::vector<double> x;  // current point, all columns
  long pivots = 0;
  int stall = 0;

  double rhs_of(int r) const { return rows[r][num_cols]; }

  void compute_basic_values() {
    for (int r = 0; r < num_rows; ++r) {
      double val = rows[r][num_cols];
      for (int j = 0; j < num_cols; ++j) {
        if (status[j] == VarStatus::Basic) continue;
        if (x[j] != 0.0) val -= rows[r][j] * x[j];
      }
      x[basis[r]] = val;
    }
  }

  void compute_objective_row() {
    for (int j = 0; j <= num_cols; ++j) obj[j] = (j < num_cols) ? cost[j] : 0.0;
    for (int r = 0; r < num_rows; ++r) {
      const double cb = cost[basis[r]];
      if (cb == 0.0) continue;
      for (int j = 0; j <= num_cols; ++j) obj[j] -= cb * rows[r][j];
    }
  }

  // Reduced cost of column j under the current basis.
  double reduced_cost(int j) const { return obj[j]; }

  bool pick_entering(bool bland, int& entering, int& direction) const {
    entering = -1;
    direction = 0;
    double best = kReducedCostTol;
    for (int j = 0; j < num_cols; ++j) {
      if (status[j] == VarStatus::Basic) continue;
      if (upper[j] - lower[j] <= 0.0) continue;  // fixed
      const double d = reduced_cost(j);
      if (status[j] == VarStatus::AtLower && d > kReducedCostTol) {
        if (bland) { entering = j; direction = +1; return true; }
        if (d > best) { best = d; entering = j; direction = +1; }
      } else if (status[j] == VarStatus::AtUpper && d < -kReducedCostTol) {
        if (bland) { entering = j; direction = -1; return true; }
        if (-d > best) { best = -d; entering = j; direction = -1; }
      }
    }
    return entering >= 0;
  }

  // Moves `entering` by up to its bound range in `direction`; returns false if
  // the step is blocked by a basic variable, in which case that row pivots.
  void step(int entering, int direction) {
    const double range = upper[entering] - lower[entering];
    double limit = range;
    int leave_row = -1;
    bool leave_at_upper = false;
    for (int r = 0; r < num_rows; ++r) {
      const double coef = direction * rows[r][entering];
      const int b = basis[r];
      if (coef > kPivotTol) {
        const double room = x[b] - lower[b];
        const double ratio = room / coef;
        if (ratio < limit - kDegenerateStep ||
            (ratio < limit + kDegenerateStep && (leave_row < 0 || b < basis[leave_row]))) {
          if (ratio < limit) limit = std::max(ratio, 0.0);
          leave_row = r;
          leave_at_upper = false;
        }
      } else if (coef < -kPivotTol) {
        const double room = upper[b] - x[b];
        const double ratio = room / (-coef);
        if (ratio < limit - kDegenerateStep ||
            (ratio < limit + kDegenerateStep && (leave_row < 0 || b < basis[leave_row]))) {
          if (ratio < limit) limit = std::max(ratio, 0.0);
          leave_row = r;
          leave_at_upper = true;
        }
      }
    }
    if (limit >= range - kDegenerateStep && leave_row < 0) {
      // Bound flip, basis unchanged.
      x[entering] = (direction > 0) ? upper[entering] : lower[entering];
      status[entering] = (direction > 0) ? VarStatus::AtUpper : VarStatus::AtLower;
      compute_basic_values();
      stall = 0;
      return;
    }
    if (leave_row < 0)
      throw std::runtime_error("lp_solve: unbounded direction despite finite bounds");

    stall = (limit <= kDegenerateStep) ? stall + 1 : 0;

    const int leaving = basis[leave_row];
    // Pivot on (leave_row, entering).
    const double piv = rows[leave_row][entering];
    auto& prow = rows[leave_row];
    const double inv = 1.0 / piv;
    for (double& a : prow) a *= inv;
    for (int r = 0; r < num_rows; ++r) {
      if (r == leave_row) continue;
      const double f = rows[r][entering];
      if (f == 0.0) continue;
      auto& row = rows[r];
      for (int j = 0; j <= num_cols; ++j) row[j] -= f * prow[j];
      row[entering] = 0.0;
    }
    {
      const double f = obj[entering];
      if (f != 0.0) {
        for (int j = 0; j <= num_cols; ++j) obj[j] -= f * prow[j];
        obj[entering] = 0.0;
      }
    }
    basis[leave_row] = entering;
    status[entering] = VarStatus::Basic;
    status[leaving] = leave_at_upper ? VarStatus::AtUpper : VarStatus::AtLower;
    x[leaving] = leave_at_upper ? upper[leaving] : lower[leaving];
    compute_basic_values();
    ++pivots;
  }

  // Returns false on iteration limit.
  bool optimize(long max_iters) {
    stall = 0;
    while (pivots < max_iters) {
      int entering, direction;
      const bool bland = stall >= kStallLimit;
      if (!pick_entering(bland, entering, direction)) return true;
      step(entering, direction);
    }
    return false;
  }
};

}  // namespace

int LinearProgram::add_var(double lo, double up, double obj) {
  lower.push_back(lo);
  upper.push_back(up);
  objective.push_back(obj);
  return num_vars() - 1;
}

void LinearProgram::add_row(std::vector<std::pair<int, double>> coeffs, RowSense sense,
                            double rhs) {
  rows.push_back(LpRow{std::move(coeffs), sense, rhs});
}

LpResult lp_solve(const LinearProgram& prog) {
  const int n = prog.num_vars();
  const int m = static_cast<int>(prog.rows.size());
  for (int j = 0; j < n; ++j) {
    if (!std::isfinite(prog.lower[j]) || !std::isfinite(prog.upper[j]))
      throw std::invalid_argument("lp_solve: all variable bounds must be finite");
    if (prog.lower[j] > prog.upper[j] + 1e-12) {
      LpResult res;
      res.status = LpStatus::Infeasible;
      return res;
    }
  }

  // Column layout: structural | slack per <= row | artificial per row (lazy).
  std::vector<int> slack_col(m, -1), art_col(m, -1);
  int ncols = n;
  for (int r = 0; r < m; ++r)
    if (prog.rows[r].sense == RowSense::LessEqual) slack_col[r] = ncols++;

  // Dense row storage and slack bounds from interval activity.
  std::vector<std::vector<double>> dense(m, std::vector<double>(n, 0.0));
  std::vector<double> slack_up(m, 0.0);
  for (int r = 0; r < m; ++r) {
    double min_act = 0.0;
    for (const auto& [j, a] : prog.rows[r].coeffs) {
      dense[r][j] += a;
    }
    for (int j = 0; j < n; ++j) {
      const double a = dense[r][j];
      if (a > 0) min_act += a * prog.lower[j];
      else if (a < 0) min_act += a * prog.upper[j];
    }
    slack_up[r] = std::max(0.0, prog.rows[r].rhs - min_act) + 1.0;
  }

  Tableau tab;
  tab.num_rows = m;

  // Initial point: structural vars at the bound with the smaller magnitude
  // would be fine too; lower bounds keep the setup simple and deterministic.
  std::vector<double> x0(n);
  for (int j = 0; j < n; ++j) x0[j] = prog.lower[j];

  std::vector<double> residual(m);
  int nart = 0;
  for (int r = 0; r < m; ++r) {
    double act = 0.0;
    for (int j = 0; j < n; ++j) act += dense[r][j] * x0[j];
    residual[r] = prog.rows[r].rhs - act;
    const bool need_art =
        (prog.rows[r].sense == RowSense::Equal) || (residual[r] < 0.0);
    if (need_art) art_col[r] = ncols + nart++;
  }
  const int total_cols = ncols + nart;

  tab.num_cols = total_cols;
  tab.rows.assign(m, std::vector<double>(total_cols + 1, 0.0));
  tab.obj.assign(total_cols + 1, 0.0);
  tab.lower.assign(total_cols, 0.0);
  tab.upper.assign(total_cols, 0.0);
  tab.cost.assign(total_cols, 0.0);
  tab.status.assign(total_cols, VarStatus::AtLower);
  tab.x.assign(total_cols, 0.0);
  tab.basis.assign(m, -1);

  for (int j = 0; j < n; ++j) {
    tab.lower[j] = prog.lower[j];
    tab.upper[j] = prog.upper[j];
    tab.status[j] = VarStatus::AtLower;
    tab.x[j] = x0[j];
  }
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < n; ++j) tab.rows[r][j] = dense[r][j];
    tab.rows[r][total_cols] = prog.rows[r].rhs;
    if (slack_col[r] >= 0) {
      tab.rows[r][slack_col[r]] = 1.0;
      tab.lower[slack_col[r]] = 0.0;
      tab.upper[slack_col[r]] = slack_up[r];
    }
    if (art_col[r] >= 0) {
      const double sign = (residual[r] >= 0.0) ? 1.0 : -1.0;
      tab.rows[r][art_col[r]] = sign;
      tab.lower[art_col[r]] = 0.0;
      tab.upper[art_col[r]] = std::abs(residual[r]) + 1.0;
      tab.basis[r] = art_col[r];
      tab.status[art_col[r]] = VarStatus::Basic;
    } else {
      tab.basis[r] = slack_col[r];
      tab.status[slack_col[r]] = VarStatus::Basic;
    }
  }
  tab.compute_basic_values();

  LpResult res;
  const long max_iters = 2000 + 60L * (m + total_cols);

  // Phase 1: drive artificials to zero.
  if (nart > 0) {
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) tab.cost[art_col[r]] = -1.0;
    tab.compute_objective_row();
    if (!tab.optimize(max_iters)) {
      res.status = LpStatus::IterLimit;
      res.iterations = tab.pivots;
      return res;
    }
    double art_sum = 0.0;
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) art_sum += tab.x[art_col[r]];
    if (art_sum > 1e-7) {
      res.status = LpStatus::Infeasible;
      res.iterations = tab.pivots;
      return res;
    }
    // Pivot remaining artificials out where possible, then pin them at zero.
    for (int r = 0; r < m; ++r) {
      const int b = tab.basis[r];
      if (b < ncols) continue;
      int col = -1;
      for (int j = 0; j < ncols; ++j) {
        if (tab.status[j] == VarStatus::Basic) continue;
        if (std::abs(tab.rows[r][j]) > 1e-7) { col = j; break; }
      }
      if (col >= 0) {
        const double piv = tab.rows[r][col];
        auto& prow = tab.rows[r];
        const double inv = 1.0 / piv;
        for (double& a : prow) a *= inv;
        for (int rr = 0; rr < m; ++rr) {
          if (rr == r) continue;
          const double f = tab.rows[rr][col];
          if (f == 0.0) continue;
          for (int j = 0; j <= total_cols; ++j) tab.rows[rr][j] -= f * prow[j];
          tab.rows[rr][col] = 0.0;
        }
        tab.basis[r] = col;
        tab.status[col] = VarStatus::Basic;
        tab.status[b] = VarStatus::AtLower;
        tab.x[b] = 0.0;
      }
    }
    for (int r = 0; r < m; ++r)
      if (art_col[r] >= 0) {
        tab.upper[art_col[r]] = 0.0;
        tab.cost[art_col[r]] = 0.0;
      }
    tab.compute_basic_values();
  }

  // Phase 2.
  for (int j = 0; j < n; ++j) tab.cost[j] = prog.objective[j];
  for (int r = 0; r < m; ++r)
    if (slack_col[r] >= 0) tab.cost[slack_col[r]] = 0.0;
  tab.compute_objective_row();
  const bool finished = tab.optimize(max_iters);

  res.iterations = tab.pivots;
  res.x.assign(tab.x.begin(), tab.x.begin() + n);
  res.value = 0.0;
  for (int j = 0; j < n; ++j) res.value += prog.objective[j] * res.x[j];

  // Row duals from the reduced costs of the unit columns introduced per row.
  res.row_duals.assign(m, 0.0);
  for (int r = 0; r < m; ++r) {
    if (slack_col[r] >= 0) {
      res.row_duals[r] = -tab.reduced_cost(slack_col[r]);
    } else if (art_col[r] >= 0) {
      const double sign = tab.rows[r][art_col[r]];  // destroyed by pivots; recompute below
      (void)sign;
      res.row_duals[r] = 0.0;  // filled from the objective row next
    }
  }
  // For equality rows the artificial entered with coefficient +-1; its reduced
  // cost is -sign * y_r.
  for (int r = 0; r < m; ++r) {
    if (slack_col[r] < 0 && art_col[r] >= 0) {
      const double sign = (residual[r] >= 0.0) ? 1.0 : -1.0;
      res.row_duals[r] = -sign * tab.reduced_cost(art_col[r]);
    }
  }

  // Bounded-variable dual objective: y'b + sum_j max(d_j l_j, d_j u_j) with
  // d_j the reduced cost; at optimum this matches the primal value up to
  // roundoff and provides the certificate gap.
  {
    double dual = 0.0;
    for (int r = 0; r < m; ++r) dual += res.row_duals[r] * prog.rows[r].rhs;
    for (int j = 0; j < n; ++j) {
      double d = prog.objective[j];
      for (int r = 0; r < m; ++r) {
        if (res.row_duals[r] == 0.0) continue;
        d -= res.row_duals[r] * dense[r][j];
      }
      dual += (d > 0.0) ? d * prog.upper[j] : d * prog.lower[j];
    }
    // Slack columns contribute only when their dual sign is off; with
    // y_r >= 0 on <= rows the term is zero, so fold any violation in.
    for (int r = 0; r < m; ++r) {
      if (slack_col[r] >= 0 && res.row_duals[r] < 0.0)
        dual += -res.row_duals[r] * slack_up[r];
    }
    res.dual_value = dual;
  }

  res.status = finished ? LpStatus::Optimal : LpStatus::IterLimit;
  return res;
}

}  // namespace revsi::lp
