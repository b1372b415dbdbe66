#include "revsi/model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace revsi::model {

namespace {

constexpr double kFeasTol = 1e-9;

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double CityInstance::total_fleet() const {
  return std::accumulate(x0.begin(), x0.end(), 0.0);
}

double CityInstance::max_price() const {
  return *std::max_element(p_max.begin(), p_max.end());
}

void CityInstance::validate() const {
  require(n >= 2, "CityInstance: need at least 2 zones");
  require(static_cast<int>(alpha.size()) == n, "CityInstance: alpha must be n x n");
  for (int i = 0; i < n; ++i) {
    require(static_cast<int>(alpha[i].size()) == n, "CityInstance: alpha must be n x n");
    require(alpha[i][i] == 0.0, "CityInstance: alpha diagonal must be zero");
    for (int j = 0; j < n; ++j)
      require(alpha[i][j] >= 0.0, "CityInstance: alpha must be nonnegative");
  }
  require(static_cast<int>(p_min.size()) == n && static_cast<int>(p_max.size()) == n,
          "CityInstance: price bound vectors must have length n");
  for (int i = 0; i < n; ++i) {
    require(p_min[i] > 0.0 && p_min[i] < p_max[i],
            "CityInstance: need 0 < p_min[i] < p_max[i]");
  }
  require(c > 0.0 && c < 1.0, "CityInstance: commission c must lie in (0,1)");
  require(delta >= 0.0 && delta <= 1.0, "CityInstance: delta must lie in [0,1]");
  require(static_cast<int>(x0.size()) == n, "CityInstance: x0 must have length n");
  for (double xi : x0) require(xi > 0.0, "CityInstance: every x0[i] must be positive");
  require(ybar > 0.0, "CityInstance: ybar must be positive");
}

void Realization::validate(const CityInstance& inst) const {
  require(static_cast<int>(y.size()) == inst.n && static_cast<int>(d0.size()) == inst.n,
          "Realization: y and d0 must have length n");
  for (double yi : y) require(yi >= 0.0, "Realization: y must be nonnegative");
  for (double di : d0) require(di >= 0.0, "Realization: d0 must be nonnegative");
}

void FollowerBelief::validate(const CityInstance& inst) const {
  require(m >= 1, "FollowerBelief: need at least one scenario");
  require(static_cast<int>(d0_belief.size()) == inst.n,
          "FollowerBelief: d0_belief must have n rows");
  for (const auto& row : d0_belief) {
    require(static_cast<int>(row.size()) == m, "FollowerBelief: d0_belief rows must have m entries");
    for (double d : row) require(d >= 0.0, "FollowerBelief: demands must be nonnegative");
  }
  require(static_cast<int>(prob.size()) == m, "FollowerBelief: prob must have length m");
  double total = 0.0;
  for (double pk : prob) {
    require(pk > 0.0, "FollowerBelief: probabilities must be positive");
    total += pk;
  }
  require(std::abs(total - 1.0) <= 1e-9, "FollowerBelief: probabilities must sum to 1");
}

void PriceVector::validate(const CityInstance& inst) const {
  require(static_cast<int>(p.size()) == inst.n, "PriceVector: length must be n");
  for (int i = 0; i < inst.n; ++i) {
    require(p[i] >= inst.p_min[i] - kFeasTol && p[i] <= inst.p_max[i] + kFeasTol,
            "PriceVector: price outside [p_min, p_max] in zone " + std::to_string(i));
  }
}

FlowMatrix FlowMatrix::zeros(int n) {
  FlowMatrix f;
  f.v.assign(n, std::vector<double>(n, 0.0));
  return f;
}

void FlowMatrix::validate(const CityInstance& inst) const {
  require(static_cast<int>(v.size()) == inst.n, "FlowMatrix: must be n x n");
  for (int i = 0; i < inst.n; ++i) {
    require(static_cast<int>(v[i].size()) == inst.n, "FlowMatrix: must be n x n");
    require(std::abs(v[i][i]) <= kFeasTol, "FlowMatrix: diagonal must be zero");
    double row_sum = 0.0;
    for (int j = 0; j < inst.n; ++j) {
      require(v[i][j] >= -kFeasTol, "FlowMatrix: flows must be nonnegative");
      if (j != i) row_sum += v[i][j];
    }
    require(row_sum <= inst.x0[i] * (1.0 + 1e-12) + kFeasTol,
            "FlowMatrix: outflow exceeds x0 in zone " + std::to_string(i));
  }
}

double demand(double p_i, double d0_i, const CityInstance& inst, int zone) {
  if (zone < 0 || zone >= inst.n) throw std::domain_error("demand: zone out of range");
  if (p_i < inst.p_min[zone] - kFeasTol || p_i > inst.p_max[zone] + kFeasTol)
    throw std::domain_error("demand: price outside [p_min, p_max]");
  if (d0_i < 0.0) throw std::domain_error("demand: negative nominal demand");
  const double span = inst.p_max[zone] - inst.p_min[zone];
  return d0_i * (1.0 - inst.delta * (p_i - inst.p_min[zone]) / span);
}

std::vector<double> allocate(const std::vector<double>& x0, const FlowMatrix& v) {
  const int n = static_cast<int>(x0.size());
  if (static_cast<int>(v.v.size()) != n) throw std::domain_error("allocate: size mismatch");
  std::vector<double> x(x0);
  for (int i = 0; i < n; ++i) {
    double out = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      if (v.v[i][j] < -kFeasTol) throw std::domain_error("allocate: negative flow");
      x[j] += v.v[i][j];
      out += v.v[i][j];
    }
    x[i] -= out;
    if (out > x0[i] * (1.0 + 1e-12) + kFeasTol)
      throw std::domain_error("allocate: outflow exceeds x0 in zone " + std::to_string(i));
  }
  return x;
}

double phi(double d_ik, double x_i, double ybar) {
  if (ybar <= 0.0) throw std::domain_error("phi: ybar must be positive");
  const double gap = d_ik - x_i;
  if (gap <= 0.0) return 0.0;
  if (gap <= ybar) return gap * gap / (2.0 * ybar);
  return gap - ybar / 2.0;
}

double beta_ws(double d_ik, double x_i, double ybar, double c, double prob_k) {
  if (ybar <= 0.0) throw std::domain_error("beta_ws: ybar must be positive");
  const double gap = d_ik - x_i;
  if (gap <= 0.0) return 0.0;
  if (gap <= ybar) return c * prob_k * (x_i - d_ik) / ybar;
  return -c * prob_k;
}

BetaRegion beta_sws_region(double d_i, double x_i, double y_i) {
  const double gap = d_i - x_i;
  if (gap < y_i) return BetaRegion::Zero;
  if (gap > y_i) return BetaRegion::Pi;
  return BetaRegion::Interval;
}

double leader_revenue(const PriceVector& p, const FlowMatrix& v,
                      const Realization& real, const CityInstance& inst) {
  p.validate(inst);
  v.validate(inst);
  const std::vector<double> x = allocate(inst.x0, v);
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    const double d = demand(p.p[i], real.d0[i], inst, i);
    total += (1.0 - inst.c) * p.p[i] * std::min(x[i] + real.y[i], d);
  }
  return total;
}

double follower_cost_shared(const PriceVector& p, const FlowMatrix& v,
                            const Realization& real, const CityInstance& inst) {
  const std::vector<double> x = allocate(inst.x0, v);
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    const double d = demand(p.p[i], real.d0[i], inst, i);
    total += inst.c * p.p[i] * std::max(-x[i] - real.y[i], -d);
    for (int j = 0; j < inst.n; ++j)
      if (j != i) total += inst.alpha[i][j] * v.v[i][j];
  }
  return total;
}

double follower_cost_scenario(const PriceVector& p, const FlowMatrix& v,
                              const FollowerBelief& belief, const CityInstance& inst) {
  const std::vector<double> x = allocate(inst.x0, v);
  double total = 0.0;
  for (int i = 0; i < inst.n; ++i) {
    for (int k = 0; k < belief.m; ++k) {
      const double d_ik = demand(p.p[i], belief.d0_belief[i][k], inst, i);
      total += inst.c * p.p[i] * (phi(d_ik, x[i], inst.ybar) - d_ik) * belief.prob[k];
    }
    for (int j = 0; j < inst.n; ++j)
      if (j != i) total += inst.alpha[i][j] * v.v[i][j];
  }
  return total;
}

}  // namespace revsi::model
