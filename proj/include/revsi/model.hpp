#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace revsi::model {

/// Static city/market data: zones, relocation costs, price bounds,
/// commission, fleet.  All driver counts are reals in the aggregated model.
struct CityInstance {
  int n = 0;                               // zone count, >= 2
  std::vector<std::vector<double>> alpha;  // n x n relocation cost, zero diagonal
  std::vector<double> p_min;               // per-zone price lower bounds
  std::vector<double> p_max;               // per-zone price upper bounds
  double c = 0.0;                          // driver commission fraction, in (0,1)
  double delta = 0.0;                      // demand discount slope, in [0,1]
  std::vector<double> x0;                  // initial unmatched drivers per zone, > 0
  double ybar = 0.0;                       // upper bound of uniform matched-driver dist

  double total_fleet() const;  // N0 = sum(x0)
  double max_price() const;    // max_i p_max[i]

  /// Throws std::invalid_argument on any violated invariant.
  void validate() const;
};

/// One revealed sample of matched drivers and nominal demand.
struct Realization {
  std::vector<double> y;   // matched drivers arriving per zone
  std::vector<double> d0;  // realized nominal demand per zone

  void validate(const CityInstance& inst) const;
};

/// The drivers' discrete demand scenarios and probabilities.
struct FollowerBelief {
  int m = 0;                                    // scenario count
  std::vector<std::vector<double>> d0_belief;   // n rows x m columns
  std::vector<double> prob;                     // m probabilities, sum 1

  void validate(const CityInstance& inst) const;
};

struct PriceVector {
  std::vector<double> p;

  void validate(const CityInstance& inst) const;
};

/// Nonnegative driver flows i -> j with zero diagonal; row sums capped by x0.
struct FlowMatrix {
  std::vector<std::vector<double>> v;

  static FlowMatrix zeros(int n);
  void validate(const CityInstance& inst) const;
};

/// Effective demand in zone i at price p_i: the nominal demand scaled by the
/// linear discount factor.  Out-of-bounds prices are a domain error.
double demand(double p_i, double d0_i, const CityInstance& inst, int zone);

/// Post-reallocation drivers per zone; conserves the total exactly.
std::vector<double> allocate(const std::vector<double>& x0, const FlowMatrix& v);

/// Expected unmet demand in one zone under the uniform matched-driver model:
/// piecewise {0, quadratic, linear} in the gap d_ik - x_i.
double phi(double d_ik, double x_i, double ybar);

/// Scaled derivative of phi: c * prob_k * d(phi)/dx_i.
double beta_ws(double d_ik, double x_i, double ybar, double c, double prob_k);

enum class BetaRegion { Zero, Pi, Interval };

/// Region of the shared-information subgradient: beta_i = 0, p_i, or [0, p_i].
BetaRegion beta_sws_region(double d_i, double x_i, double y_i);

/// Company income at realized (y, d0): sum_i (1-c) p_i min(x_i + y_i, d_i).
double leader_revenue(const PriceVector& p, const FlowMatrix& v,
                      const Realization& real, const CityInstance& inst);

/// Drivers' cost when the realization is shared (to minimize).
double follower_cost_shared(const PriceVector& p, const FlowMatrix& v,
                            const Realization& real, const CityInstance& inst);

/// Drivers' expected cost under their scenario belief (to minimize).
double follower_cost_scenario(const PriceVector& p, const FlowMatrix& v,
                              const FollowerBelief& belief, const CityInstance& inst);

}  // namespace revsi::model
