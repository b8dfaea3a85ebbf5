#pragma once

#include <vector>

#include "anacont/common.hpp"
#include "anacont/expr.hpp"

namespace anacont {

enum class Spacing { geometric, linear };

// Sampling radii for growth estimation.
struct RadialSchedule {
  double r_min = 1.0;
  double r_max = 40.0;
  int count = 60;
  Spacing spacing = Spacing::geometric;

  // Validates r_min > 0, r_max > r_min, count >= 2.
  std::vector<double> radii() const;
};

// --- node-level estimators -------------------------------------------------
// All estimators share the same convention: per radius R the modulus maximum
// M(R) is taken over the supplied angles, samples that are non-finite or
// exactly zero are skipped, and the estimate is the maximum of the relevant
// ratio over the top `tail_fraction` of the (valid) radii.

// Exponential-type estimate  max over tail of log+ M(R) / R.
double exp_type_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                         const std::vector<double>& angles,
                         double tail_fraction);

// Indicator estimate along the single angle theta: max of log |f| / R over
// the tail radii (no positive-part clamp; may be negative, or -inf if every
// sample was skipped).
double indicator_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                          double theta, double tail_fraction);

// Order estimate  max over tail of loglog M(R) / log R, using only radii
// with R > 1 and log M(R) > 1; returns 0 when no radius qualifies.
double order_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                      const std::vector<double>& angles, double tail_fraction);

// --- sector-level estimators (callable form) --------------------------------

// Exponential type on the closed sector [theta_lo, theta_hi].
double exp_type_fn(const AnalyticFn& f, double theta_lo, double theta_hi,
                   const RadialSchedule& schedule, int angle_count = 65,
                   double tail_fraction = 0.25);

// Inner exponential type of the open sector (theta_lo, theta_hi): the
// estimates on the margin ladder [theta_lo + mu, theta_hi - mu] for the
// given margins (descending). One master angle grid is laid over the open
// sector and filtered per margin, so shrinking the margin only adds nodes
// and the ladder is monotone by construction.
std::vector<double> inner_exp_type_ladder(const AnalyticFn& f, double theta_lo,
                                          double theta_hi,
                                          const RadialSchedule& schedule,
                                          const std::vector<double>& margins,
                                          int angle_count = 257,
                                          double tail_fraction = 0.25);

// Convenience: the last (smallest-margin) rung of the default ladder
// {span/8, span/16, span/32, span/64}.
double inner_exp_type_fn(const AnalyticFn& f, double theta_lo, double theta_hi,
                         const RadialSchedule& schedule, int angle_count = 257,
                         double tail_fraction = 0.25);

// Indicator h(theta) estimate along one ray.
double indicator_fn(const AnalyticFn& f, double theta,
                    const RadialSchedule& schedule,
                    double tail_fraction = 0.25);

// Order estimate over the full angle sweep.
double order_estimate_fn(const AnalyticFn& f, const RadialSchedule& schedule,
                         int angle_count = 64, double tail_fraction = 0.25);

// --- expression-level wrappers ----------------------------------------------
// These all require F.is_entire(); growth scales of expressions with known
// cuts or poles (or unknown singularities) are rejected with ParameterError.

double exp_type(const FunctionExpr& F, double theta_lo, double theta_hi,
                const RadialSchedule& schedule, int angle_count = 65,
                double tail_fraction = 0.25);
double inner_exp_type(const FunctionExpr& F, double theta_lo, double theta_hi,
                      const RadialSchedule& schedule, int angle_count = 257,
                      double tail_fraction = 0.25);
double indicator(const FunctionExpr& F, double theta,
                 const RadialSchedule& schedule, double tail_fraction = 0.25);
double order_estimate(const FunctionExpr& F, const RadialSchedule& schedule,
                      int angle_count = 64, double tail_fraction = 0.25);

// Aggregate report used by the CLI.
struct IndicatorSample {
  double theta = 0.0;
  double value = 0.0;
};

struct GrowthReport {
  double et_estimate = 0.0;
  double iet_estimate = 0.0;
  std::vector<IndicatorSample> indicator_samples;
  double order_estimate = 0.0;
  RadialSchedule schedule;
  double tail_fraction = 0.25;
};

GrowthReport growth_report(const AnalyticFn& f, double theta_lo,
                           double theta_hi, const RadialSchedule& schedule,
                           const std::vector<double>& indicator_angles,
                           double tail_fraction = 0.25);

}  // namespace anacont
