#include "anacont/growth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anacont/errors.hpp"

namespace anacont {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<double> RadialSchedule::radii() const {
  if (!(r_min > 0.0)) {
    throw ParameterError("RadialSchedule: r_min must be positive");
  }
  if (!(r_max > r_min)) {
    throw ParameterError("RadialSchedule: r_max must exceed r_min");
  }
  if (count < 2) {
    throw ParameterError("RadialSchedule: count must be at least 2");
  }
  std::vector<double> rs(count);
  if (spacing == Spacing::geometric) {
    const double q = std::log(r_max / r_min) / (count - 1);
    for (int i = 0; i < count; ++i) rs[i] = r_min * std::exp(q * i);
  } else {
    const double d = (r_max - r_min) / (count - 1);
    for (int i = 0; i < count; ++i) rs[i] = r_min + d * i;
  }
  rs.back() = r_max;
  return rs;
}

namespace {

void check_tail_fraction(double tail_fraction) {
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw ParameterError("tail_fraction must lie in (0, 1]");
  }
}

// log of the modulus maximum of f over the given angles at radius R, or
// -inf when every sample is skipped (zero modulus or non-finite).
double log_modulus_max(const AnalyticFn& f, double R,
                       const std::vector<double>& angles) {
  double best = -kInf;
  for (double th : angles) {
    Cx v;
    try {
      v = f(R * std::exp(Cx(0.0, th)));
    } catch (const std::exception&) {
      continue;  // singular sample: skip
    }
    const double m = std::abs(v);
    if (m == 0.0 || !std::isfinite(m)) continue;
    best = std::max(best, std::log(m));
  }
  return best;
}

// Indices of the top tail of valid radii (radii assumed ascending).
std::size_t tail_start(std::size_t n_valid, double tail_fraction) {
  const auto keep = static_cast<std::size_t>(
      std::ceil(tail_fraction * static_cast<double>(n_valid)));
  return n_valid - std::max<std::size_t>(keep, 1);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> xs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  }
  return xs;
}

}  // namespace

double exp_type_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                         const std::vector<double>& angles,
                         double tail_fraction) {
  check_tail_fraction(tail_fraction);
  std::vector<std::pair<double, double>> samples;  // (R, log M(R))
  for (double R : radii) {
    const double lm = log_modulus_max(f, R, angles);
    if (lm > -kInf) samples.emplace_back(R, lm);
  }
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  double est = 0.0;
  for (std::size_t i = tail_start(samples.size(), tail_fraction);
       i < samples.size(); ++i) {
    est = std::max(est, std::max(0.0, samples[i].second) / samples[i].first);
  }
  return est;
}

double indicator_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                          double theta, double tail_fraction) {
  check_tail_fraction(tail_fraction);
  std::vector<std::pair<double, double>> samples;
  const std::vector<double> one_angle{theta};
  for (double R : radii) {
    const double lm = log_modulus_max(f, R, one_angle);
    if (lm > -kInf) samples.emplace_back(R, lm);
  }
  if (samples.empty()) return -kInf;
  std::sort(samples.begin(), samples.end());
  double est = -kInf;
  for (std::size_t i = tail_start(samples.size(), tail_fraction);
       i < samples.size(); ++i) {
    est = std::max(est, samples[i].second / samples[i].first);
  }
  return est;
}

double order_on_nodes(const AnalyticFn& f, const std::vector<double>& radii,
                      const std::vector<double>& angles, double tail_fraction) {
  check_tail_fraction(tail_fraction);
  std::vector<std::pair<double, double>> samples;
  for (double R : radii) {
    if (R <= 1.0) continue;
    const double lm = log_modulus_max(f, R, angles);
    if (lm > 1.0) samples.emplace_back(R, lm);
  }
  if (samples.empty()) return 0.0;
  std::sort(samples.begin(), samples.end());
  double est = 0.0;
  for (std::size_t i = tail_start(samples.size(), tail_fraction);
       i < samples.size(); ++i) {
    est = std::max(est, std::log(samples[i].second) / std::log(samples[i].first));
  }
  return est;
}

double exp_type_fn(const AnalyticFn& f, double theta_lo, double theta_hi,
                   const RadialSchedule& schedule, int angle_count,
                   double tail_fraction) {
  if (!(theta_hi > theta_lo)) {
    throw ParameterError("exp_type_fn: sector must have positive width");
  }
  if (angle_count < 2) {
    throw ParameterError("exp_type_fn: angle_count must be at least 2");
  }
  return exp_type_on_nodes(f, schedule.radii(),
                           linspace(theta_lo, theta_hi, angle_count),
                           tail_fraction);
}

std::vector<double> inner_exp_type_ladder(const AnalyticFn& f, double theta_lo,
                                          double theta_hi,
                                          const RadialSchedule& schedule,
                                          const std::vector<double>& margins,
                                          int angle_count,
                                          double tail_fraction) {
  const double span = theta_hi - theta_lo;
  if (!(span > 0.0)) {
    throw ParameterError("inner_exp_type_ladder: sector must have positive width");
  }
  if (margins.empty()) {
    throw ParameterError("inner_exp_type_ladder: margins must be non-empty");
  }
  for (std::size_t i = 0; i < margins.size(); ++i) {
    if (!(margins[i] > 0.0 && margins[i] < 0.5 * span)) {
      throw ParameterError(
          "inner_exp_type_ladder: margins must lie in (0, span/2)");
    }
    if (i > 0 && !(margins[i] < margins[i - 1])) {
      throw ParameterError(
          "inner_exp_type_ladder: margins must be strictly decreasing");
    }
  }
  // One master grid over the open sector; each rung keeps the nodes inside
  // its closed subsector, so rungs with smaller margins use supersets.
  const std::vector<double> master =
      linspace(theta_lo + 1e-9 * span, theta_hi - 1e-9 * span, angle_count);
  const std::vector<double> radii = schedule.radii();
  std::vector<double> ladder;
  ladder.reserve(margins.size());
  for (double mu : margins) {
    std::vector<double> nodes;
    for (double th : master) {
      if (th >= theta_lo + mu && th <= theta_hi - mu) nodes.push_back(th);
    }
    if (nodes.empty()) {
      ladder.push_back(0.0);
      continue;
    }
    ladder.push_back(exp_type_on_nodes(f, radii, nodes, tail_fraction));
  }
  return ladder;
}

double inner_exp_type_fn(const AnalyticFn& f, double theta_lo, double theta_hi,
                         const RadialSchedule& schedule, int angle_count,
                         double tail_fraction) {
  const double span = theta_hi - theta_lo;
  const std::vector<double> margins{span / 8.0, span / 16.0, span / 32.0,
                                    span / 64.0};
  return inner_exp_type_ladder(f, theta_lo, theta_hi, schedule, margins,
                               angle_count, tail_fraction)
      .back();
}

double indicator_fn(const AnalyticFn& f, double theta,
                    const RadialSchedule& schedule, double tail_fraction) {
  return indicator_on_nodes(f, schedule.radii(), theta, tail_fraction);
}

double order_estimate_fn(const AnalyticFn& f, const RadialSchedule& schedule,
                         int angle_count, double tail_fraction) {
  if (angle_count < 4) {
    throw ParameterError("order_estimate_fn: angle_count must be at least 4");
  }
  std::vector<double> angles(angle_count);
  for (int i = 0; i < angle_count; ++i) {
    angles[i] = kTwoPi * i / angle_count;
  }
  return order_on_nodes(f, schedule.radii(), angles, tail_fraction);
}

namespace {

void require_entire(const FunctionExpr& F, const char* who) {
  if (!F.is_entire()) {
    throw ParameterError(std::string(who) +
                         ": growth scales require an entire expression "
                         "(no cuts, no poles, singularities known)");
  }
}

}  // namespace

double exp_type(const FunctionExpr& F, double theta_lo, double theta_hi,
                const RadialSchedule& schedule, int angle_count,
                double tail_fraction) {
  require_entire(F, "exp_type");
  return exp_type_fn(F.fn(), theta_lo, theta_hi, schedule, angle_count,
                     tail_fraction);
}

double inner_exp_type(const FunctionExpr& F, double theta_lo, double theta_hi,
                      const RadialSchedule& schedule, int angle_count,
                      double tail_fraction) {
  require_entire(F, "inner_exp_type");
  return inner_exp_type_fn(F.fn(), theta_lo, theta_hi, schedule, angle_count,
                           tail_fraction);
}

double indicator(const FunctionExpr& F, double theta,
                 const RadialSchedule& schedule, double tail_fraction) {
  require_entire(F, "indicator");
  return indicator_fn(F.fn(), theta, schedule, tail_fraction);
}

double order_estimate(const FunctionExpr& F, const RadialSchedule& schedule,
                      int angle_count, double tail_fraction) {
  require_entire(F, "order_estimate");
  return order_estimate_fn(F.fn(), schedule, angle_count, tail_fraction);
}

GrowthReport growth_report(const AnalyticFn& f, double theta_lo,
                           double theta_hi, const RadialSchedule& schedule,
                           const std::vector<double>& indicator_angles,
                           double tail_fraction) {
  GrowthReport rep;
  rep.schedule = schedule;
  rep.tail_fraction = tail_fraction;
  rep.et_estimate =
      exp_type_fn(f, theta_lo, theta_hi, schedule, 65, tail_fraction);
  rep.iet_estimate =
      inner_exp_type_fn(f, theta_lo, theta_hi, schedule, 257, tail_fraction);
  for (double th : indicator_angles) {
    rep.indicator_samples.push_back(
        {th, indicator_fn(f, th, schedule, tail_fraction)});
  }
  rep.order_estimate = order_on_nodes(
      f, schedule.radii(),
      [&] {
        std::vector<double> angles(64);
        for (int i = 0; i < 64; ++i) angles[i] = kTwoPi * i / 64;
        return angles;
      }(),
      tail_fraction);
  return rep;
}

}  // namespace anacont
