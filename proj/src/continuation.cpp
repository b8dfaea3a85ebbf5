#include "anacont/continuation.hpp"

#include <algorithm>
#include <cmath>

#include "anacont/branches.hpp"
#include "anacont/contour.hpp"
#include "anacont/errors.hpp"
#include "anacont/quadrature.hpp"

namespace anacont {

Cx Series::coefficient(int n) const {
  if (n < 0) {
    throw ParameterError("Series::coefficient: index must be non-negative");
  }
  if (n < static_cast<int>(head.size())) return head[n];
  if (n < n0) {
    throw ParameterError(
        "Series::coefficient: index falls between the head and n0");
  }
  if (!phi) {
    throw ParameterError("Series::coefficient: no interpolant set");
  }
  return phi(Cx(n, 0.0));
}

double select_theta(Cx z) {
  const CompactParams p = compact_params_for(z);
  if (p.a <= 0.0 && p.b >= 0.0) {
    throw BranchError(
        "select_theta: z lies on [1, inf); no admissible contour angle");
  }
  if (p.b <= 0.0) return kPi / 4.0;
  // Interior case a > 0, b > 0: tan(theta) = 2b/a halves the decay margin;
  // the floor keeps the truncation radius moderate near the unit circle.
  return std::max(0.1, std::atan2(2.0 * p.b, p.a));
}

namespace {

const KernelBoundConstants& default_bound_constants() {
  static const KernelBoundConstants k = reciprocal_bound_constant(0.25);
  return k;
}

void check_domain(Cx z) {
  if (z == Cx(0.0, 0.0)) {
    throw DomainError("tail_integral: z == 0");
  }
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw DomainError("continuation: z lies on the cut [1, inf)");
  }
}

}  // namespace

TailIntegral tail_integral(const Series& s, Cx z,
                           const ContinuationConfig& cfg) {
  check_domain(z);
  if (!s.phi) {
    throw ParameterError("tail_integral: series has no interpolant phi");
  }

  const double theta =
      std::isnan(cfg.theta) ? select_theta(z) : cfg.theta;
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw ParameterError("tail_integral: theta must lie in (0, pi/2)");
  }

  int m = cfg.m >= 0 ? cfg.m : std::max(s.n0, 8);
  m = std::max(m, 1);
  if (m + 1 < s.n0) {
    throw ParameterError(
        "tail_integral: m + 1 < n0; tail coefficients are not given by phi");
  }

  const KernelBoundConstants consts =
      cfg.r_exclusion == 0.25 ? default_bound_constants()
                              : reciprocal_bound_constant(cfg.r_exclusion);

  double R = truncation_radius(z, theta, s.phi, consts, cfg.trunc_tol);
  R = std::max(R, m + 1.5);

  std::size_t budget = cfg.max_evals_per_piece;
  if (budget == 0) {
    // Phase-volume heuristic: oscillation frequency along the rays times
    // their length, padded and clamped.
    const Cx L = log_branch(z, BranchCut{0.0});
    const double freq =
        std::abs((std::exp(Cx(0.0, theta)) * L).imag()) +
        kTwoPi * std::cos(theta);
    const double phase = (R - (m + 0.5)) * freq;
    const double need = 3000.0 + 20.0 * phase;
    budget = static_cast<std::size_t>(
        std::clamp(need, 1.0e4, 2.0e6));
  }

  QuadOptions opts;
  opts.abs_tol = cfg.quad_tol;
  opts.rel_tol = cfg.quad_tol;
  opts.max_evals = budget;

  const Contour contour = gamma_m_contour(m, theta);
  auto f = [&](Cx zeta) { return kernel_g(zeta, z, s.phi); };
  const QuadResult q = integrate_contour(contour, f, R, opts);

  TailIntegral t;
  t.value = q.value;
  t.err_estimate = q.err + cfg.trunc_tol;
  t.ray_truncation = R;
  t.theta = theta;
  t.m = m;
  t.evals = q.evals;
  if (!q.converged) {
    throw AccuracyError(
        "tail_integral: quadrature budget exhausted before the tolerance "
        "was certified",
        t.value, t.err_estimate);
  }
  return t;
}

ContinuationResult continue_at(const Series& s, Cx z,
                               const ContinuationConfig& cfg) {
  ContinuationResult res;
  if (z == Cx(0.0, 0.0)) {
    res.value = s.coefficient(0);
    res.mode = "series";
    return res;
  }
  if (z.imag() == 0.0 && z.real() >= 1.0) {
    throw DomainError("continue_at: z lies on the cut [1, inf)");
  }
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 1.0) {
    res.value = direct_series_sum(s, z);
    res.mode = "series";
    res.err_estimate = 1e-14 * (1.0 + std::abs(res.value));
    return res;
  }

  const TailIntegral tail = tail_integral(s, z, cfg);
  Cx head{0.0, 0.0};
  Cx zn{1.0, 0.0};
  for (int n = 0; n <= tail.m; ++n) {
    head += s.coefficient(n) * zn;
    zn *= z;
  }
  res.value = head + tail.value;
  res.err_estimate = tail.err_estimate;
  res.mode = "contour";
  res.m = tail.m;
  res.theta = tail.theta;
  res.evals = tail.evals;

  if (std::abs(z) < 0.95) {
    const Cx direct = direct_series_sum(s, z);
    res.cross_check_dev = std::abs(res.value - direct);
    res.mode = "contour+series-check";
    const double allow = std::max(1e-7 * (1.0 + std::abs(res.value)),
                                  100.0 * res.err_estimate);
    if (res.cross_check_dev > allow) {
      throw AccuracyError(
          "continue_at: contour value disagrees with the convergent series",
          res.value, res.cross_check_dev);
    }
  }
  return res;
}

Cx residue_partial_sum(const Series& s, Cx z, int m, int N) {
  if (m + 1 < s.n0) {
    throw ParameterError("residue_partial_sum: m + 1 < n0");
  }
  if (N < m) {
    throw ParameterError("residue_partial_sum: N must be >= m");
  }
  if (!s.phi) {
    throw ParameterError("residue_partial_sum: series has no interpolant");
  }
  Cx sum{0.0, 0.0};
  Cx zn = std::pow(z, m + 1);
  for (int n = m + 1; n <= N; ++n) {
    sum += s.phi(Cx(n, 0.0)) * zn;
    zn *= z;
  }
  return sum;
}

Cx direct_series_sum(const Series& s, Cx z, double tol, int max_terms) {
  if (!(std::abs(z) < 1.0)) {
    throw ParameterError("direct_series_sum: |z| must be < 1");
  }
  Cx sum{0.0, 0.0};
  Cx zn{1.0, 0.0};
  int quiet = 0;
  for (int n = 0; n < max_terms; ++n) {
    const Cx term = s.coefficient(n) * zn;
    sum += term;
    zn *= z;
    if (std::abs(term) <= tol * (1.0 + std::abs(sum))) {
      if (++quiet >= 5) return sum;
    } else {
      quiet = 0;
    }
  }
  throw AccuracyError("direct_series_sum: series did not settle", sum,
                      std::abs(zn));
}

}  // namespace anacont
