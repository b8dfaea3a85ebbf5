#include "anacont/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anacont/branches.hpp"
#include "anacont/errors.hpp"

namespace anacont {

CompactParams compact_params_for(Cx z) {
  if (z == Cx(0.0, 0.0)) {
    throw DomainError("compact_params_for: z == 0 has no continuation data");
  }
  const double arg0 = arg_branch(z, BranchCut{0.0});
  CompactParams p;
  p.a = kPi - std::abs(arg0 - kPi);
  p.b = std::log(std::abs(z));
  return p;
}

namespace {

// q(zeta) = |e^{2 pi i zeta} - 1| * e^{pi Im zeta - pi |Im zeta|}; the
// reciprocal-denominator bound is 1/|e^{2 pi i zeta}-1| <= (1/q) * decay,
// where the decay factor is what the overall integrand bound carries.
double q_of(Cx zeta) {
  const double y = zeta.imag();
  if (y >= 0.0) {
    return std::abs(cexpm1(Cx(0.0, kTwoPi) * zeta));
  }
  // For y < 0 rewrite to avoid overflow: |e^{2 pi i zeta} - 1| * e^{-2pi|y|}
  //   = |e^{2 pi i x} - e^{2 pi y} e^{... }| ... evaluate directly:
  //   e^{2 pi i zeta} = e^{-2 pi y} e^{2 pi i x}; multiply |...-1| by
  //   e^{2 pi y} to get |e^{2 pi i x} - e^{2 pi y}|.
  const double x = zeta.real();
  const Cx w = std::exp(Cx(0.0, kTwoPi * x)) - std::exp(Cx(kTwoPi * y, 0.0));
  return std::abs(w);
}

// Golden-section minimization of f on [lo, hi].
template <typename F>
double golden_min(F f, double lo, double hi, int iters = 200) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && (b - a) > 1e-14; ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return std::min(f(0.5 * (a + b)), std::min(fc, fd));
}

}  // namespace

KernelBoundConstants reciprocal_bound_constant(double r_exclusion) {
  if (!(r_exclusion > 0.0 && r_exclusion < 0.5)) {
    throw ParameterError(
        "reciprocal_bound_constant: r_exclusion must lie in (0, 1/2)");
  }
  const double r = r_exclusion;

  // Far region |Im zeta| >= 1. q is symmetric in x-period and in the sign
  // of y, and increases with |y|; scan the bottom edge plus a safety band.
  double qmin_far = std::numeric_limits<double>::infinity();
  for (double y = 1.0; y <= 3.0 + 1e-12; y += 0.005) {
    for (double x = 0.0; x <= 0.5 + 1e-12; x += 0.0015) {
      qmin_far = std::min(qmin_far, q_of(Cx(x, y)));
    }
  }
  {
    // Refine along the edge y = 1.
    const double q_edge =
        golden_min([&](double x) { return q_of(Cx(x, 1.0)); }, 0.0, 0.5);
    qmin_far = std::min(qmin_far, q_edge);
  }

  // Near region |Im zeta| <= 1 with discs of radius r removed around the
  // integers. One period cell with both symmetries: x in [0, 1/2],
  // y in [0, 1], x^2 + y^2 >= r^2.
  double qmin_near = std::numeric_limits<double>::infinity();
  for (double y = 0.0; y <= 1.0 + 1e-12; y += 0.0015) {
    for (double x = 0.0; x <= 0.5 + 1e-12; x += 0.0015) {
      if (x * x + y * y < r * r) continue;
      qmin_near = std::min(qmin_near, q_of(Cx(x, y)));
    }
  }
  {
    // Refine along the exclusion circle (the infimum sits on it), checking
    // both half planes.
    const double q_circ_up = golden_min(
        [&](double t) { return q_of(r * std::exp(Cx(0.0, t))); }, 0.0,
        kPi / 2.0);
    const double q_circ_dn = golden_min(
        [&](double t) { return q_of(r * std::exp(Cx(0.0, -t))); }, 0.0,
        kPi / 2.0);
    qmin_near = std::min({qmin_near, q_circ_up, q_circ_dn});
  }

  KernelBoundConstants k;
  k.r_exclusion = r;
  k.c_far = 1.0 / qmin_far;
  k.c_near = 1.0 / qmin_near;
  k.c = std::max(k.c_far, k.c_near);
  return k;
}

double dist_to_integers(Cx zeta) {
  const double n = std::nearbyint(zeta.real());
  return std::abs(zeta - Cx(n, 0.0));
}

Cx kernel_g(Cx zeta, Cx z, const AnalyticFn& phi) {
  if (z == Cx(0.0, 0.0)) {
    throw DomainError("kernel_g: z == 0");
  }
  if (dist_to_integers(zeta) < 1e-9) {
    throw PoleProximityError(
        "kernel_g: zeta within 1e-9 of an integer pole of the kernel");
  }
  const Cx w = zeta * log_branch(z, BranchCut{0.0});
  const Cx p = phi(zeta);
  if (zeta.imag() >= 0.0) {
    // e^{2 pi i zeta} has modulus <= 1 here; the denominator is stable.
    return p * std::exp(w) / cexpm1(Cx(0.0, kTwoPi) * zeta);
  }
  // Multiply through by e^{-2 pi i zeta} to keep every exponential bounded.
  return p * std::exp(w - Cx(0.0, kTwoPi) * zeta) /
         (-cexpm1(Cx(0.0, -kTwoPi) * zeta));
}

double epsilon_of(const AnalyticFn& phi, Cx zeta) {
  if (zeta == Cx(0.0, 0.0)) {
    throw DomainError("epsilon_of: zeta == 0");
  }
  const double m = std::abs(phi(zeta));
  if (m == 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(m) / std::abs(zeta);
}

double integrand_bound(Cx zeta, Cx z, const AnalyticFn& phi,
                       const KernelBoundConstants& consts) {
  if (dist_to_integers(zeta) < consts.r_exclusion - 1e-12) {
    throw ParameterError(
        "integrand_bound: zeta violates the integer exclusion radius");
  }
  const CompactParams p = compact_params_for(z);
  const double m = std::abs(phi(zeta));
  if (m == 0.0) return 0.0;
  return consts.c * std::exp(p.b * zeta.real() - p.a * std::abs(zeta.imag()) +
                             std::log(m));
}

double truncation_radius(Cx z, double theta, const AnalyticFn& phi,
                         const KernelBoundConstants& consts, double tol) {
  if (!(theta > 0.0 && theta < kPi / 2.0)) {
    throw ParameterError("truncation_radius: theta must lie in (0, pi/2)");
  }
  if (!(tol > 0.0)) {
    throw ParameterError("truncation_radius: tol must be positive");
  }
  const CompactParams p = compact_params_for(z);
  const double lambda = p.b * std::cos(theta) - p.a * std::sin(theta);
  if (lambda >= -1e-6) {
    throw ConfigurationError(
        "truncation_radius: ray decay rate is not negative; no admissible "
        "truncation exists for this z and theta");
  }
  const double al = std::abs(lambda);
  double R = 2.0 * std::log(consts.c / (tol * al)) / al;
  R = std::max(R, 1.0);
  // The linear-rate estimate ignores |phi|; certify the endpoint bound on
  // both rays and double R until the residual tail is controlled.
  for (int attempt = 0; attempt < 60; ++attempt) {
    const Cx up = R * std::exp(Cx(0.0, theta));
    const Cx dn = R * std::exp(Cx(0.0, -theta));
    const double bound = std::max(integrand_bound(up, z, phi, consts),
                                  integrand_bound(dn, z, phi, consts));
    if (bound <= 0.25 * tol * al && std::isfinite(bound)) {
      return R;
    }
    R *= 2.0;
    if (!std::isfinite(R)) break;
  }
  throw ConfigurationError(
      "truncation_radius: no finite truncation certifies the tail bound; "
      "the coefficient growth may exceed the ray decay");
}

}  // namespace anacont
