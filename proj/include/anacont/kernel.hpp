#pragma once

#include "anacont/common.hpp"

namespace anacont {

// Geometry of the integrand bound at a fixed evaluation point z:
//   |z^zeta| = exp(b*Re zeta - Arg_0(z)*Im zeta),
// with a = pi - |Arg_0 z - pi| the angular distance of z from the positive
// real axis and b = log|z|. The combined bound used everywhere is
//   |g(zeta, z)| <= c * |phi(zeta)| * exp(b*Re zeta - a*|Im zeta|).
struct CompactParams {
  double a = 0.0;
  double b = 0.0;
};

// Throws DomainError for z == 0.
CompactParams compact_params_for(Cx z);

// Constants bounding 1/|e^{2 pi i zeta} - 1| away from the integer poles:
//   far  (|Im zeta| >= 1):                 1/q <= c_far
//   near (|Im zeta| <= 1, dist >= r_excl): 1/q <= c_near
// where q(zeta) = |e^{2 pi i zeta} - 1| * e^{pi Im zeta - pi |Im zeta|}.
struct KernelBoundConstants {
  double c_far = 0.0;
  double c_near = 0.0;
  double r_exclusion = 0.0;
  double c = 0.0;  // max(c_far, c_near)
};

// Numerical search (periodic cell grid + local refinement) for the bound
// constants at the given exclusion radius. Requires r_exclusion in (0, 1/2).
KernelBoundConstants reciprocal_bound_constant(double r_exclusion = 0.25);

// Continuation kernel g(zeta, z) = phi(zeta) z^zeta / (e^{2 pi i zeta} - 1),
// with z^zeta = exp(zeta Log_0 z). Evaluated in an overflow-safe form on
// both half planes. Throws PoleProximityError when zeta is within 1e-9 of
// an integer, DomainError for z == 0.
Cx kernel_g(Cx zeta, Cx z, const AnalyticFn& phi);

// Exponential rate log|phi(zeta)| / |zeta| (-inf when phi(zeta) == 0).
// Throws DomainError for zeta == 0.
double epsilon_of(const AnalyticFn& phi, Cx zeta);

// Pointwise upper bound c * exp(b Re zeta - a |Im zeta| + log|phi(zeta)|)
// for |g(zeta, z)|. Precondition: dist(zeta, Z) >= r_exclusion (checked).
double integrand_bound(Cx zeta, Cx z, const AnalyticFn& phi,
                       const KernelBoundConstants& consts);

// Distance from zeta to the nearest integer.
double dist_to_integers(Cx zeta);

// Radius R such that the bound integral over the ray tails beyond R is
// below tol: starts from R = 2 log(c / (tol |lambda|)) / |lambda| with
// lambda = b cos(theta) - a sin(theta), then doubles R until the endpoint
// bound on both rays (angles +/- theta) is small enough. Throws
// ConfigurationError when lambda >= -1e-6 or no finite R certifies.
double truncation_radius(Cx z, double theta, const AnalyticFn& phi,
                         const KernelBoundConstants& consts, double tol);

}  // namespace anacont
