#pragma once

#include <string>
#include <vector>

#include "anacont/common.hpp"

namespace anacont {

// Decay certificate for a boundary function g along the ray of angle
// theta_ray:  |g(rho e^{i theta_ray})| <= M exp(-rho^eta). The radii in
// checked_radii have been (or will be) sampled to validate the claim.
struct DecayCertificate {
  double M = 1.0;
  double eta = 0.4;  // must lie in (0, 1/2)
  double theta_ray = 0.0;
  std::vector<double> checked_radii;
};

// A boundary function with an entirety declaration. Non-entire functions
// are assumed holomorphic off the cut [1, inf), which restricts the
// admissible circle radius (r < 1) and ray angle (theta != 0).
struct BoundaryFn {
  AnalyticFn g;
  bool entire = false;
  std::string label;
};

struct InterpolantConfig {
  double r = 0.5;
  // Ray angle; NaN means "use cert.theta_ray".
  double theta = std::numeric_limits<double>::quiet_NaN();
  double quad_tol = 1e-9;
  double ray_truncation = 0.0;  // 0 = choose from the certificate
  std::size_t max_evals_per_piece = 40000;
  // Allow the saddle-aware automatic radius enlargement for far-out z.
  bool auto_r = true;
};

// Samples |g| along the certificate ray and throws CertificateError when
// the decay bound fails at any checked radius (defaults are used when
// cert.checked_radii is empty).
void verify_certificate(const BoundaryFn& g, const DecayCertificate& cert);

struct InterpolantValue {
  Cx value{0.0, 0.0};
  double err_estimate = 0.0;
  double r_used = 0.0;
  double ray_truncation = 0.0;
  std::size_t evals = 0;
};

// Entire coefficient interpolant evaluated at z:
//   phi(z) = [ A_circle + (e^{-2 pi i z} - 1) A_ray ] / (2 pi i),
// where A_circle integrates alpha(zeta) = zeta^{-z-1} g(zeta) over the
// counterclockwise circle |zeta| = r starting at angle theta (the argument
// advancing continuously from theta to theta + 2 pi) and A_ray integrates
// alpha outward along the ray of angle theta from r to the truncation
// radius. At non-negative integers phi(n) reproduces the Taylor
// coefficient g^{(n)}(0)/n!; at negative integers phi vanishes.
InterpolantValue phi_interpolant(const BoundaryFn& g,
                                 const DecayCertificate& cert, Cx z,
                                 const InterpolantConfig& cfg = {});

// Maximum deviation of phi_{r,theta}(z) over the given radii from its value
// at r_list.front(); the automatic radius enlargement is disabled so each
// requested radius is honoured exactly.
double check_r_independence(const BoundaryFn& g, const DecayCertificate& cert,
                            double theta, Cx z,
                            const std::vector<double>& r_list,
                            double quad_tol = 1e-9);

// Interpolant by the deformed negatively-oriented boundary at opening
// delta: r = e^{-delta}, pieces [inward ray at +delta, clockwise arc
// through angle 0, outward ray at -delta], with alpha built on Log_{-pi};
//   phi(z) = -(contour integral) / (2 pi i).
// Requires F holomorphic off [1, inf) with off-sector decay
// |F| <= M e^{-|zeta|^eta}; the constant M is calibrated from moderate
// samples (or taken from M_hint if larger) and then verified at large
// radii and off-sector spot angles. Throws CertificateError when the decay
// verification fails (e.g. for functions growing along the negative axis).
InterpolantValue phi_deformed(const AnalyticFn& F, double delta, Cx z,
                              double quad_tol = 1e-9, double eta = 0.4,
                              double M_hint = 0.0);

// Robbins upper bound for Gamma(x/eta):
//   exp( ln(2 pi / t)/2 + t (ln t - 1) + 1/(12 t) ),  t = x/eta.
// Useful for bounding moment integrals of exp(-rho^eta) against powers.
double stirling_gamma_bound(double x, double eta);

}  // namespace anacont
