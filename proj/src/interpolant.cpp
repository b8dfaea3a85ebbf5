#include "anacont/interpolant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "anacont/errors.hpp"
#include "anacont/quadrature.hpp"

namespace anacont {

namespace {

void check_eta(double eta) {
  if (!(eta > 0.0 && eta < 0.5)) {
    throw ParameterError("decay exponent eta must lie in (0, 1/2)");
  }
}

// Bound on the ray integrand modulus at radius rho (for rho >= 1):
//   |alpha| <= M e^{-rho^eta} rho^{-Re z - 1} e^{|theta Im z|}.
double ray_bound(double rho, double M, double eta, Cx z, double theta) {
  const double log_b = std::log(M) - std::pow(rho, eta) +
                       (-z.real() - 1.0) * std::log(rho) +
                       std::abs(theta * z.imag());
  return std::exp(log_b);
}

// Truncation radius T such that the certified tail integral beyond T is
// below 0.25 * tol. Uses the incomplete-gamma style estimate
//   int_T^inf h <= h(T) * (2/eta) * T^{1-eta},
// valid once h is decreasing and T^eta is large enough.
double choose_truncation(double r, double M, double eta, Cx z, double theta,
                         double tol) {
  double T = std::max({2.0 * r, 2.0, std::pow(2.0 / (eta * eta), 1.0 / eta)});
  for (int attempt = 0; attempt < 500; ++attempt) {
    const double h = ray_bound(T, M, eta, z, theta);
    const double tail = h * (2.0 / eta) * std::pow(T, 1.0 - eta);
    const bool decreasing =
        ray_bound(1.02 * T, M, eta, z, theta) < h || h == 0.0;
    if (decreasing && tail <= 0.25 * tol) return T;
    T *= 2.0;
    if (!std::isfinite(T)) break;
  }
  throw ConfigurationError(
      "interpolant: no finite ray truncation certifies the tail tolerance");
}

const std::vector<double>& default_check_radii() {
  static const std::vector<double> radii{0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 40.0};
  return radii;
}

void check_on_ray(const AnalyticFn& g, double theta, double rho, double M,
                  double eta) {
  const double m = std::abs(g(rho * std::exp(Cx(0.0, theta))));
  const double bound = M * std::exp(-std::pow(rho, eta));
  if (!(m <= bound * (1.0 + 1e-9) + 1e-300)) {
    throw CertificateError(
        "decay certificate violated on the ray at radius " +
        std::to_string(rho));
  }
}

}  // namespace

void verify_certificate(const BoundaryFn& g, const DecayCertificate& cert) {
  check_eta(cert.eta);
  if (!(cert.M > 0.0)) {
    throw ParameterError("verify_certificate: M must be positive");
  }
  if (!g.g) {
    throw ParameterError("verify_certificate: empty boundary function");
  }
  const std::vector<double>& radii =
      cert.checked_radii.empty() ? default_check_radii() : cert.checked_radii;
  for (double rho : radii) {
    if (!(rho > 0.0)) {
      throw ParameterError("verify_certificate: radii must be positive");
    }
    check_on_ray(g.g, cert.theta_ray, rho, cert.M, cert.eta);
  }
}

InterpolantValue phi_interpolant(const BoundaryFn& g,
                                 const DecayCertificate& cert, Cx z,
                                 const InterpolantConfig& cfg) {
  check_eta(cert.eta);
  if (!(cfg.r > 0.0)) {
    throw ParameterError("phi_interpolant: r must be positive");
  }
  double theta = std::isnan(cfg.theta) ? cert.theta_ray : cfg.theta;
  if (!std::isnan(cfg.theta) &&
      std::abs(cfg.theta - cert.theta_ray) > 1e-12) {
    throw ParameterError(
        "phi_interpolant: cfg.theta disagrees with the certificate ray");
  }
  if (!(theta >= -kPi && theta < kPi)) {
    throw ParameterError("phi_interpolant: theta must lie in [-pi, pi)");
  }
  if (!g.entire) {
    if (!(cfg.r < 1.0)) {
      throw ParameterError(
          "phi_interpolant: r must be < 1 unless g is entire");
    }
    if (theta == 0.0) {
      throw ParameterError(
          "phi_interpolant: the ray angle must avoid the cut [1, inf) "
          "unless g is entire");
    }
  }
  verify_certificate(g, cert);

  // Saddle-aware radius: a fixed small circle loses exp(2 pi Im z)-sized
  // factors of zeta^{-z-1} to cancellation once |Im z| grows, while too
  // large a circle can blow up g itself. For entire g any radius is valid,
  // so pick the minimax one: minimize over r the circle maximum of
  // log |w^{-z-1} g(w)|, sampled on a log grid of radii. Overflowing or
  // invalid radii score +inf and drop out on their own.
  double r = cfg.r;
  if (cfg.auto_r) {
    if (g.entire) {
      const Cx a = -z - Cx(1.0, 0.0);
      const double r_hi = std::max(4.0 * std::abs(z) + 4.0, 8.0 * cfg.r);
      const int n_radii = 28;
      const int n_angles = 24;
      double best_r = cfg.r;
      double best_peak = std::numeric_limits<double>::infinity();
      for (int k = 0; k <= n_radii; ++k) {
        const double rk =
            cfg.r * std::pow(r_hi / cfg.r, static_cast<double>(k) / n_radii);
        double peak = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < n_angles; ++j) {
          const double phi = theta + kTwoPi * (j + 0.5) / n_angles;
          const Cx w = rk * std::exp(Cx(0.0, phi));
          double lg = std::log(std::abs(g.g(w)));
          double val = a.real() * std::log(rk) - a.imag() * phi + lg;
          if (std::isnan(val)) val = std::numeric_limits<double>::infinity();
          peak = std::max(peak, val);
        }
        if (peak < best_peak) {
          best_peak = peak;
          best_r = rk;
        }
      }
      r = std::max(r, best_r);
    } else if (std::abs(z.real()) > 20.0) {
      r = std::max(r, 0.9);
    }
  }

  double T = cfg.ray_truncation;
  if (T <= 0.0) {
    T = choose_truncation(r, cert.M, cert.eta, z, theta, cfg.quad_tol);
  }
  if (!(T > r)) {
    throw ParameterError("phi_interpolant: truncation must exceed r");
  }
  // Re-verify the certificate at the far end of the ray actually used.
  check_on_ray(g.g, theta, T, cert.M, cert.eta);
  check_on_ray(g.g, theta, 0.5 * T, cert.M, cert.eta);

  QuadOptions opts;
  opts.abs_tol = cfg.quad_tol;
  opts.rel_tol = cfg.quad_tol;
  opts.max_evals = cfg.max_evals_per_piece;

  // Circle integral: the argument advances continuously from theta to
  // theta + 2 pi along the counterclockwise circle.
  const double log_r = std::log(r);
  auto circle_f = [&](double phi) {
    const Cx zeta = r * std::exp(Cx(0.0, phi));
    const Cx alpha = std::exp((-z - Cx(1.0, 0.0)) * Cx(log_r, phi)) * g.g(zeta);
    return alpha * Cx(0.0, 1.0) * zeta;
  };
  std::vector<double> circle_breaks;
  for (int k = 1; k < 16; ++k) {
    circle_breaks.push_back(theta + kTwoPi * k / 16.0);
  }
  const QuadResult circ =
      integrate_param(circle_f, theta, theta + kTwoPi, opts, circle_breaks);

  // Ray integral outward from r to T at angle theta (lower branch edge).
  const Cx dir = std::exp(Cx(0.0, theta));
  auto ray_f = [&](double rho) {
    const Cx alpha =
        std::exp((-z - Cx(1.0, 0.0)) * Cx(std::log(rho), theta)) *
        g.g(rho * dir);
    return alpha * dir;
  };
  std::vector<double> ray_breaks;
  for (double b = 4.0 * r; b < T; b *= 4.0) ray_breaks.push_back(b);
  const QuadResult ray = integrate_param(ray_f, r, T, opts, ray_breaks);

  const Cx factor = cexpm1(Cx(0.0, -kTwoPi) * z);
  const Cx two_pi_i(0.0, kTwoPi);
  const double tail =
      ray_bound(T, cert.M, cert.eta, z, theta) * (2.0 / cert.eta) *
      std::pow(T, 1.0 - cert.eta);

  InterpolantValue out;
  out.value = (circ.value + factor * ray.value) / two_pi_i;
  out.err_estimate =
      (circ.err + std::abs(factor) * (ray.err + tail)) / kTwoPi;
  out.r_used = r;
  out.ray_truncation = T;
  out.evals = circ.evals + ray.evals;
  if (!circ.converged || !ray.converged) {
    throw AccuracyError(
        "phi_interpolant: quadrature budget exhausted before the tolerance "
        "was certified",
        out.value, out.err_estimate);
  }
  return out;
}

double check_r_independence(const BoundaryFn& g, const DecayCertificate& cert,
                            double theta, Cx z,
                            const std::vector<double>& r_list,
                            double quad_tol) {
  if (r_list.size() < 2) {
    throw ParameterError("check_r_independence: need at least two radii");
  }
  InterpolantConfig cfg;
  cfg.theta = theta;
  cfg.quad_tol = quad_tol;
  cfg.auto_r = false;
  cfg.r = r_list.front();
  const Cx base = phi_interpolant(g, cert, z, cfg).value;
  double dev = 0.0;
  for (std::size_t i = 1; i < r_list.size(); ++i) {
    cfg.r = r_list[i];
    dev = std::max(dev,
                   std::abs(phi_interpolant(g, cert, z, cfg).value - base));
  }
  return dev;
}

InterpolantValue phi_deformed(const AnalyticFn& F, double delta, Cx z,
                              double quad_tol, double eta, double M_hint) {
  if (!F) {
    throw ParameterError("phi_deformed: empty function");
  }
  if (!(delta > 0.0 && delta <= kPi / 2.0)) {
    throw ParameterError("phi_deformed: delta must lie in (0, pi/2]");
  }
  check_eta(eta);
  const double r = std::exp(-delta);

  // Calibrate the decay constant from moderate samples on the contour
  // pieces (both rays and the arc).
  double M = M_hint;
  for (double rho : {r, 1.0, 2.0, 4.0}) {
    for (double psi : {delta, -delta}) {
      const double m = std::abs(F(rho * std::exp(Cx(0.0, psi))));
      M = std::max(M, 3.0 * m * std::exp(std::pow(rho, eta)));
    }
  }
  for (int k = -4; k <= 4; ++k) {
    const double t = delta * k / 4.0;
    const double m = std::abs(F(r * std::exp(Cx(0.0, t))));
    M = std::max(M, 3.0 * m * std::exp(std::pow(r, eta)));
  }
  if (!(M > 0.0) || !std::isfinite(M)) {
    throw CertificateError("phi_deformed: could not calibrate a decay bound");
  }

  // Verify the calibrated bound at large radii on the rays and at
  // off-sector spot angles; growth along any of these directions means the
  // deformed-boundary representation does not converge to the interpolant.
  for (double rho : {8.0, 16.0, 32.0, 64.0, 128.0}) {
    for (double psi :
         {delta, -delta, kPi / 2.0, -kPi / 2.0, 2.5, -2.5, kPi - 1e-3}) {
      const double m = std::abs(F(rho * std::exp(Cx(0.0, psi))));
      if (!(m <= M * std::exp(-std::pow(rho, eta)) * (1.0 + 1e-9))) {
        throw CertificateError(
            "phi_deformed: off-sector decay verification failed at radius " +
            std::to_string(rho) + ", angle " + std::to_string(psi));
      }
    }
  }

  const double T = choose_truncation(r, M, eta, z, delta, quad_tol);

  QuadOptions opts;
  opts.abs_tol = quad_tol;
  opts.rel_tol = quad_tol;
  opts.max_evals = 80000;

  // alpha(zeta) = F(zeta) exp((-z-1) Log_{-pi} zeta); on the contour the
  // argument is the parameter itself (the pieces stay inside |arg| <= delta,
  // far from the cut of Log_{-pi}).
  auto alpha_ray = [&](double rho, double psi) {
    return std::exp((-z - Cx(1.0, 0.0)) * Cx(std::log(rho), psi)) *
           F(rho * std::exp(Cx(0.0, psi)));
  };
  std::vector<double> ray_breaks;
  for (double b = 4.0 * std::max(r, 0.5); b < T; b *= 4.0) {
    ray_breaks.push_back(b);
  }

  // Inward ray at +delta: integral from T down to r.
  const Cx dir_up = std::exp(Cx(0.0, delta));
  auto f_in = [&](double rho) { return alpha_ray(rho, delta) * dir_up; };
  QuadResult in_ray = integrate_param(f_in, r, T, opts, ray_breaks);
  in_ray.value = -in_ray.value;

  // Clockwise arc from +delta to -delta at radius r.
  const double log_r = std::log(r);
  auto f_arc = [&](double t) {
    const Cx zeta = r * std::exp(Cx(0.0, t));
    return std::exp((-z - Cx(1.0, 0.0)) * Cx(log_r, t)) * F(zeta) *
           Cx(0.0, 1.0) * zeta;
  };
  QuadResult arc = integrate_param(f_arc, delta, -delta, opts);

  // Outward ray at -delta from r to T.
  const Cx dir_dn = std::exp(Cx(0.0, -delta));
  auto f_out = [&](double rho) { return alpha_ray(rho, -delta) * dir_dn; };
  const QuadResult out_ray = integrate_param(f_out, r, T, opts, ray_breaks);

  const double tail = ray_bound(T, M, eta, z, delta) * (2.0 / eta) *
                      std::pow(T, 1.0 - eta);

  InterpolantValue out;
  out.value = -(in_ray.value + arc.value + out_ray.value) / Cx(0.0, kTwoPi);
  out.err_estimate =
      (in_ray.err + arc.err + out_ray.err + 2.0 * tail) / kTwoPi;
  out.r_used = r;
  out.ray_truncation = T;
  out.evals = in_ray.evals + arc.evals + out_ray.evals;
  if (!in_ray.converged || !arc.converged || !out_ray.converged) {
    throw AccuracyError(
        "phi_deformed: quadrature budget exhausted before the tolerance was "
        "certified",
        out.value, out.err_estimate);
  }
  return out;
}

double stirling_gamma_bound(double x, double eta) {
  if (!(x > 0.0)) {
    throw ParameterError("stirling_gamma_bound: x must be positive");
  }
  if (!(eta > 0.0 && eta < 1.0)) {
    throw ParameterError("stirling_gamma_bound: eta must lie in (0, 1)");
  }
  const double t = x / eta;
  return std::exp(0.5 * std::log(kTwoPi / t) + t * (std::log(t) - 1.0) +
                  1.0 / (12.0 * t));
}

}  // namespace anacont
