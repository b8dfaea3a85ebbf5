#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <limits>

namespace anacont {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// A pointwise-evaluable function of one complex variable.
using AnalyticFn = std::function<Cx(Cx)>;

// exp(w) - 1 without cancellation for small |w|.
// Real part: expm1(x)*cos(y) - 2*sin^2(y/2); imaginary part: exp(x)*sin(y).
inline Cx cexpm1(Cx w) {
  const double x = w.real();
  const double y = w.imag();
  const double em = std::expm1(x);
  const double s = std::sin(0.5 * y);
  return Cx(em * std::cos(y) - 2.0 * s * s, (em + 1.0) * std::sin(y));
}

// True if z lies on the closed ray [0, +inf) up to absolute slack `eps`
// in the imaginary direction.
inline bool on_nonneg_real_axis(Cx z, double eps = 0.0) {
  return std::abs(z.imag()) <= eps && z.real() >= 0.0;
}

// True if z lies on the cut [1, +inf) up to absolute slack `eps`.
inline bool on_cut_1_inf(Cx z, double eps = 0.0) {
  return std::abs(z.imag()) <= eps && z.real() >= 1.0;
}

inline double sqr(double x) { return x * x; }

}  // namespace anacont
