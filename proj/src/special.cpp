#include "anacont/special.hpp"

#include <array>
#include <cmath>

#include "anacont/errors.hpp"

namespace anacont {

namespace {

constexpr int kNumCoeffs = 40;

// Coefficients B_k / (k+1)! of the series Li2(z) = sum_k c_k u^{k+1},
// u = -log(1-z), with Bernoulli numbers in the B_1 = -1/2 convention.
std::array<double, kNumCoeffs> li2_series_coeffs() {
  std::array<long double, kNumCoeffs> bern{};
  bern[0] = 1.0L;
  // B_k = -1/(k+1) * sum_{j<k} C(k+1, j) B_j.
  for (int k = 1; k < kNumCoeffs; ++k) {
    long double sum = 0.0L;
    long double binom = 1.0L;  // C(k+1, 0)
    for (int j = 0; j < k; ++j) {
      sum += binom * bern[j];
      binom = binom * (k + 1 - j) / (j + 1);
    }
    bern[k] = -sum / (k + 1);
  }
  std::array<double, kNumCoeffs> c{};
  long double fact = 1.0L;  // (k+1)!
  for (int k = 0; k < kNumCoeffs; ++k) {
    fact *= (k + 1);
    c[k] = static_cast<double>(bern[k] / fact);
  }
  return c;
}

// Core series, valid after reduction to |z| <= 1, Re z <= 1/2.
Cx li2_core(Cx z) {
  static const std::array<double, kNumCoeffs> c = li2_series_coeffs();
  const Cx u = -std::log(Cx(1.0, 0.0) - z);
  Cx term = u;
  Cx sum{0.0, 0.0};
  for (int k = 0; k < kNumCoeffs; ++k) {
    sum += c[k] * term;
    term *= u;
  }
  return sum;
}

}  // namespace

Cx li2(Cx z) {
  if (on_cut_1_inf(z)) {
    throw EvaluationError("li2: point lies on the branch cut [1, inf)");
  }
  const double pi2_6 = kPi * kPi / 6.0;
  if (std::abs(z) > 1.0) {
    // Inversion: Li2(z) = -pi^2/6 - Log^2(-z)/2 - Li2(1/z).
    const Cx lg = std::log(-z);
    return -pi2_6 - 0.5 * lg * lg - li2(Cx(1.0, 0.0) / z);
  }
  if (z.real() > 0.5) {
    // Reflection: Li2(z) = pi^2/6 - Log z * Log(1-z) - Li2(1-z).
    const Cx w = Cx(1.0, 0.0) - z;
    return pi2_6 - std::log(z) * std::log(w) - li2_core(w);
  }
  return li2_core(z);
}

}  // namespace anacont
