#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "anacont/common.hpp"
#include "anacont/kernel.hpp"

namespace anacont {

// Power series sum a_n z^n described by an explicit head and a coefficient
// interpolant phi with a_n = phi(n) for all n >= n0. The head must cover
// at least the indices [0, n0).
struct Series {
  std::vector<Cx> head;
  AnalyticFn phi;
  int n0 = 0;
  std::string label;

  // a_n, taken from the head when available, otherwise from phi.
  Cx coefficient(int n) const;
};

// Opening angle for the tail contour at z. Throws BranchError when z lies
// on [1, inf), where no admissible angle exists.
double select_theta(Cx z);

struct ContinuationConfig {
  int m = -1;           // head length; -1 selects max(n0, 8)
  double theta = std::numeric_limits<double>::quiet_NaN();  // NaN = auto
  double quad_tol = 1e-10;
  double trunc_tol = 1e-12;
  std::size_t max_evals_per_piece = 0;  // 0 = auto from the phase estimate
  double r_exclusion = 0.25;
};

struct TailIntegral {
  Cx value{0.0, 0.0};
  double err_estimate = 0.0;
  double ray_truncation = 0.0;
  double theta = 0.0;
  int m = 0;
  std::size_t evals = 0;
};

// Contour integral over the tail contour, equal to sum_{n>m} phi(n) z^n in
// the sense of analytic continuation. Domain: z != 0 and z not on [1, inf)
// (points of (0,1) are allowed and agree with the convergent series).
// Throws AccuracyError when the evaluation budget is exhausted before the
// tolerance is certified.
TailIntegral tail_integral(const Series& s, Cx z,
                           const ContinuationConfig& cfg = {});

struct ContinuationResult {
  Cx value{0.0, 0.0};
  double err_estimate = 0.0;
  std::string mode;  // "series", "contour" or "contour+series-check"
  double cross_check_dev = 0.0;
  int m = 0;
  double theta = 0.0;
  std::size_t evals = 0;
};

// Full continuation F(z) = sum_{n<=m} a_n z^n + tail. Inside the unit disc
// the contour value is cross-checked against the direct series sum.
// Throws DomainError on [1, inf).
ContinuationResult continue_at(const Series& s, Cx z,
                               const ContinuationConfig& cfg = {});

// Partial sum sum_{n=m+1}^{N} phi(n) z^n (requires m + 1 >= n0).
Cx residue_partial_sum(const Series& s, Cx z, int m, int N);

// Direct series sum inside the unit disc (|z| < 1 required).
Cx direct_series_sum(const Series& s, Cx z, double tol = 1e-14,
                     int max_terms = 2000000);

}  // namespace anacont
