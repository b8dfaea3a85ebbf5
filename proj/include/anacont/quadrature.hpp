#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "anacont/common.hpp"
#include "anacont/contour.hpp"

namespace anacont {

struct QuadOptions {
  double rel_tol = 1e-9;
  double abs_tol = 0.0;
  std::size_t max_evals = 10000;
};

struct QuadResult {
  Cx value{0.0, 0.0};
  double err = 0.0;       // conservative absolute error estimate
  std::size_t evals = 0;  // integrand evaluations consumed
  bool converged = false;
  double l1 = 0.0;  // approximate integral of |f| (noise-floor reference)
};

// Globally adaptive integration of f over [a, b] (a > b integrates the
// reversed interval with negated sign). Panels are refined worst-first
// using an embedded 15/7-point Gauss-Legendre pair; convergence when the
// summed panel error falls below
//   max(abs_tol, rel_tol * |value|, 50 * eps * L1).
// `interior_breaks` seeds panel boundaries (values outside (a,b) ignored).
QuadResult integrate_param(const std::function<Cx(double)>& f, double a,
                           double b, const QuadOptions& opts,
                           const std::vector<double>& interior_breaks = {});

// Integral of f(zeta) dzeta along one contour piece. Rays integrate in the
// radius variable with geometric seeding; arcs in the angle variable with
// seeds no wider than ~0.4 rad; segments in t.
QuadResult integrate_piece(const ContourPiece& piece,
                           const std::function<Cx(Cx)>& f,
                           double ray_truncation, const QuadOptions& opts);

// Sum of integrate_piece over all pieces; errors and evaluation counts
// accumulate, converged only if every piece converged.
QuadResult integrate_contour(const Contour& contour,
                             const std::function<Cx(Cx)>& f,
                             double ray_truncation, const QuadOptions& opts);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// generated by Newton iteration on the Legendre polynomial.
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace anacont
