#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "anacont/contour.hpp"
#include "anacont/quadrature.hpp"
#include "oracles.hpp"

using namespace anacont;

TEST_CASE("Gauss-Legendre nodes and weights are sane") {
  for (int n : {7, 15}) {
    std::vector<double> x, w;
    gauss_legendre(n, x, w);
    REQUIRE(static_cast<int>(x.size()) == n);
    REQUIRE(static_cast<int>(w.size()) == n);
    double wsum = 0.0;
    for (int i = 0; i < n; ++i) {
      CHECK(x[i] > -1.0);
      CHECK(x[i] < 1.0);
      CHECK(w[i] > 0.0);
      if (i) CHECK(x[i] < x[i - 1]);  // nodes are produced in descending order
      // Symmetry of nodes and weights about 0.
      CHECK(std::abs(x[i] + x[n - 1 - i]) < 1e-14);
      CHECK(std::abs(w[i] - w[n - 1 - i]) < 1e-14);
      wsum += w[i];
    }
    CHECK(std::abs(wsum - 2.0) < 1e-14);
    // Exactness on even monomials up to degree 2n-2 (odd ones vanish by
    // symmetry): integral of x^k over [-1,1] is 2/(k+1).
    for (int k = 2; k <= 2 * n - 2; k += 2) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += w[i] * std::pow(x[i], k);
      CHECK(std::abs(s - 2.0 / (k + 1)) < 1e-13);
    }
  }
}

TEST_CASE("integrate_param on smooth real integrands") {
  QuadOptions opts;
  opts.rel_tol = 1e-12;

  const QuadResult cube = integrate_param(
      [](double x) { return Cx(x * x * x, 0.0); }, 0.0, 2.0, opts);
  REQUIRE(cube.converged);
  CHECK(std::abs(cube.value - Cx(4.0, 0.0)) < 1e-12);

  const QuadResult expdec = integrate_param(
      [](double x) { return Cx(std::exp(-x), 0.0); }, 0.0, 40.0, opts);
  REQUIRE(expdec.converged);
  CHECK(std::abs(expdec.value.real() - (1.0 - std::exp(-40.0))) < 1e-12);
  CHECK(expdec.l1 == doctest::Approx(1.0).epsilon(1e-6));

  // Oscillatory: integral of sin(50 x) over [0, 1] = (1 - cos 50)/50.
  const QuadResult osc = integrate_param(
      [](double x) { return Cx(std::sin(50.0 * x), 0.0); }, 0.0, 1.0, opts);
  REQUIRE(osc.converged);
  CHECK(std::abs(osc.value.real() - (1.0 - std::cos(50.0)) / 50.0) < 1e-12);

  // Complex-valued integrand: integral of e^{ix} over [0, pi] = 2i.
  const QuadResult cplx = integrate_param(
      [](double x) { return std::exp(Cx(0.0, x)); }, 0.0, kPi, opts);
  REQUIRE(cplx.converged);
  CHECK(std::abs(cplx.value - Cx(0.0, 2.0)) < 1e-12);
}

TEST_CASE("orientation and degenerate interval") {
  QuadOptions opts;
  const QuadResult fwd =
      integrate_param([](double x) { return Cx(x, 0.0); }, 0.0, 1.0, opts);
  const QuadResult rev =
      integrate_param([](double x) { return Cx(x, 0.0); }, 1.0, 0.0, opts);
  CHECK(std::abs(fwd.value + rev.value) < 1e-14);

  const QuadResult zero =
      integrate_param([](double x) { return Cx(x, 0.0); }, 0.7, 0.7, opts);
  CHECK(zero.converged);
  CHECK(zero.value == Cx(0.0, 0.0));
  CHECK(zero.evals == 0);
}

TEST_CASE("interior breaks are honoured and help kinked integrands") {
  QuadOptions opts;
  opts.rel_tol = 1e-13;
  // |x - 1/3| has a kink; seeding the kink keeps the panel count low.
  const auto f = [](double x) { return Cx(std::abs(x - 1.0 / 3.0), 0.0); };
  const QuadResult with_break =
      integrate_param(f, 0.0, 1.0, opts, {1.0 / 3.0});
  REQUIRE(with_break.converged);
  const double exact = (1.0 / 9.0 + 4.0 / 9.0) / 2.0;
  CHECK(std::abs(with_break.value.real() - exact) < 1e-13);
  // Breaks outside (a, b) are ignored rather than crashing.
  const QuadResult stray =
      integrate_param(f, 0.0, 1.0, opts, {-5.0, 0.5, 9.0});
  REQUIRE(stray.converged);
  CHECK(std::abs(stray.value.real() - exact) < 1e-10);
}

TEST_CASE("budget exhaustion reports converged = false") {
  QuadOptions opts;
  opts.rel_tol = 1e-14;
  opts.max_evals = 120;  // a handful of panels only
  const QuadResult r = integrate_param(
      [](double x) { return Cx(std::sin(5000.0 * x), 0.0); }, 0.0, 1.0, opts);
  CHECK_FALSE(r.converged);
  CHECK(r.evals <= opts.max_evals);
  CHECK(r.err > 0.0);
}

TEST_CASE("ray pieces integrate decaying tails accurately") {
  QuadOptions opts;
  opts.rel_tol = 1e-12;
  opts.max_evals = 100000;
  // integral over the outward ray at angle 0 from 1 to 60 of e^{-zeta}
  // dzeta = e^{-1} - e^{-60}.
  const ContourPiece ray{RayPiece{1.0, 0.0, RayDirection::outward}};
  const QuadResult r = integrate_piece(
      ray, [](Cx zeta) { return std::exp(-zeta); }, 60.0, opts);
  REQUIRE(r.converged);
  CHECK(std::abs(r.value.real() - std::exp(-1.0)) < 1e-12);

  // Inward traversal flips the sign.
  const ContourPiece in{RayPiece{1.0, 0.0, RayDirection::inward}};
  const QuadResult ri = integrate_piece(
      in, [](Cx zeta) { return std::exp(-zeta); }, 60.0, opts);
  REQUIRE(ri.converged);
  CHECK(std::abs(ri.value + r.value) < 1e-12);
}

TEST_CASE("arc pieces respect orientation") {
  QuadOptions opts;
  opts.rel_tol = 1e-12;
  // Counterclockwise half circle around 0 at radius 2: integral of
  // dzeta/zeta = i pi; the clockwise version gives -i pi.
  const ContourPiece ccw{ArcPiece{2.0, 0.0, kPi}};
  const ContourPiece cw{ArcPiece{2.0, kPi, 0.0}};
  const auto inv = [](Cx zeta) { return 1.0 / zeta; };
  const QuadResult a = integrate_piece(ccw, inv, 1.0, opts);
  const QuadResult b = integrate_piece(cw, inv, 1.0, opts);
  REQUIRE(a.converged);
  REQUIRE(b.converged);
  CHECK(std::abs(a.value - Cx(0.0, kPi)) < 1e-12);
  CHECK(std::abs(b.value + a.value) < 1e-13);
}
