#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "anacont/branches.hpp"
#include "anacont/errors.hpp"
#include "oracles.hpp"

using anacont::arg_branch;
using anacont::BranchCut;
using anacont::Cx;
using anacont::kPi;
using anacont::kTwoPi;
using anacont::log_branch;
using anacont::power_cut0;

TEST_CASE("arg_branch stays in [theta, theta + 2pi) for random points") {
  auto gen = oracle::rng(1);
  std::uniform_real_distribution<double> coord(-10.0, 10.0);
  const double thetas[] = {0.0, 0.7, -kPi, kPi / 3.0, -2.9, 3.0};
  for (double theta : thetas) {
    const BranchCut cut{theta};
    for (int i = 0; i < 200000; ++i) {
      const Cx z(coord(gen), coord(gen));
      if (z == Cx(0.0, 0.0)) continue;
      const double a = arg_branch(z, cut);
      CHECK(a >= theta);
      CHECK(a < theta + kTwoPi);
      // The reported angle must actually point at z.
      const double base = std::arg(z);
      const double diff = std::remainder(a - base, kTwoPi);
      CHECK(std::abs(diff) < 1e-12);
    }
  }
}

TEST_CASE("exp(log_branch(z)) recovers z") {
  auto gen = oracle::rng(2);
  std::uniform_real_distribution<double> coord(-5.0, 5.0);
  const double thetas[] = {0.0, 1.1, -kPi, 2.7};
  for (double theta : thetas) {
    const BranchCut cut{theta};
    for (int i = 0; i < 50000; ++i) {
      const Cx z(coord(gen), coord(gen));
      if (std::abs(z) < 1e-3) continue;
      const Cx w = std::exp(log_branch(z, cut));
      CHECK(std::abs(w - z) <= 1e-13 * std::abs(z));
    }
  }
}

TEST_CASE("power_cut0 at integer exponents matches repeated multiplication") {
  auto gen = oracle::rng(3);
  std::uniform_real_distribution<double> coord(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const Cx z(coord(gen), coord(gen));
    if (std::abs(z) < 0.05) continue;
    for (int n = -20; n <= 20; ++n) {
      Cx direct(1.0, 0.0);
      for (int k = 0; k < std::abs(n); ++k) direct *= z;
      if (n < 0) direct = 1.0 / direct;
      const Cx viaexp = power_cut0(z, Cx(n, 0.0));
      const double scale = std::abs(direct);
      CHECK(std::abs(viaexp - direct) <= 1e-12 * (1.0 + scale));
    }
  }
}

TEST_CASE("power_cut0 on the negative axis uses Arg_0 = pi") {
  // (-1)^i = exp(i * Log_0(-1)) = exp(i * i * pi) = e^{-pi}.
  const Cx v = power_cut0(Cx(-1.0, 0.0), Cx(0.0, 1.0));
  CHECK(std::abs(v - Cx(std::exp(-kPi), 0.0)) < 1e-14);
}

TEST_CASE("points on the cut ray report exactly theta (lower edge)") {
  const double thetas[] = {0.0, 0.9, -kPi, -1.3};
  for (double theta : thetas) {
    const BranchCut cut{theta};
    for (double r : {1e-3, 0.5, 1.0, 7.5, 1e4}) {
      const Cx z = r * std::exp(Cx(0.0, theta));
      CHECK(arg_branch(z, cut) == theta);
      // Tiny numerical wobble on either side still snaps to the ray angle.
      const Cx zp = r * std::exp(Cx(0.0, theta + 1e-14));
      const Cx zm = r * std::exp(Cx(0.0, theta - 1e-14));
      CHECK(arg_branch(zp, cut) == theta);
      CHECK(arg_branch(zm, cut) == theta);
    }
  }
}

TEST_CASE("arg_branch jumps by 2pi across the cut and is continuous elsewhere") {
  const BranchCut cut{0.0};
  const double eps = 1e-9;
  // Just above the positive real axis: angle ~ eps. Just below: ~ 2pi - eps.
  CHECK(arg_branch(Cx(2.0, 2.0 * 1e-9), cut) == doctest::Approx(eps).epsilon(1e-3));
  CHECK(arg_branch(Cx(2.0, -2.0 * 1e-9), cut) ==
        doctest::Approx(kTwoPi - eps).epsilon(1e-3));
  // Away from the cut the function is locally Lipschitz.
  auto gen = oracle::rng(4);
  std::uniform_real_distribution<double> ang(0.1, kTwoPi - 0.1);
  std::uniform_real_distribution<double> rad(0.2, 5.0);
  for (int i = 0; i < 20000; ++i) {
    const double a0 = ang(gen);
    const double r0 = rad(gen);
    const Cx z0 = r0 * std::exp(Cx(0.0, a0));
    const Cx z1 = z0 * std::exp(Cx(0.0, 1e-7));
    const double d = arg_branch(z1, cut) - arg_branch(z0, cut);
    CHECK(std::abs(d - 1e-7) < 1e-12);
  }
}

TEST_CASE("zero argument is rejected") {
  CHECK_THROWS_AS(arg_branch(Cx(0.0, 0.0), BranchCut{0.3}),
                  anacont::DomainError);
  CHECK_THROWS_AS(log_branch(Cx(0.0, 0.0), BranchCut{0.0}),
                  anacont::DomainError);
  CHECK_THROWS_AS(power_cut0(Cx(0.0, 0.0), Cx(2.0, 0.0)),
                  anacont::DomainError);
}
