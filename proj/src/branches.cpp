#include "anacont/branches.hpp"

#include <cmath>

#include "anacont/errors.hpp"

namespace anacont {

namespace {
// Tolerance (radians) inside which a point counts as lying on the cut ray.
constexpr double kCutSnap = 1e-13;
}  // namespace

double arg_branch(Cx z, BranchCut cut) {
  if (z == Cx(0.0, 0.0)) {
    throw DomainError("arg_branch: argument of zero is undefined");
  }
  // Offset from the cut angle, reduced to [0, 2*pi).
  double v = std::fmod(std::arg(z) - cut.theta, kTwoPi);
  if (v < 0.0) v += kTwoPi;
  // Points within kCutSnap of the cut ray belong to the lower edge: both a
  // tiny positive offset and an offset just below 2*pi report exactly 0.
  if (v < kCutSnap || kTwoPi - v < kCutSnap) v = 0.0;
  // Guard against fmod rounding placing v exactly at 2*pi.
  if (v >= kTwoPi) v = 0.0;
  return cut.theta + v;
}

Cx log_branch(Cx z, BranchCut cut) {
  return Cx(std::log(std::abs(z)), arg_branch(z, cut));
}

Cx power_cut0(Cx z, Cx zeta) {
  return std::exp(zeta * log_branch(z, BranchCut{0.0}));
}

}  // namespace anacont
