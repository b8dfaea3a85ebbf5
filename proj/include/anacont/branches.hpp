#pragma once

#include "anacont/common.hpp"

namespace anacont {

// A branch cut along the ray {t*exp(i*theta) : t >= 0}. Arguments are
// reported in the half-open window [theta, theta + 2*pi).
struct BranchCut {
  double theta = 0.0;
};

// Argument of z in [cut.theta, cut.theta + 2*pi). Points numerically on the
// cut ray itself (within ~1e-13 rad of angle theta) report exactly theta,
// i.e. the cut belongs to its own lower edge. Throws DomainError for z == 0.
double arg_branch(Cx z, BranchCut cut);

// log|z| + i * arg_branch(z, cut).
Cx log_branch(Cx z, BranchCut cut);

// z^zeta = exp(zeta * Log_0 z) with the branch cut along [0, +inf),
// i.e. Arg_0 z in [0, 2*pi). Throws DomainError for z == 0.
Cx power_cut0(Cx z, Cx zeta);

}  // namespace anacont
