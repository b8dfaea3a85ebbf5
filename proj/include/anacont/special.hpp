#pragma once

#include "anacont/common.hpp"

namespace anacont {

// Dilogarithm Li2(z) = sum_{n>=1} z^n / n^2, continued to the cut plane
// C \ [1, inf). Throws EvaluationError on the cut itself.
Cx li2(Cx z);

}  // namespace anacont
