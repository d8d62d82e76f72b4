#pragma once

#include "maoea/core.hpp"

#include <span>

namespace maoea::detail {

/// WFG1..WFG9 objective vector. `which` is 1-based, `k` the position-parameter
/// count, `z` the raw decision vector with z_i in [0, 2i].
ObjectiveVector evaluate_wfg(int which, int objectives, int k, std::span<const double> z);

/// Front point for underlying position parameters `x` (length M-1) with the
/// distance term at its optimum (x_M = 0).
ObjectiveVector wfg_shape(int which, int objectives, std::span<const double> x);

} // namespace maoea::detail
