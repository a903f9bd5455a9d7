#pragma once

#include <functional>

#include "nmir/params.hpp"

namespace nmir {

// Central-difference gradient check. `f` evaluates the scalar objective at
// the store's current parameter values without touching gradients. The
// analytic gradients must already be in the store's gradient buffers.
//
// Returns max over parameter elements of |analytic - numeric| /
// max(|analytic|, |numeric|, 1), i.e. relative error with an absolute
// floor of 1 so near-zero gradients are compared absolutely.
double finite_diff_check(const std::function<double(const ParamStore&)>& f, ParamStore& ps,
                         double step);

}  // namespace nmir
