#pragma once

#include <functional>
#include <map>
#include <string>

#include "crex/tensor.hpp"

namespace crex {

// Central-difference check of analytic gradients.
//
// loss_fn must (a) return the loss for the current parameter values without
// touching gradients when called with accumulate=false, and (b) additionally
// accumulate analytic gradients into the store when accumulate=true.  It has
// to be deterministic: disable dropout or pin its masks.
//
// Returns the worst relative error per parameter,
//   |analytic - numeric| / max(|analytic|, |numeric|, floor)
// with floor 1e-4 so that near-zero gradients are compared absolutely at the
// scale the check is meant to detect.
std::map<std::string, real> grad_check(
    const std::function<real(bool accumulate)>& loss_fn, ParameterStore& store,
    real epsilon = real(1e-5));

real grad_check_max(const std::function<real(bool)>& loss_fn,
                    ParameterStore& store, real epsilon = real(1e-5));

}  // namespace crex
