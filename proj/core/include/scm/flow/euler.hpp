#pragma once

#include <functional>

#include "scm/flow/rectified_flow.hpp"

namespace scm::flow {

using VelocityFn = std::function<LatentVideoBatch(const LatentVideoBatch&, double t)>;

// Called with the state after each Euler update; lets callers pin latents
// during reference-conditioned sampling.
using StateHook = std::function<void(LatentVideoBatch&, double t_next)>;

// Integrates dz = v(z, t) dt from t = 1 down to t = 0 on a uniform grid
// with dt = -1/steps; z_init is the t = 1 state. Throws DivergenceError if
// the velocity or state goes non-finite.
LatentVideoBatch euler_sample(const VelocityFn& velocity, LatentVideoBatch z_init, int steps,
                              const StateHook& hook = nullptr);

}  // namespace scm::flow
