#pragma once

#include <functional>

#include "commgan/mlp.hpp"

namespace commgan {

// Scalar loss evaluated at a candidate net. When grads is non-null the probe
// must also fill analytic parameter gradients for that net.
using LossProbe = std::function<double(const Mlp&, Gradients*)>;

// Central-difference check of the probe's analytic gradients over every
// parameter. Returns the worst relative error (absolute below a 1e-3
// magnitude floor, where "relative" loses meaning).
double grad_check(const Mlp& net, const LossProbe& probe, double step = 1e-5);

}  // namespace commgan
