#pragma once

#include <cstdint>

#include "commgan/mlp.hpp"

namespace commgan {

// Per-parameter first/second moments mirroring an Mlp's shapes.
struct AdamState {
  std::vector<Matrix> weight_m, weight_v;
  std::vector<Vector> bias_m, bias_v;
  std::int64_t step_count = 0;
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

AdamState make_adam_state(const Mlp& net, double learning_rate);

// Standard bias-corrected Adam update, in place. Non-finite gradients throw
// and leave both net and state untouched.
void adam_step(AdamState& state, Mlp& net, const Gradients& grads);

}  // namespace commgan
