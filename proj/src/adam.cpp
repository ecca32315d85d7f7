#include "commgan/adam.hpp"

#include <cmath>

namespace commgan {

AdamState make_adam_state(const Mlp& net, double learning_rate) {
  if (learning_rate <= 0.0) {
    throw std::invalid_argument("make_adam_state: learning rate must be positive");
  }
  AdamState state;
  state.learning_rate = learning_rate;
  for (const DenseLayer& layer : net.layers) {
    state.weight_m.push_back(Matrix::Zero(layer.weights.rows(), layer.weights.cols()));
    state.weight_v.push_back(Matrix::Zero(layer.weights.rows(), layer.weights.cols()));
    state.bias_m.push_back(Vector::Zero(layer.bias.size()));
    state.bias_v.push_back(Vector::Zero(layer.bias.size()));
  }
  return state;
}

void adam_step(AdamState& state, Mlp& net, const Gradients& grads) {
  const std::size_t num_layers = net.layers.size();
  if (grads.weight_grads.size() != num_layers || grads.bias_grads.size() != num_layers ||
      state.weight_m.size() != num_layers) {
    throw std::invalid_argument("adam_step: shape mismatch between state, net, and grads");
  }
  for (std::size_t k = 0; k < num_layers; ++k) {
    if (grads.weight_grads[k].rows() != net.layers[k].weights.rows() ||
        grads.weight_grads[k].cols() != net.layers[k].weights.cols() ||
        grads.bias_grads[k].size() != net.layers[k].bias.size()) {
      throw std::invalid_argument("adam_step: gradient shapes do not mirror the net");
    }
    if (!grads.weight_grads[k].allFinite() || !grads.bias_grads[k].allFinite()) {
      throw NumericError("adam_step: non-finite gradient, no update applied",
                         static_cast<int>(k));
    }
  }

  state.step_count += 1;
  const double t = static_cast<double>(state.step_count);
  const double m_correction = 1.0 - std::pow(state.beta1, t);
  const double v_correction = 1.0 - std::pow(state.beta2, t);

  for (std::size_t k = 0; k < num_layers; ++k) {
    auto update = [&](auto& m, auto& v, auto& param, const auto& grad) {
      m = state.beta1 * m + (1.0 - state.beta1) * grad;
      v = state.beta2 * v + (1.0 - state.beta2) * grad.cwiseProduct(grad);
      param.array() -= state.learning_rate * (m.array() / m_correction) /
                       ((v.array() / v_correction).sqrt() + state.epsilon);
    };
    update(state.weight_m[k], state.weight_v[k], net.layers[k].weights, grads.weight_grads[k]);
    update(state.bias_m[k], state.bias_v[k], net.layers[k].bias, grads.bias_grads[k]);
  }
}

}  // namespace commgan
