#include "commgan/mlp.hpp"

#include <cmath>
#include <cstring>

namespace commgan {

Mlp init_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             RngStream& rng) {
  if (dims.size() < 2) {
    throw std::invalid_argument("init_mlp: need at least [in, out] dims");
  }
  if (activations.size() != dims.size() - 1) {
    throw std::invalid_argument("init_mlp: activation plan length must equal layer count");
  }
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("init_mlp: all widths must be >= 1");
  }

  Mlp net;
  net.activations = activations;
  net.layers.resize(dims.size() - 1);
  for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
    const int fan_in = dims[k];
    const int fan_out = dims[k + 1];
    const double var = (activations[k] == Activation::kRelu) ? 2.0 / fan_in : 1.0 / fan_in;
    const double std_dev = std::sqrt(var);
    Matrix w(fan_out, fan_in);
    for (int i = 0; i < fan_out; ++i) {
      for (int j = 0; j < fan_in; ++j) {
        w(i, j) = std_dev * rng.normal();
      }
    }
    net.layers[k].weights = std::move(w);
    net.layers[k].bias = Vector::Zero(fan_out);
  }
  return net;
}

Matrix mlp_forward(const Mlp& net, const Matrix& input, Tape* tape) {
  if (net.layers.empty()) throw std::invalid_argument("mlp_forward: empty net");
  if (input.cols() != net.input_width()) {
    throw std::invalid_argument("mlp_forward: input width mismatch");
  }
  if (!input.allFinite()) {
    throw std::invalid_argument("mlp_forward: non-finite input");
  }

  if (tape) {
    tape->layer_inputs.clear();
    tape->pre_activations.clear();
    tape->batch = static_cast<int>(input.rows());
  }

  Matrix act = input;
  for (int k = 0; k < net.layer_count(); ++k) {
    const DenseLayer& layer = net.layers[k];
    Matrix pre = act * layer.weights.transpose();
    pre.rowwise() += layer.bias.transpose();
    if (!pre.allFinite()) {
      throw NumericError("mlp_forward: non-finite output at layer " + std::to_string(k), k);
    }
    if (tape) {
      tape->layer_inputs.push_back(std::move(act));
      tape->pre_activations.push_back(pre);
    }
    act = (net.activations[k] == Activation::kRelu) ? pre.cwiseMax(0.0) : std::move(pre);
  }
  return act;
}

Gradients mlp_backward(const Mlp& net, const Tape& tape, const Matrix& output_grad) {
  const int num_layers = net.layer_count();
  if (static_cast<int>(tape.layer_inputs.size()) != num_layers ||
      static_cast<int>(tape.pre_activations.size()) != num_layers) {
    throw std::invalid_argument("mlp_backward: tape does not match net layer count");
  }
  if (output_grad.rows() != tape.batch || output_grad.cols() != net.output_width()) {
    throw std::invalid_argument("mlp_backward: output_grad shape mismatch");
  }
  for (int k = 0; k < num_layers; ++k) {
    if (tape.layer_inputs[k].cols() != net.layers[k].weights.cols() ||
        tape.pre_activations[k].cols() != net.layers[k].weights.rows()) {
      throw std::invalid_argument("mlp_backward: tape widths do not match net");
    }
  }

  Gradients grads;
  grads.weight_grads.resize(num_layers);
  grads.bias_grads.resize(num_layers);

  Matrix g = output_grad;
  for (int k = num_layers - 1; k >= 0; --k) {
    if (net.activations[k] == Activation::kRelu) {
      g = g.cwiseProduct((tape.pre_activations[k].array() > 0.0).cast<double>().matrix());
    }
    grads.weight_grads[k] = g.transpose() * tape.layer_inputs[k];
    grads.bias_grads[k] = g.colwise().sum().transpose();
    g = g * net.layers[k].weights;  // becomes grad w.r.t. layer k's input
  }
  grads.input_grad = std::move(g);
  return grads;
}

std::uint64_t weight_hash(const Mlp& net) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&h](double value) {
    std::uint64_t bits;
    std::memcpy(&bits, &value, sizeof(bits));
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (bits >> (8 * byte)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  for (const DenseLayer& layer : net.layers) {
    for (Eigen::Index i = 0; i < layer.weights.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weights.cols(); ++j) {
        feed(layer.weights(i, j));
      }
    }
    for (Eigen::Index i = 0; i < layer.bias.size(); ++i) feed(layer.bias(i));
  }
  return h;
}

}  // namespace commgan
