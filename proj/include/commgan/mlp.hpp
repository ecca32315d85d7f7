#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "commgan/rng.hpp"

namespace commgan {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Thrown when a forward/backward/update hits non-finite values. Carries the
// offending layer index when one is known (-1 otherwise).
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& msg, int layer_index = -1)
      : std::runtime_error(msg), layer_index_(layer_index) {}
  int layer_index() const { return layer_index_; }

 private:
  int layer_index_;
};

enum class Activation { kRelu, kLinear };

struct DenseLayer {
  Matrix weights;  // out x in
  Vector bias;     // out
};

// Plain fully connected stack. The activation plan has one tag per layer;
// the final layer stays linear (softmax lives in the fused loss).
struct Mlp {
  std::vector<DenseLayer> layers;
  std::vector<Activation> activations;

  int layer_count() const { return static_cast<int>(layers.size()); }
  int input_width() const { return static_cast<int>(layers.front().weights.cols()); }
  int output_width() const { return static_cast<int>(layers.back().weights.rows()); }
};

// Per-layer caches from one forward pass, consumed by mlp_backward.
// Batches are stored one sample per row.
struct Tape {
  std::vector<Matrix> layer_inputs;     // input fed to each layer, B x in_k
  std::vector<Matrix> pre_activations;  // affine output of each layer, B x out_k
  int batch = 0;
};

struct Gradients {
  std::vector<Matrix> weight_grads;
  std::vector<Vector> bias_grads;
  Matrix input_grad;  // B x input_width, for chaining into an upstream net
};

// He init for ReLU-activated layers, variance 1/fan_in for linear ones,
// biases zero. dims = [in, hidden..., out].
Mlp init_mlp(const std::vector<int>& dims, const std::vector<Activation>& activations,
             RngStream& rng);

// Runs the stack on a B x input_width batch. When tape is non-null it is
// filled for a later backward pass.
Matrix mlp_forward(const Mlp& net, const Matrix& input, Tape* tape = nullptr);

// Reverse pass over a tape from the matching forward call. output_grad is
// d(loss)/d(output), B x output_width.
Gradients mlp_backward(const Mlp& net, const Tape& tape, const Matrix& output_grad);

// FNV-1a over the raw parameter bytes in declared order. Used by tests to
// prove which nets a training step touched.
std::uint64_t weight_hash(const Mlp& net);

}  // namespace commgan
