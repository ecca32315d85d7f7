#pragma once

#include <vector>

#include "commgan/mlp.hpp"

namespace commgan {

struct LossGrad {
  double loss = 0.0;
  Matrix grad;  // d(loss)/d(first argument), same shape as it
};

// Mean over the batch of -log softmax(logits)[target], max-subtracted for
// stability. grad is (softmax - onehot) / B.
LossGrad softmax_ce(const Matrix& logits, const std::vector<int>& targets);

// Mean of squared elementwise differences; grad is 2 (pred - target) / count.
LossGrad mse(const Matrix& pred, const Matrix& target);

}  // namespace commgan
