#include "commgan/losses.hpp"

#include <cmath>

namespace commgan {

LossGrad softmax_ce(const Matrix& logits, const std::vector<int>& targets) {
  const Eigen::Index batch = logits.rows();
  const Eigen::Index num_classes = logits.cols();
  if (static_cast<Eigen::Index>(targets.size()) != batch) {
    throw std::invalid_argument("softmax_ce: targets length must equal batch size");
  }
  if (!logits.allFinite()) {
    throw std::invalid_argument("softmax_ce: non-finite logits");
  }

  LossGrad out;
  out.grad.resize(batch, num_classes);
  double loss_sum = 0.0;
  for (Eigen::Index r = 0; r < batch; ++r) {
    const int target = targets[static_cast<std::size_t>(r)];
    if (target < 0 || target >= num_classes) {
      throw std::domain_error("softmax_ce: target out of range");
    }
    const double row_max = logits.row(r).maxCoeff();
    Eigen::RowVectorXd shifted = logits.row(r).array() - row_max;
    Eigen::RowVectorXd expv = shifted.array().exp();
    const double denom = expv.sum();
    loss_sum += std::log(denom) - shifted(target);
    out.grad.row(r) = expv / denom;
    out.grad(r, target) -= 1.0;
  }
  out.grad /= static_cast<double>(batch);
  out.loss = loss_sum / static_cast<double>(batch);
  return out;
}

LossGrad mse(const Matrix& pred, const Matrix& target) {
  if (pred.rows() != target.rows() || pred.cols() != target.cols()) {
    throw std::invalid_argument("mse: shape mismatch");
  }
  const double count = static_cast<double>(pred.size());
  LossGrad out;
  Matrix diff = pred - target;
  out.loss = diff.squaredNorm() / count;
  out.grad = (2.0 / count) * diff;
  return out;
}

}  // namespace commgan
