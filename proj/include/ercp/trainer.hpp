#pragma once

#include <cstdint>
#include <vector>

#include "ercp/types.hpp"

namespace ercp {

struct TrainerOptions {
    int epochs = 500;
    double lr = 0.5;
    // Zero-initialized weights plus full-batch gradient descent are already
    // deterministic; the seed is accepted for interface stability only.
    std::uint64_t seed = 0;
};

// Multinomial logistic regression, weights (d x K) plus bias (K).
struct SoftmaxClassifier {
    Matrix weights;
    std::vector<double> bias;
    std::vector<double> loss_history;  // mean cross-entropy per epoch, starting value included

    LogitVector logits(const double* x, std::size_t dim) const;
    LogitVector logits(const std::vector<double>& x) const;
    std::vector<LogitVector> logits_matrix(const Matrix& X) const;
    int predict(const std::vector<double>& x) const;
};

// Mean cross-entropy of the model on (X, y) and its gradient with respect to
// weights and bias. Exposed so the analytic gradient can be checked against
// finite differences.
double cross_entropy_loss(const Matrix& weights, const std::vector<double>& bias, const Matrix& X,
                          const std::vector<int>& y);
void cross_entropy_grad(const Matrix& weights, const std::vector<double>& bias, const Matrix& X,
                        const std::vector<int>& y, Matrix& grad_w, std::vector<double>& grad_b);

// Full-batch gradient descent on mean cross-entropy from zero-initialized
// weights. Throws std::runtime_error if the loss becomes non-finite
// (diverged; retry with a smaller lr).
SoftmaxClassifier train_softmax_classifier(const Matrix& X, const std::vector<int>& y,
                                           const TrainerOptions& options = {});

}  // namespace ercp
