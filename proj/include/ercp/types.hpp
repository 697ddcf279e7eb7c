#pragma once

#include <cstddef>
#include <vector>

namespace ercp {

// Logits and probabilities share the representation; the names track intent.
// A ProbVector is a point on the K-simplex (entries >= 0, sum == 1 within 1e-9).
using LogitVector = std::vector<double>;
using ProbVector = std::vector<double>;

// One calibration/test unit: model logits, the observed label, and the
// uniform randomizer U drawn once per example and reused for every candidate
// label (keeps prediction sets nested across alpha).
struct LabeledExample {
    LogitVector logits;
    int label = 0;
    double u = 1.0;
};

// Subset of {0,...,K-1}, kept sorted ascending. May be empty.
struct PredictionSet {
    std::vector<int> members;

    bool contains(int label) const;
    std::size_t size() const { return members.size(); }
    bool operator==(const PredictionSet&) const = default;
};

// Minimal dense row-major matrix for the synthetic generator and trainer.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    const double* row(std::size_t i) const { return data.data() + i * cols; }
    double* row(std::size_t i) { return data.data() + i * cols; }
};

}  // namespace ercp
