#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ercp/metrics.hpp"
#include "ercp/rng.hpp"
#include "ercp/temperature.hpp"
#include "ercp/types.hpp"

namespace ercp {

// Parsed logit CSV: header `label,z_0,...,z_{K-1}`, label a non-negative
// integer below K or empty (unlabeled), logits decimal floats.
struct LogitTable {
    int n_classes = 0;
    std::vector<std::optional<int>> labels;
    std::vector<LogitVector> logits;

    std::size_t size() const { return logits.size(); }
    bool fully_labeled() const;
};

// Strict parser; malformed headers, ragged rows, bad labels and non-finite
// values raise std::runtime_error naming the offending line.
LogitTable load_logits(const std::string& path);

// Inverse of load_logits; values round-trip losslessly (%.17g).
void save_logits(const LogitTable& table, const std::string& path);

// Attaches one uniform randomizer per row. Requires a fully labeled table.
std::vector<LabeledExample> attach_randomizers(const LogitTable& table, RandomSource rng);

// Report CSV: header `dataset,score,alpha,trial,coverage,avg_size`, floats
// with 6 decimals, rows sorted by (dataset, score, alpha, trial).
void save_report(std::vector<EvalRow> rows, const std::string& path);
std::vector<EvalRow> load_report(const std::string& path);

// Sweep CSV: header `temperature,avg_size,coverage_d3,threshold`.
void save_sweep(const SweepResult& sweep, const std::string& path);

// Prediction-set file: header line `prediction_set`, then one line per point
// of semicolon-joined class indices (an empty line is an empty set).
void save_prediction_sets(const std::vector<PredictionSet>& sets, const std::string& path);

}  // namespace ercp
