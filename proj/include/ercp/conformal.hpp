#pragma once

#include <span>
#include <variant>
#include <vector>

#include "ercp/entropy.hpp"
#include "ercp/scores.hpp"
#include "ercp/types.hpp"

namespace ercp {

// What produced the calibration scores: a plain score on softmax
// probabilities, or the entropy-reweighted score. monostate marks a
// CalibrationResult built from raw scores (no set construction possible).
using ScoringRule = std::variant<std::monostate, ScoreSpec, ErConfig>;

// Split-conformal threshold plus the metadata needed to build sets.
struct CalibrationResult {
    double threshold = 0.0;  // +inf when k exceeds n_cal
    double alpha = 0.0;
    std::size_t n_cal = 0;
    ScoringRule rule;
    int n_classes = 0;  // 0 = unknown (raw-score calibration)
};

// Conformity score of (z, y, u) under the rule.
double score_for(const LogitVector& z, int y, double u, const ScoringRule& rule);

// Scores of every candidate label with shared u.
std::vector<double> scores_for_all_labels(const LogitVector& z, double u, const ScoringRule& rule);

// Threshold = k-th smallest calibration score with k = ceil((1-alpha)(n+1)),
// or +inf when k > n. The threshold is a value, not an index: ties among
// calibration scores are kept. Throws on an empty score list or alpha
// outside (0,1).
CalibrationResult calibrate(std::span<const double> scores, double alpha);

// Scores the examples at their true labels under the rule, then calibrates.
// Fills rule and n_classes so the result can build prediction sets.
CalibrationResult calibrate_examples(const std::vector<LabeledExample>& examples, double alpha,
                                     const ScoringRule& rule);

// { y : score(z, y, u) <= threshold }. +inf threshold yields the full label
// set. Throws if the calibration has no rule/class count or K mismatches z.
PredictionSet predict_set(const LogitVector& z, double u, const CalibrationResult& cal);

// Fraction of test examples whose true label lands in its prediction set.
double coverage_check(const CalibrationResult& cal, const std::vector<LabeledExample>& test);

}  // namespace ercp
