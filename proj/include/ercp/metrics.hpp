#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ercp/conformal.hpp"
#include "ercp/temperature.hpp"
#include "ercp/types.hpp"

namespace ercp {

struct EvalRow {
    std::string dataset;
    std::string score;
    double alpha = 0.0;
    int trial = 0;
    double coverage = 0.0;
    double avg_size = 0.0;
};

// Correctness x entropy diagnostic: counts per (argmax == label, H <= threshold).
struct ScenarioCounts {
    std::size_t correct_low = 0;
    std::size_t correct_high = 0;
    std::size_t incorrect_low = 0;
    std::size_t incorrect_high = 0;

    std::size_t total() const { return correct_low + correct_high + incorrect_low + incorrect_high; }
};

// Mean of 1(label in set). Throws on empty or mismatched lengths.
double empirical_coverage(const std::vector<PredictionSet>& sets, const std::vector<int>& labels);

// Mean set cardinality. Throws on empty.
double average_size(const std::vector<PredictionSet>& sets);

// Per-class coverage fractions; classes absent from labels get nullopt.
std::vector<std::optional<double>> label_conditional_coverage(const std::vector<PredictionSet>& sets,
                                                              const std::vector<int>& labels,
                                                              int n_classes);

// Buckets each example by (argmax(logits) == label) x (entropy <= threshold).
// The threshold must lie in (0, log K).
ScenarioCounts scenario_breakdown(const std::vector<LabeledExample>& examples,
                                  double entropy_threshold);

// Same, with threshold = the ceil(n/2)-th smallest predictive entropy.
ScenarioCounts scenario_breakdown(const std::vector<LabeledExample>& examples);

double median_entropy(const std::vector<LabeledExample>& examples);

// One requested score function, by name as it appears in reports
// ("thr","aps","raps","saps","rank","er").
struct ScoreRequest {
    std::string name;
    ScoreSpec spec;   // base spec; for "er" this is the base score of the sweep
    bool is_er = false;
};

struct TrialConfig {
    std::string dataset = "data";
    std::vector<ScoreRequest> scores;
    std::vector<double> alphas;
    int trials = 10;
    double calib_fraction = 0.5;   // per-trial pool split: calibration vs test
    double er_val_fraction = 0.5;  // D3 share within the calibration pool (ER only)
    TemperatureGrid grid = TemperatureGrid::log_spaced();
    int jobs = 0;  // 0 = hardware concurrency
};

// Sweep bookkeeping for the ER score, one per (trial, alpha).
struct TrialSweep {
    int trial = 0;
    double alpha = 0.0;
    SweepResult sweep;
};

struct TrialsResult {
    std::vector<EvalRow> rows;       // sorted by (dataset, score, alpha, trial)
    std::vector<TrialSweep> sweeps;  // empty unless an ER score was requested
    ScenarioCounts scenarios;        // pooled diagnostic at the median entropy
};

// The repeated-splits evaluation protocol: trial t re-splits the pool into
// calibration/test with streams derived from rng.substream(t), drawing fresh
// per-example U values; every score and alpha share the trial's split and U
// draws. Rows are a deterministic function of (data, config, rng) regardless
// of jobs.
TrialsResult run_trials(const TrialConfig& config, const std::vector<LogitVector>& logits,
                        const std::vector<int>& labels, RandomSource rng);

}  // namespace ercp
