#pragma once

#include <vector>

#include "ercp/conformal.hpp"
#include "ercp/split.hpp"
#include "ercp/trainer.hpp"

namespace ercp {

// Strictly increasing positive temperatures.
struct TemperatureGrid {
    std::vector<double> values;

    explicit TemperatureGrid(std::vector<double> v);

    // count log-spaced values in [t_min, t_max]; values within 1e-9 of 1.0
    // snap to exactly 1.0. The default grid (0.05, 20, 41) brackets 1.0
    // symmetrically and contains it.
    static TemperatureGrid log_spaced(double t_min = 0.05, double t_max = 20.0, int count = 41);
};

struct SweepRow {
    double temperature = 0.0;
    double avg_size = 0.0;
    double coverage_d3 = 0.0;
    double threshold = 0.0;
};

// Outcome of the temperature sweep: one row per grid value, the selected
// temperature, and the final calibration on D2 union D3 at that temperature.
struct SweepResult {
    std::vector<SweepRow> per_t;
    double t_star = 1.0;
    CalibrationResult final;
};

// For each grid temperature: ER scores on d2, conformal threshold, prediction
// sets on d3, average size. Selects t_star = argmin of the average size (ties
// broken toward the temperature closest to 1.0, then toward the smaller one)
// and finalizes on d2 union d3.
SweepResult sweep_temperatures(const std::vector<LabeledExample>& d2,
                               const std::vector<LabeledExample>& d3, double alpha,
                               const TemperatureGrid& grid, const ScoreSpec& base);

// ER calibration with a fixed temperature on the pooled calibration data.
CalibrationResult finalize(const std::vector<LabeledExample>& d2_union_d3, double t_star,
                           double alpha, const ScoreSpec& base);

struct Algorithm1Result {
    ThreeWaySplit split;
    SweepResult sweep;
    std::vector<PredictionSet> sets;  // one per unlabeled point
    std::vector<double> unlabeled_u;  // the U draws used for those sets
};

// The full pipeline on precomputed logits: split indices (i1 is ignored; pass
// f1 = 0 to use all data), sweep temperatures on D2/D3, recalibrate on
// D2 union D3 with T*, and threshold every unlabeled point. Unlabeled U
// draws come from rng.substream(1); the split uses rng.substream(0).
Algorithm1Result run_algorithm1(const std::vector<LabeledExample>& labeled,
                                const std::vector<LogitVector>& unlabeled, double alpha,
                                const TemperatureGrid& grid, SplitFractions fractions,
                                RandomSource rng, const ScoreSpec& base = ScoreSpec::aps());

struct TrainedAlgorithm1Result {
    ThreeWaySplit split;
    SweepResult sweep;
    std::vector<PredictionSet> sets;
    std::vector<double> unlabeled_u;
    SoftmaxClassifier model;
};

// Feature-mode variant: trains the built-in multinomial logistic classifier
// on D1, scores D2/D3/new points with its logits, then proceeds as above.
TrainedAlgorithm1Result run_algorithm1_trained(const Matrix& features, const std::vector<int>& labels,
                                               const Matrix& new_features, double alpha,
                                               const TemperatureGrid& grid, SplitFractions fractions,
                                               RandomSource rng,
                                               const ScoreSpec& base = ScoreSpec::aps(),
                                               const TrainerOptions& options = {});

}  // namespace ercp
