#pragma once

#include <cstdint>
#include <vector>

#include "ercp/logit_io.hpp"
#include "ercp/rng.hpp"
#include "ercp/types.hpp"

namespace ercp {

// Spherical Gaussian mixture with means class_separation * e_k and known
// posteriors. overconfidence scales the true log-posteriors: 1 gives a
// calibrated-by-construction classifier, > 1 the sharpened regime where
// miscalibrated models produce undersized sets.
struct SynthSpec {
    int n_classes = 10;
    int dim = 10;  // must be >= n_classes (means sit on coordinate axes)
    std::size_t n = 1000;
    double class_separation = 2.0;
    double overconfidence = 1.0;
    std::uint64_t seed = 0;
};

struct SyntheticData {
    Matrix features;
    std::vector<int> labels;
    LogitTable table;                    // labels + overconfidence-scaled log-posteriors
    std::vector<ProbVector> posteriors;  // exact Bayes posteriors, for oracle tests
};

SyntheticData generate_synthetic(const SynthSpec& spec);

}  // namespace ercp
