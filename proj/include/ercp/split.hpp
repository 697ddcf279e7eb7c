#pragma once

#include <cstddef>
#include <vector>

#include "ercp/rng.hpp"

namespace ercp {

struct SplitFractions {
    double f1 = 0.5;
    double f2 = 0.25;
    double f3 = 0.25;
};

// Disjoint index partition: train / score-calibration / temperature-validation.
struct ThreeWaySplit {
    std::vector<std::size_t> i1;
    std::vector<std::size_t> i2;
    std::vector<std::size_t> i3;
};

// Uniformly random partition of {0,...,n-1} with part sizes
// floor(n*f1), floor(n*f2), remainder. Deterministic given rng.
// A part with fraction exactly 0 may be empty (precomputed-logits mode);
// a positive fraction whose part comes out empty raises std::invalid_argument.
ThreeWaySplit three_way_split(std::size_t n, SplitFractions fractions, RandomSource rng);

}  // namespace ercp
