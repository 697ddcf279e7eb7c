#include "ercp/rng.hpp"

#include <vector>

namespace ercp {

std::vector<double> uniform_draws(std::size_t n, RandomSource rng) {
    auto eng = rng.engine();
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> out(n);
    for (auto& v : out) v = dist(eng);
    return out;
}

}  // namespace ercp
