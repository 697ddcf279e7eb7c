#include "ercp/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ercp {

ThreeWaySplit three_way_split(std::size_t n, SplitFractions fractions, RandomSource rng) {
    const double f1 = fractions.f1, f2 = fractions.f2, f3 = fractions.f3;
    if (f1 < 0 || f2 < 0 || f3 < 0 || std::abs(f1 + f2 + f3 - 1.0) > 1e-9)
        throw std::invalid_argument("three_way_split: fractions must be nonnegative and sum to 1");
    if (n < 3) throw std::invalid_argument("three_way_split: need n >= 3");

    // floor with a tolerance so e.g. 10 * 0.3 lands on 3, not 2.
    const auto part = [n](double f) {
        return static_cast<std::size_t>(std::floor(static_cast<double>(n) * f + 1e-9));
    };
    const std::size_t n1 = part(f1);
    const std::size_t n2 = part(f2);
    const std::size_t n3 = n - n1 - n2;
    if ((f1 > 0 && n1 == 0) || (f2 > 0 && n2 == 0) || (f3 > 0 && n3 == 0))
        throw std::invalid_argument("three_way_split: n too small to make all parts nonempty");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    auto eng = rng.engine();
    std::shuffle(idx.begin(), idx.end(), eng);

    ThreeWaySplit split;
    split.i1.assign(idx.begin(), idx.begin() + n1);
    split.i2.assign(idx.begin() + n1, idx.begin() + n1 + n2);
    split.i3.assign(idx.begin() + n1 + n2, idx.end());
    return split;
}

}  // namespace ercp
