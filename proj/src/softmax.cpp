#include "ercp/softmax.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ercp {

ProbVector softmax(const LogitVector& z) {
    if (z.empty()) throw std::invalid_argument("softmax: empty logit vector");
    for (double v : z) {
        if (!std::isfinite(v)) throw std::invalid_argument("softmax: non-finite logit");
    }
    const double m = *std::max_element(z.begin(), z.end());
    ProbVector p(z.size());
    double sum = 0.0;
    for (std::size_t k = 0; k < z.size(); ++k) {
        p[k] = std::exp(z[k] - m);
        sum += p[k];
    }
    for (double& v : p) v /= sum;
    return p;
}

int rank_of_label(const ProbVector& p, int y) {
    if (y < 0 || static_cast<std::size_t>(y) >= p.size())
        throw std::invalid_argument("rank_of_label: label out of range");
    const double py = p[static_cast<std::size_t>(y)];
    int rank = 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] > py) ++rank;
        else if (p[k] == py && static_cast<int>(k) < y) ++rank;
    }
    return rank;
}

int argmax_index(const std::vector<double>& v) {
    if (v.empty()) throw std::invalid_argument("argmax_index: empty vector");
    return static_cast<int>(std::max_element(v.begin(), v.end()) - v.begin());
}

}  // namespace ercp
