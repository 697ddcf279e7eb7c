#include "ercp/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ercp/softmax.hpp"

namespace ercp {

namespace {

void check_config(const ErConfig& cfg) {
    if (cfg.temperature <= 0.0 || !std::isfinite(cfg.temperature))
        throw std::invalid_argument("er: temperature must be > 0");
    if (cfg.entropy_floor <= 0.0) throw std::invalid_argument("er: entropy_floor must be > 0");
}

}  // namespace

double entropy(const ProbVector& p) {
    if (p.empty()) throw std::invalid_argument("entropy: empty probability vector");
    double h = 0.0;
    for (double v : p) {
        if (v > 0.0) h -= v * std::log(v);
    }
    return h;
}

double entropy_from_logits(const LogitVector& z) {
    if (z.empty()) throw std::invalid_argument("entropy_from_logits: empty logit vector");
    for (double v : z) {
        if (!std::isfinite(v)) throw std::invalid_argument("entropy_from_logits: non-finite logit");
    }
    const double m = *std::max_element(z.begin(), z.end());
    double sum = 0.0;
    double weighted = 0.0;  // sum of exp(z_k - m) * (z_k - m)
    for (double v : z) {
        const double e = std::exp(v - m);
        sum += e;
        weighted += e * (v - m);
    }
    return std::log(sum) - weighted / sum;
}

LogitVector reweight_logits(const LogitVector& z, const ErConfig& cfg) {
    check_config(cfg);
    const double h = entropy_from_logits(z);
    const double scale = std::max(h, cfg.entropy_floor) * cfg.temperature;
    LogitVector out(z.size());
    for (std::size_t k = 0; k < z.size(); ++k) out[k] = z[k] / scale;
    return out;
}

ProbVector er_probability(const LogitVector& z, const ErConfig& cfg) {
    return softmax(reweight_logits(z, cfg));
}

double er_conformity_score(const LogitVector& z, int y, double u, const ErConfig& cfg) {
    return score_example(er_probability(z, cfg), y, u, cfg.base);
}

std::vector<double> er_score_all_labels(const LogitVector& z, double u, const ErConfig& cfg) {
    return score_all_labels(er_probability(z, cfg), u, cfg.base);
}

}  // namespace ercp
