#include "ercp/scores.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ercp/softmax.hpp"

namespace ercp {

namespace {

void check_inputs(const ProbVector& p, int y, double u) {
    if (y < 0 || static_cast<std::size_t>(y) >= p.size())
        throw std::invalid_argument("score: label out of range");
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("score: u outside [0,1]");
}

// Indices of p sorted by descending probability, ties by ascending index.
// Position r-1 holds the label of rank r, consistent with rank_of_label.
std::vector<int> descending_order(const ProbVector& p) {
    std::vector<int> order(p.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return p[a] > p[b]; });
    return order;
}

}  // namespace

double thr_score(const ProbVector& p, int y) {
    check_inputs(p, y, 1.0);
    return 1.0 - p[static_cast<std::size_t>(y)];
}

double aps_score(const ProbVector& p, int y, double u) {
    check_inputs(p, y, u);
    const auto order = descending_order(p);
    double head = 0.0;
    for (int i = 0; order[i] != y; ++i) head += p[order[i]];
    return head + u * p[static_cast<std::size_t>(y)];
}

double raps_score(const ProbVector& p, int y, double u, double lambda, int k_reg) {
    check_inputs(p, y, u);
    if (lambda < 0.0 || k_reg < 0) throw std::invalid_argument("raps: lambda and k_reg must be >= 0");
    const auto order = descending_order(p);
    double head = 0.0;
    int i = 0;
    for (; order[i] != y; ++i) {
        // sort positions are 1-based in the penalty indicator
        head += p[order[i]] + (i + 1 > k_reg ? lambda : 0.0);
    }
    return head + u * p[static_cast<std::size_t>(y)];
}

double saps_score(const ProbVector& p, int y, double u, double lambda) {
    check_inputs(p, y, u);
    if (lambda <= 0.0) throw std::invalid_argument("saps: lambda must be > 0");
    const int r = rank_of_label(p, y);
    const double top = p[static_cast<std::size_t>(argmax_index(p))];
    if (r == 1) return u * top;
    return top + (static_cast<double>(r) - 2.0 + u) * lambda;
}

double rank_score(const ProbVector& p, int y) {
    check_inputs(p, y, 1.0);
    return static_cast<double>(rank_of_label(p, y)) / static_cast<double>(p.size());
}

double score_example(const ProbVector& p, int y, double u, const ScoreSpec& spec) {
    const double ue = spec.randomized ? u : 1.0;
    switch (spec.kind) {
        case ScoreKind::Thr: return thr_score(p, y);
        case ScoreKind::Aps: return aps_score(p, y, ue);
        case ScoreKind::Raps: return raps_score(p, y, ue, spec.lambda, spec.k_reg);
        case ScoreKind::Saps: return saps_score(p, y, ue, spec.lambda);
        case ScoreKind::Rank: return rank_score(p, y);
    }
    throw std::logic_error("score_example: unknown kind");
}

std::vector<double> score_all_labels(const ProbVector& p, double u, const ScoreSpec& spec) {
    if (u < 0.0 || u > 1.0) throw std::invalid_argument("score: u outside [0,1]");
    const double ue = spec.randomized ? u : 1.0;
    const std::size_t k = p.size();
    const auto order = descending_order(p);
    std::vector<double> out(k, 0.0);

    switch (spec.kind) {
        case ScoreKind::Thr:
            for (std::size_t y = 0; y < k; ++y) out[y] = 1.0 - p[y];
            return out;
        case ScoreKind::Aps: {
            double head = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                out[order[i]] = head + ue * p[order[i]];
                head += p[order[i]];
            }
            return out;
        }
        case ScoreKind::Raps: {
            double head = 0.0;
            for (std::size_t i = 0; i < k; ++i) {
                out[order[i]] = head + ue * p[order[i]];
                head += p[order[i]] + (static_cast<int>(i) + 1 > spec.k_reg ? spec.lambda : 0.0);
            }
            return out;
        }
        case ScoreKind::Saps: {
            const double top = p[order[0]];
            out[order[0]] = ue * top;
            for (std::size_t i = 1; i < k; ++i)
                out[order[i]] = top + (static_cast<double>(i) - 1.0 + ue) * spec.lambda;
            return out;
        }
        case ScoreKind::Rank:
            for (std::size_t i = 0; i < k; ++i)
                out[order[i]] = static_cast<double>(i + 1) / static_cast<double>(k);
            return out;
    }
    throw std::logic_error("score_all_labels: unknown kind");
}

}  // namespace ercp
