#pragma once

#include "ercp/types.hpp"

namespace ercp {

enum class ScoreKind { Thr, Aps, Raps, Saps, Rank };

// Conformity score selector. lambda/k_reg apply to RAPS, lambda to SAPS.
// randomized=false replaces the per-example U by 1 (deterministic,
// conservative variant).
struct ScoreSpec {
    ScoreKind kind = ScoreKind::Aps;
    double lambda = 0.01;
    int k_reg = 1;
    bool randomized = true;

    static ScoreSpec thr() { return {ScoreKind::Thr}; }
    static ScoreSpec aps() { return {ScoreKind::Aps}; }
    static ScoreSpec raps(double lambda = 0.01, int k_reg = 1) {
        return {ScoreKind::Raps, lambda, k_reg};
    }
    static ScoreSpec saps(double lambda = 0.2) { return {ScoreKind::Saps, lambda}; }
    static ScoreSpec rank() { return {ScoreKind::Rank}; }
};

// All scores map (probability vector, label, randomizer) to a conformity
// value, lower = more conforming. THR/APS/RANK live in [0,1]; RAPS/SAPS can
// exceed 1 through their penalties.

double thr_score(const ProbVector& p, int y);

// Cumulative sorted-probability score: head mass above the label's rank plus
// u times the mass at the rank.
double aps_score(const ProbVector& p, int y, double u);

// APS with penalty lambda added to every head term of sort index > k_reg.
// The trailing u*p_(r) term is not penalized. Reduces to aps_score bit-for-bit
// when lambda == 0.
double raps_score(const ProbVector& p, int y, double u, double lambda, int k_reg);

// u*p_(1) when the label tops the ranking, else p_(1) + (rank - 2 + u)*lambda.
double saps_score(const ProbVector& p, int y, double u, double lambda);

// rank/K in (0,1].
double rank_score(const ProbVector& p, int y);

// Dispatch on spec.kind, honoring spec.randomized.
double score_example(const ProbVector& p, int y, double u, const ScoreSpec& spec);

// Score of every candidate label with the shared randomizer u; entry y agrees
// with score_example(p, y, u, spec).
std::vector<double> score_all_labels(const ProbVector& p, double u, const ScoreSpec& spec);

}  // namespace ercp
