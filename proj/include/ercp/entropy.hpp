#pragma once

#include "ercp/scores.hpp"
#include "ercp/types.hpp"

namespace ercp {

// Entropy-reweighted scoring: logits are divided by H(X)*T before softmax,
// then scored with a base conformity function (APS by default).
struct ErConfig {
    double temperature = 1.0;
    // Clamp for the entropy denominator: H_eff = max(H, entropy_floor).
    // Saturated classifiers have H == 0; the clamp plus max-subtracted softmax
    // turns them into an exact one-hot reweighted vector instead of an overflow.
    double entropy_floor = 1e-10;
    ScoreSpec base = ScoreSpec::aps();
};

// Shannon entropy in nats, -sum p_k log p_k with 0*log 0 := 0. Range [0, log K].
double entropy(const ProbVector& p);

// Same quantity computed directly from logits as
// -sum f_k z_k + log sum exp z_j (max-subtracted). Kept as an independent
// route from entropy(softmax(z)); the two agree within 1e-9.
double entropy_from_logits(const LogitVector& z);

// z / (max(H(z), floor) * T). Positive scaling: rank order is preserved.
LogitVector reweight_logits(const LogitVector& z, const ErConfig& cfg);

// softmax(reweight_logits(z)). T -> 0 sharpens toward one-hot at the argmax,
// T -> inf flattens toward uniform.
ProbVector er_probability(const LogitVector& z, const ErConfig& cfg);

// Base score evaluated on the reweighted probability vector.
double er_conformity_score(const LogitVector& z, int y, double u, const ErConfig& cfg);

// Per-label variant sharing one u.
std::vector<double> er_score_all_labels(const LogitVector& z, double u, const ErConfig& cfg);

}  // namespace ercp
