#pragma once

#include "ercp/types.hpp"

namespace ercp {

// Max-subtracted softmax. Throws std::invalid_argument on empty or
// non-finite input. Output sums to 1 within 1e-9 and preserves the rank
// order of the logits.
ProbVector softmax(const LogitVector& z);

// 1-based rank of p[y] under a stable descending sort: ties are broken by
// ascending class index, so for each fixed p the ranks of all labels form a
// permutation of {1,...,K}.
int rank_of_label(const ProbVector& p, int y);

// Index of the largest entry (first one under the same tie rule).
int argmax_index(const std::vector<double>& v);

}  // namespace ercp
