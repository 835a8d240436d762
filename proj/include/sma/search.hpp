#pragma once

#include <optional>

#include "sma/grid.hpp"

namespace sma {

/// Result of a brute-force search. When found, the witness satisfies every
/// predicate the search was asked for.
struct SearchOutcome {
    bool found = false;
    std::optional<SignedArray> witness;
    unsigned long long nodes_explored = 0;
};

/// Exhaustive search over the 2^m sign vectors (s_1,...,s_m) for one with
/// sum s_i * i = 0; the witness is the m x 2 array with rows (s_i*i, -s_i*i).
/// Enumeration is depth-first with + before -, so the witness is the
/// lexicographically first solution; subtree pruning on unreachable partial
/// sums never skips a solution. Rejects m > 30 (cost guard) and m < 1.
SearchOutcome search_n2(long long m);

/// Backtracking search for a tight m x n signed magic array over
/// {±1,...,±(mn/2)}, optionally requiring ±x to share a row. Cells are
/// filled row-major, magnitudes tried largest-first, and partial row/column
/// sums prune branches that cannot reach zero. The first placement of the
/// largest magnitude is fixed positive (negating an array preserves all
/// predicates). Rejects m*n > 12 (cost guard) and odd n.
SearchOutcome search_tiny(long long m, long long n, bool require_same_row);

}  // namespace sma
