#pragma once

#include "sma/grid.hpp"

namespace sma {

// Closed-form construction of a 3 x n signed magic array, n even, in which
// ±x share a row for every magnitude x. Rows one and three follow a piecewise
// formula indexed by j mod 4 (valid for n >= 6); row two is the negation of
// their sum, so row-wise consistency holds by construction. n = 2 and n = 4
// are served by the reference grids.

/// Row-one entry at 1-based column j of the 3 x 2k array, 2k >= 6.
long long row1_entry(long long k, long long j);

/// Row-three entry at 1-based column j of the 3 x 2k array, 2k >= 6.
long long row3_entry(long long k, long long j);

/// Builds the 3 x n array for even n >= 2. Support is {±1,...,±(3n/2)}.
SignedArray build_sma3(long long n);

}  // namespace sma
