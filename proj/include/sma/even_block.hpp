#pragma once

#include "sma/grid.hpp"

namespace sma {

/// One of the four shiftable base grids: (4,4), (6,4), (4,6), (6,6).
const SignedArray& base_block(long long m, long long n);

/**
 * Builds a shiftable m x n signed magic array with the same-row ± property
 * for even m, n >= 4, by recursive block stacking:
 *
 *   m in {4,6}: grow columns four at a time, appending a shifted (m,4) base
 *   block to build_even(m, n-4), down to the (m,4)/(m,6) base grids.
 *   m >= 8:     grow rows four at a time, appending a shifted build_even(4,n)
 *   below build_even(m-4, n).
 *
 * The recursion keeps supports consecutive: the existing block covers
 * {±1,...,±K} and the appended shifted block exactly {±(K+1),...,±(mn/2)}.
 */
SignedArray build_even(long long m, long long n);

}  // namespace sma
