#pragma once

#include "sma/checker.hpp"
#include "sma/grid.hpp"

namespace sma {

// A tight m x n integer Heffter array holds exactly one of +x, -x for each
// x in {1,...,mn} and has all row and column sums zero. Mirroring one as
// [A,-A] yields an m x 2n signed magic array in which ±x share a row.

/// Full Heffter check: one-of-±x support exactness for x in {1,...,mn},
/// zero row sums, zero column sums. Failures are reported, never thrown.
VerificationReport verify_heffter(const SignedArray& h);

/// The subset of the Heffter conditions the mirror construction needs:
/// one-of-±x support exactness and zero column sums. Row sums of the input
/// cancel in [A,-A] regardless, so they are not required here.
VerificationReport verify_mirror_ready(const SignedArray& h);

/// hstack(h, negate(h)). Throws std::invalid_argument unless
/// verify_mirror_ready(h) passes.
SignedArray mirror_concat(const SignedArray& h);

}  // namespace sma
