#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sma/grid.hpp"

namespace sma {

/// The symmetric target entry set {±1, ..., ±half_size}.
struct SupportSpec {
    long long half_size;
};

/// Expected support of a tight signed magic array: half_size = rows*cols/2.
SupportSpec support_of(const SignedArray& a);

/// One itemized check failure. row/col are 1-based; 0 means "not cell-specific".
struct Violation {
    std::string kind;
    std::size_t row = 0;
    std::size_t col = 0;
    std::string detail;
};

/**
 * VerificationReport: pass/fail evidence over the signed-magic predicates.
 *
 * Each verifier fills in the booleans it is responsible for and appends one
 * violation per defect; booleans it does not examine stay true. A report
 * passes iff its violation list is empty, so merged reports (see merge())
 * stay consistent with their booleans.
 */
struct VerificationReport {
    bool is_support_exact = true;
    bool is_row_zero = true;
    bool is_col_zero = true;
    bool has_same_row_pairs = true;
    bool is_shiftable = true;
    std::vector<Violation> violations;

    bool passed() const noexcept { return violations.empty(); }
    void merge(const VerificationReport& other);
};

/// Per-column sums of an array (intermediate arrays are generally not magic).
struct ColumnSumProfile {
    std::vector<long long> sums;

    friend bool operator==(const ColumnSumProfile&, const ColumnSumProfile&) = default;
};

/// Checks support exactness ({±1,...,±(rows*cols/2)} each exactly once) and
/// zero row/column sums. Failures are reported, never thrown, and the scan
/// does not stop at the first defect.
VerificationReport verify_sma(const SignedArray& a);

/// Checks that x and -x occupy the same row for every magnitude present.
/// Magnitudes with a missing partner are reported as violations; pairing is
/// judged only where both signs exist, so intermediate arrays get useful
/// reports too.
VerificationReport verify_same_row_pairs(const SignedArray& a);

/// Checks that every row and every column holds equally many positive and
/// negative entries. Throws std::invalid_argument on a zero entry.
VerificationReport verify_shiftable(const SignedArray& a);

ColumnSumProfile column_sums(const SignedArray& a);

}  // namespace sma
