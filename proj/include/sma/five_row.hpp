#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "sma/checker.hpp"
#include "sma/grid.hpp"

namespace sma {

// Construction of a 5 x n signed magic array with the same-row ± property,
// n even >= 4. The route for n >= 8 starts from build_sma3(n), exchanges a
// few magnitudes so that the column sums become small nonzero values (±1,
// and for n ≡ 2 mod 4 also ±2), then appends two rows drawn from
// {±(3n/2+1),...,±(5n/2)} that cancel those column sums. n = 4 and n = 6
// come from the reference grids.

/// Magnitude exchanges applied to a three-row array.
struct SwitchPlan {
    /// Row-one exchanges applied to both signs: +u<->+v and -u<->-v.
    std::vector<std::pair<long long, long long>> row1_swaps;
    /// Row-one exchange applied to the positive entries only (n ≡ 2 mod 4 route).
    std::optional<std::pair<long long, long long>> row1_positive_swap;
    /// Row-two exchanges applied to both signs (n ≡ 2 mod 4 route).
    std::vector<std::pair<long long, long long>> row2_swaps;
};

SwitchPlan case1_switch_plan(long long n);  // n ≡ 0 (mod 4), n >= 4
SwitchPlan case2_switch_plan(long long n);  // n ≡ 2 (mod 4), n >= 10

/// Applies the exchanges; throws if a referenced value is absent from its row.
SignedArray apply_switch_plan(const SignedArray& a, const SwitchPlan& plan);

/// Row-one exchange pass for n ≡ 0 (mod 4): column sums of the result are
/// n/2 ones and n/2 negative ones.
SignedArray switch_case1(const SignedArray& a, long long n);

/// Exchange pass for n ≡ 2 (mod 4), n >= 10: column sums of the result are
/// (n-4)/2 each of ±1 and two each of ±2.
SignedArray switch_case2(const SignedArray& a, long long n);

/// The two completion rows, aligned with the columns of the array they extend.
struct CompletionAssignment {
    std::vector<long long> row4;
    std::vector<long long> row5;
};

/// Chooses completion entries over {3n/2+1,...,5n/2} so that each column's
/// two new entries sum to the negation of its profile entry and each new row
/// sums to zero, with ±x confined to one row. Throws std::invalid_argument
/// when the profile is not coverable by the pairing scheme.
CompletionAssignment plan_completion(const ColumnSumProfile& profile, long long n);

/// Extends a three-row array (all row sums zero) by the planned two rows.
/// The profile argument must equal column_sums(b).
SignedArray complete_two_rows(const SignedArray& b, const ColumnSumProfile& profile);

/// Builds the 5 x n array for even n >= 4. Support is {±1,...,±(5n/2)}.
SignedArray build_sma5(long long n);

}  // namespace sma
