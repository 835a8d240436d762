#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sma {

/**
 * SignedArray: a tight rows x cols grid of integers, stored row-major.
 *
 * Every cell is filled; arrays claiming signed-magic status additionally
 * have all entries nonzero, which is checked by the verifiers rather than
 * the constructor. Degenerate arrays (zero rows or zero columns) are
 * permitted so that hstack/vstack have identity elements.
 *
 * Values are immutable after construction. Internal indices are 0-based;
 * user-facing messages and reports are 1-based.
 */
class SignedArray {
public:
    SignedArray(std::size_t rows, std::size_t cols, std::vector<long long> entries);

    static SignedArray from_rows(const std::vector<std::vector<long long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t cell_count() const noexcept { return entries_.size(); }

    long long operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }

    std::span<const long long> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }

    const std::vector<long long>& entries() const noexcept { return entries_; }

    bool zero_free() const noexcept;

    friend bool operator==(const SignedArray&, const SignedArray&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<long long> entries_;
};

/// Adds k to each positive entry and -k to each negative entry.
/// Requires k >= 0 and a zero-free array (the sign of 0 is undefined).
SignedArray shift(const SignedArray& a, long long k);

/// Multiplies every entry by -1.
SignedArray negate(const SignedArray& a);

/// Concatenates columns: left's columns precede right's. Row counts must match.
SignedArray hstack(const SignedArray& left, const SignedArray& right);

/// Concatenates rows: top's rows precede bottom's. Column counts must match.
SignedArray vstack(const SignedArray& top, const SignedArray& bottom);

}  // namespace sma
