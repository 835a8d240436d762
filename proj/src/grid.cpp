#include "sma/grid.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace sma {

SignedArray::SignedArray(std::size_t rows, std::size_t cols, std::vector<long long> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("SignedArray: " + std::to_string(rows_) + "x" +
                                    std::to_string(cols_) + " grid needs " +
                                    std::to_string(rows_ * cols_) + " entries, got " +
                                    std::to_string(entries_.size()));
    }
}

SignedArray SignedArray::from_rows(const std::vector<std::vector<long long>>& rows) {
    const std::size_t m = rows.size();
    const std::size_t n = m == 0 ? 0 : rows.front().size();
    std::vector<long long> flat;
    flat.reserve(m * n);
    for (std::size_t r = 0; r < m; ++r) {
        if (rows[r].size() != n) {
            throw std::invalid_argument("SignedArray: row " + std::to_string(r + 1) +
                                        " has " + std::to_string(rows[r].size()) +
                                        " entries, expected " + std::to_string(n));
        }
        flat.insert(flat.end(), rows[r].begin(), rows[r].end());
    }
    return SignedArray(m, n, std::move(flat));
}

bool SignedArray::zero_free() const noexcept {
    for (long long e : entries_) {
        if (e == 0) return false;
    }
    return true;
}

SignedArray shift(const SignedArray& a, long long k) {
    if (k < 0) {
        throw std::invalid_argument("shift: amount must be non-negative, got " +
                                    std::to_string(k));
    }
    constexpr long long kMax = std::numeric_limits<long long>::max();
    std::vector<long long> out;
    out.reserve(a.cell_count());
    for (long long e : a.entries()) {
        if (e == 0) {
            throw std::invalid_argument("shift: array contains a zero entry (sign undefined)");
        }
        if (e > 0 ? e > kMax - k : e < -kMax + k) {
            throw std::overflow_error("shift: entry magnitude exceeds exact integer range");
        }
        out.push_back(e > 0 ? e + k : e - k);
    }
    return SignedArray(a.rows(), a.cols(), std::move(out));
}

SignedArray negate(const SignedArray& a) {
    std::vector<long long> out;
    out.reserve(a.cell_count());
    for (long long e : a.entries()) out.push_back(-e);
    return SignedArray(a.rows(), a.cols(), std::move(out));
}

SignedArray hstack(const SignedArray& left, const SignedArray& right) {
    if (left.rows() != right.rows()) {
        throw std::invalid_argument("hstack: row counts differ (" + std::to_string(left.rows()) +
                                    " vs " + std::to_string(right.rows()) + ")");
    }
    const std::size_t m = left.rows();
    const std::size_t n = left.cols() + right.cols();
    std::vector<long long> out;
    out.reserve(m * n);
    for (std::size_t r = 0; r < m; ++r) {
        auto lrow = left.row(r);
        auto rrow = right.row(r);
        out.insert(out.end(), lrow.begin(), lrow.end());
        out.insert(out.end(), rrow.begin(), rrow.end());
    }
    return SignedArray(m, n, std::move(out));
}

SignedArray vstack(const SignedArray& top, const SignedArray& bottom) {
    if (top.cols() != bottom.cols()) {
        throw std::invalid_argument("vstack: column counts differ (" + std::to_string(top.cols()) +
                                    " vs " + std::to_string(bottom.cols()) + ")");
    }
    std::vector<long long> out;
    out.reserve(top.cell_count() + bottom.cell_count());
    out.insert(out.end(), top.entries().begin(), top.entries().end());
    out.insert(out.end(), bottom.entries().begin(), bottom.entries().end());
    return SignedArray(top.rows() + bottom.rows(), top.cols(), std::move(out));
}

}  // namespace sma
