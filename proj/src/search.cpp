#include "sma/search.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace sma {

namespace {

struct N2Search {
    long long m;
    std::vector<long long> suffix_total;  // suffix_total[i] = (i+1) + ... + m
    std::vector<int> signs;
    unsigned long long nodes = 0;

    explicit N2Search(long long m_) : m(m_), signs(static_cast<std::size_t>(m_), 1) {
        suffix_total.assign(static_cast<std::size_t>(m) + 1, 0);
        for (long long i = m - 1; i >= 0; --i) {
            suffix_total[static_cast<std::size_t>(i)] =
                suffix_total[static_cast<std::size_t>(i) + 1] + (i + 1);
        }
    }

    bool descend(long long position, long long partial) {
        if (position == m) return partial == 0;
        const long long reach = suffix_total[static_cast<std::size_t>(position)];
        if (std::llabs(partial) > reach) return false;  // zero is out of reach
        for (int sign : {1, -1}) {
            ++nodes;
            signs[static_cast<std::size_t>(position)] = sign;
            if (descend(position + 1, partial + sign * (position + 1))) return true;
        }
        return false;
    }
};

struct TinySearch {
    long long rows, cols, half;
    bool require_same_row;
    std::vector<long long> grid;
    std::vector<long long> row_sum, col_sum;
    // per magnitude 1..half: which signs are already placed, and where the
    // first one landed
    std::vector<bool> pos_used, neg_used;
    std::vector<long long> first_row;
    unsigned long long nodes = 0;

    TinySearch(long long m, long long n, bool same_row)
        : rows(m),
          cols(n),
          half(m * n / 2),
          require_same_row(same_row),
          grid(static_cast<std::size_t>(m * n), 0),
          row_sum(static_cast<std::size_t>(m), 0),
          col_sum(static_cast<std::size_t>(n), 0),
          pos_used(static_cast<std::size_t>(half) + 1, false),
          neg_used(static_cast<std::size_t>(half) + 1, false),
          first_row(static_cast<std::size_t>(half) + 1, -1) {}

    long long max_free_magnitude() const {
        for (long long mag = half; mag >= 1; --mag) {
            if (!pos_used[static_cast<std::size_t>(mag)] ||
                !neg_used[static_cast<std::size_t>(mag)]) {
                return mag;
            }
        }
        return 0;
    }

    // A completed line must sum to zero; an open one must still be able to.
    bool line_viable(long long sum, long long remaining_cells) const {
        if (remaining_cells == 0) return sum == 0;
        return std::llabs(sum) <= remaining_cells * max_free_magnitude();
    }

    // On row completion under the same-row requirement, every magnitude in
    // the row needs its partner already present (the partner cannot be
    // placed in a full row, and other rows were ruled out at placement).
    bool row_pairs_closed(long long r) const {
        for (long long c = 0; c < cols; ++c) {
            const long long mag = std::llabs(grid[static_cast<std::size_t>(r * cols + c)]);
            if (!pos_used[static_cast<std::size_t>(mag)] ||
                !neg_used[static_cast<std::size_t>(mag)]) {
                return false;
            }
        }
        return true;
    }

    bool fill(long long index) {
        if (index == rows * cols) return true;
        const long long r = index / cols;
        const long long c = index % cols;
        for (long long mag = half; mag >= 1; --mag) {
            auto pos = static_cast<std::size_t>(mag);
            for (int sign : {1, -1}) {
                if (sign > 0 ? pos_used[pos] : neg_used[pos]) continue;
                const bool first_placement = !pos_used[pos] && !neg_used[pos];
                if (mag == half && first_placement && sign < 0) continue;  // negation symmetry
                if (require_same_row && !first_placement && first_row[pos] != r) continue;

                ++nodes;
                const long long value = sign * mag;
                (sign > 0 ? pos_used : neg_used)[pos] = true;
                if (first_placement) first_row[pos] = r;
                grid[static_cast<std::size_t>(index)] = value;
                row_sum[static_cast<std::size_t>(r)] += value;
                col_sum[static_cast<std::size_t>(c)] += value;

                const bool viable =
                    line_viable(row_sum[static_cast<std::size_t>(r)], cols - 1 - c) &&
                    line_viable(col_sum[static_cast<std::size_t>(c)], rows - 1 - r) &&
                    (!require_same_row || c != cols - 1 || row_pairs_closed(r));
                if (viable && fill(index + 1)) return true;

                row_sum[static_cast<std::size_t>(r)] -= value;
                col_sum[static_cast<std::size_t>(c)] -= value;
                grid[static_cast<std::size_t>(index)] = 0;
                if (first_placement) first_row[pos] = -1;
                (sign > 0 ? pos_used : neg_used)[pos] = false;
            }
        }
        return false;
    }
};

}  // namespace

SearchOutcome search_n2(long long m) {
    if (m < 1) {
        throw std::invalid_argument("search_n2: m must be >= 1, got " + std::to_string(m));
    }
    if (m > 30) {
        throw std::invalid_argument("search_n2: m > 30 exceeds the cost guard");
    }
    N2Search search(m);
    SearchOutcome outcome;
    outcome.found = search.descend(0, 0);
    outcome.nodes_explored = search.nodes;
    if (outcome.found) {
        std::vector<long long> entries;
        entries.reserve(static_cast<std::size_t>(2 * m));
        for (long long i = 1; i <= m; ++i) {
            const long long e = search.signs[static_cast<std::size_t>(i - 1)] * i;
            entries.push_back(e);
            entries.push_back(-e);
        }
        outcome.witness = SignedArray(static_cast<std::size_t>(m), 2, std::move(entries));
    }
    return outcome;
}

SearchOutcome search_tiny(long long m, long long n, bool require_same_row) {
    if (m < 1 || n < 2 || n % 2 != 0) {
        throw std::invalid_argument("search_tiny: need m >= 1 and even n >= 2");
    }
    if (m * n > 12) {
        throw std::invalid_argument("search_tiny: " + std::to_string(m) + "x" +
                                    std::to_string(n) + " exceeds the 12-cell cost guard");
    }
    TinySearch search(m, n, require_same_row);
    SearchOutcome outcome;
    outcome.found = search.fill(0);
    outcome.nodes_explored = search.nodes;
    if (outcome.found) {
        outcome.witness =
            SignedArray(static_cast<std::size_t>(m), static_cast<std::size_t>(n), search.grid);
    }
    return outcome;
}

}  // namespace sma
