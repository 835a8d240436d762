#include <doctest.h>

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "sma/checker.hpp"
#include "sma/composer.hpp"
#include "sma/search.hpp"

namespace {

// Test-only oracle: plain enumeration of every placement of ±1,...,±(mn/2)
// into the grid, no pruning, no symmetry reduction. Only viable at a handful
// of cells, which is exactly where it is used.
bool unpruned_exists(long long rows, long long cols, bool require_same_row) {
    const long long cells = rows * cols;
    const long long half = cells / 2;
    std::vector<long long> values;
    for (long long x = 1; x <= half; ++x) {
        values.push_back(x);
        values.push_back(-x);
    }
    std::vector<long long> grid(static_cast<std::size_t>(cells), 0);
    std::vector<bool> used(values.size(), false);

    auto valid = [&]() {
        for (long long r = 0; r < rows; ++r) {
            long long sum = 0;
            for (long long c = 0; c < cols; ++c) sum += grid[static_cast<std::size_t>(r * cols + c)];
            if (sum != 0) return false;
        }
        for (long long c = 0; c < cols; ++c) {
            long long sum = 0;
            for (long long r = 0; r < rows; ++r) sum += grid[static_cast<std::size_t>(r * cols + c)];
            if (sum != 0) return false;
        }
        if (require_same_row) {
            for (long long x = 1; x <= half; ++x) {
                long long pos_row = -1, neg_row = -1;
                for (long long i = 0; i < cells; ++i) {
                    if (grid[static_cast<std::size_t>(i)] == x) pos_row = i / cols;
                    if (grid[static_cast<std::size_t>(i)] == -x) neg_row = i / cols;
                }
                if (pos_row != neg_row) return false;
            }
        }
        return true;
    };

    auto place = [&](auto&& self, long long index) -> bool {
        if (index == cells) return valid();
        for (std::size_t v = 0; v < values.size(); ++v) {
            if (used[v]) continue;
            used[v] = true;
            grid[static_cast<std::size_t>(index)] = values[v];
            if (self(self, index + 1)) return true;
            used[v] = false;
        }
        grid[static_cast<std::size_t>(index)] = 0;
        return false;
    };
    return place(place, 0);
}

}  // namespace

TEST_CASE("two-column search agrees with the closed-form feasibility test") {
    for (long long m = 3; m <= 20; ++m) {
        CAPTURE(m);
        CHECK(sma::search_n2(m).found == sma::feasible(m, 2));
    }
}

TEST_CASE("two-column search finds the lexicographically first sign vector") {
    const auto m3 = sma::search_n2(3);
    REQUIRE(m3.found);
    CHECK(*m3.witness == sma::build_n2(3));  // (+,+,-) is first for m = 3
    const auto m4 = sma::search_n2(4);
    REQUIRE(m4.found);
    CHECK(*m4.witness == sma::build_n2(4));  // (+,-,-,+) is first for m = 4

    const auto m5 = sma::search_n2(5);  // 1+...+5 is odd: no cancellation
    CHECK_FALSE(m5.found);
    CHECK_FALSE(m5.witness.has_value());
    CHECK(sma::search_n2(8).found);
}

TEST_CASE("two-column witnesses verify and respect the guard") {
    for (long long m : {3, 4, 7, 8, 11, 12, 20}) {
        CAPTURE(m);
        const auto outcome = sma::search_n2(m);
        REQUIRE(outcome.found);
        CHECK(outcome.nodes_explored > 0);
        CHECK(sma::verify_sma(*outcome.witness).passed());
        CHECK(sma::verify_same_row_pairs(*outcome.witness).passed());
    }
    CHECK_THROWS_AS(sma::search_n2(31), std::invalid_argument);
    CHECK_THROWS_AS(sma::search_n2(0), std::invalid_argument);
}

TEST_CASE("tiny search separates plain existence from the same-row property") {
    const auto without_pairing = sma::search_tiny(2, 4, false);
    CHECK(without_pairing.found);
    REQUIRE(without_pairing.witness.has_value());
    CHECK(sma::verify_sma(*without_pairing.witness).passed());

    const auto with_pairing = sma::search_tiny(2, 4, true);
    CHECK_FALSE(with_pairing.found);

    const auto three_by_four = sma::search_tiny(3, 4, true);
    REQUIRE(three_by_four.found);
    CHECK(sma::verify_sma(*three_by_four.witness).passed());
    CHECK(sma::verify_same_row_pairs(*three_by_four.witness).passed());
}

TEST_CASE("tiny search honours its guards") {
    CHECK_THROWS_AS(sma::search_tiny(4, 4, false), std::invalid_argument);  // 16 cells
    CHECK_THROWS_AS(sma::search_tiny(3, 3, false), std::invalid_argument);  // odd width
    CHECK_THROWS_AS(sma::search_tiny(0, 2, false), std::invalid_argument);
}

TEST_CASE("pruned search and unpruned enumeration agree on the smallest grids") {
    for (auto [m, n] : {std::pair<long long, long long>{2, 2}, {2, 4}, {3, 2}}) {
        for (bool same_row : {false, true}) {
            CAPTURE(m);
            CAPTURE(n);
            CAPTURE(same_row);
            CHECK(sma::search_tiny(m, n, same_row).found == unpruned_exists(m, n, same_row));
        }
    }
}

TEST_CASE("tiny searches are deterministic") {
    const auto first = sma::search_tiny(3, 4, true);
    const auto second = sma::search_tiny(3, 4, true);
    REQUIRE(first.found);
    CHECK(*first.witness == *second.witness);
    CHECK(first.nodes_explored == second.nodes_explored);
}
