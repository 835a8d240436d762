#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sma/checker.hpp"
#include "sma/fixtures.hpp"
#include "sma/three_row.hpp"

using sma::build_sma3;
using sma::row1_entry;
using sma::row3_entry;

TEST_CASE("row formula spot values") {
    CHECK(row1_entry(6, 1) == 1);
    CHECK(row1_entry(6, 4) == -2);
    CHECK(row1_entry(5, 9) == 7);
    CHECK(row3_entry(6, 1) == -18);
    CHECK(row3_entry(6, 3) == 15);
    CHECK(row3_entry(5, 10) == 15);
}

TEST_CASE("row formulas reject out-of-range columns and short widths") {
    CHECK_THROWS_AS(row1_entry(6, 0), std::invalid_argument);
    CHECK_THROWS_AS(row1_entry(6, 13), std::invalid_argument);
    CHECK_THROWS_AS(row3_entry(2, 1), std::invalid_argument);
}

TEST_CASE("build_sma3 reproduces the reference grids exactly") {
    CHECK(build_sma3(2) == sma::fixtures::fig1_sma_3_2());
    CHECK(build_sma3(4) == sma::fixtures::fig1_sma_3_4());
    CHECK(build_sma3(12) == sma::fixtures::appendix1_sma_3_12());
    CHECK(build_sma3(10) == sma::fixtures::appendix2_sma_3_10());
}

TEST_CASE("build_sma3 rejects odd or undersized widths") {
    CHECK_THROWS_AS(build_sma3(3), std::invalid_argument);
    CHECK_THROWS_AS(build_sma3(0), std::invalid_argument);
    CHECK_THROWS_AS(build_sma3(-2), std::invalid_argument);
}

TEST_CASE("build_sma3 output is magic with same-row pairs for n up to 200") {
    for (long long n = 2; n <= 200; n += 2) {
        CAPTURE(n);
        const sma::SignedArray a = build_sma3(n);
        CHECK(a.rows() == 3);
        CHECK(a.cols() == static_cast<std::size_t>(n));
        CHECK(sma::verify_sma(a).passed());
        CHECK(sma::verify_same_row_pairs(a).passed());
        CHECK(sma::support_of(a).half_size == 3 * n / 2);
    }
}

TEST_CASE("row one carries the non-multiples of three in the expected pattern") {
    for (long long n = 2; n <= 200; n += 2) {
        CAPTURE(n);
        const sma::SignedArray a = build_sma3(n);

        std::set<long long> expected;
        if (n % 4 == 0) {
            for (long long i = 0; i <= (n - 4) / 4; ++i) {
                expected.insert(3 * i + 1);
                expected.insert(3 * i + 2);
            }
        } else {
            for (long long i = 0; i <= (n - 6) / 4; ++i) {
                expected.insert(3 * i + 1);
                expected.insert(3 * i + 2);
            }
            expected.insert((3 * n - 2) / 4);
        }

        std::set<long long> row1_pos, row1_neg;
        for (long long e : a.row(0)) (e > 0 ? row1_pos : row1_neg).insert(e > 0 ? e : -e);
        CHECK(row1_pos == expected);
        CHECK(row1_neg == expected);
    }
}

TEST_CASE("row three carries exactly the multiples of three, both signs") {
    for (long long n = 2; n <= 200; n += 2) {
        CAPTURE(n);
        const sma::SignedArray a = build_sma3(n);
        std::set<long long> expected;
        for (long long x = 3; x <= 3 * n / 2; x += 3) expected.insert(x);
        std::set<long long> row3_pos, row3_neg;
        for (long long e : a.row(2)) (e > 0 ? row3_pos : row3_neg).insert(e > 0 ? e : -e);
        CHECK(row3_pos == expected);
        CHECK(row3_neg == expected);
    }
}
