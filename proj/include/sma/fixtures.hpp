#pragma once

#include <string>
#include <vector>

#include "sma/grid.hpp"

namespace sma::fixtures {

// Reference grids. The fig* and appendix* names match the CSV files shipped
// under fixtures/; a test cross-checks that the two copies stay identical.

const SignedArray& fig1_sma_3_2();
const SignedArray& fig1_sma_3_4();
const SignedArray& fig1_sma_4_2();

const SignedArray& fig2_ssma_4_4();
const SignedArray& fig2_ssma_6_4();

const SignedArray& fig3_ssma_4_6();
const SignedArray& fig3_ssma_6_6();

const SignedArray& fig4_ssma_6_10();

const SignedArray& fig5_sma_5_4();
const SignedArray& fig5_sma_5_6();
const SignedArray& fig5_heffter_5_3();  // left half of fig5_sma_5_6

const SignedArray& fig6_sma_5_8();
const SignedArray& fig6_left_5_4();  // left half of fig6_sma_5_8

const SignedArray& appendix1_sma_3_12();
const SignedArray& appendix1_b_3_12();  // intermediate three-row array, column sums ±1
const SignedArray& appendix1_sma_5_12();

const SignedArray& appendix2_sma_3_10();
const SignedArray& appendix2_b_3_10();  // intermediate three-row array, column sums ±1/±2
const SignedArray& appendix2_sma_5_10();

struct FixtureInfo {
    std::string name;  // file stem under fixtures/
    const SignedArray& grid;
    bool is_sma;             // expected to pass verify_sma + verify_same_row_pairs
    bool is_shiftable;       // expected to pass verify_shiftable
    bool is_half_support;    // one of ±x per magnitude (mirror-construction input)
};

/// Every shipped fixture with its expected properties.
const std::vector<FixtureInfo>& all();

}  // namespace sma::fixtures
