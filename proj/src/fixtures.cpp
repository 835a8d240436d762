#include "sma/fixtures.hpp"

namespace sma::fixtures {

namespace {

using Rows = std::vector<std::vector<long long>>;

SignedArray make(const Rows& rows) { return SignedArray::from_rows(rows); }

}  // namespace

const SignedArray& fig1_sma_3_2() {
    static const SignedArray a = make({{1, -1},
                                       {2, -2},
                                       {-3, 3}});
    return a;
}

const SignedArray& fig1_sma_3_4() {
    static const SignedArray a = make({{1, -1, 2, -2},
                                       {5, 4, -5, -4},
                                       {-6, -3, 3, 6}});
    return a;
}

const SignedArray& fig1_sma_4_2() {
    static const SignedArray a = make({{1, -1},
                                       {-2, 2},
                                       {-3, 3},
                                       {4, -4}});
    return a;
}

const SignedArray& fig2_ssma_4_4() {
    static const SignedArray a = make({{1, -1, 5, -5},
                                       {-2, 2, -6, 6},
                                       {-3, 3, -7, 7},
                                       {4, -4, 8, -8}});
    return a;
}

const SignedArray& fig2_ssma_6_4() {
    static const SignedArray a = make({{2, -2, 6, -6},
                                       {4, -4, -8, 8},
                                       {-1, 1, 12, -12},
                                       {-3, 3, -9, 9},
                                       {5, -5, 10, -10},
                                       {-7, 7, -11, 11}});
    return a;
}

const SignedArray& fig3_ssma_4_6() {
    static const SignedArray a = make({{-1, 1, -5, 5, -9, 9},
                                       {2, -2, 6, -6, 10, -10},
                                       {3, -3, 7, -7, 11, -11},
                                       {-4, 4, -8, 8, -12, 12}});
    return a;
}

const SignedArray& fig3_ssma_6_6() {
    static const SignedArray a = make({{1, -1, 4, -4, 12, -12},
                                       {-2, 2, -8, 8, 14, -14},
                                       {-3, 3, -9, 10, -10, 9},
                                       {5, -5, 11, -16, -11, 16},
                                       {6, -6, -13, 17, 13, -17},
                                       {-7, 7, 15, -15, -18, 18}});
    return a;
}

const SignedArray& fig4_ssma_6_10() {
    static const SignedArray a = make({{1, -1, 4, -4, 12, -12, 20, -20, 24, -24},
                                       {-2, 2, -8, 8, 14, -14, 22, -22, -26, 26},
                                       {-3, 3, -9, 10, -10, 9, -19, 19, 30, -30},
                                       {5, -5, 11, -16, -11, 16, -21, 21, -27, 27},
                                       {6, -6, -13, 17, 13, -17, 23, -23, 28, -28},
                                       {-7, 7, 15, -15, -18, 18, -25, 25, -29, 29}});
    return a;
}

const SignedArray& fig5_sma_5_4() {
    static const SignedArray a = make({{-9, 9, 7, -7},
                                       {10, -10, -8, 8},
                                       {1, -1, 2, -2},
                                       {4, 5, -4, -5},
                                       {-6, -3, 3, 6}});
    return a;
}

const SignedArray& fig5_heffter_5_3() {
    static const SignedArray a = make({{-14, 12, 2},
                                       {-6, -1, 7},
                                       {4, -13, 9},
                                       {11, -8, -3},
                                       {5, 10, -15}});
    return a;
}

const SignedArray& fig5_sma_5_6() {
    static const SignedArray a = make({{-14, 12, 2, 14, -12, -2},
                                       {-6, -1, 7, 6, 1, -7},
                                       {4, -13, 9, -4, 13, -9},
                                       {11, -8, -3, -11, 8, 3},
                                       {5, 10, -15, -5, -10, 15}});
    return a;
}

const SignedArray& fig6_left_5_4() {
    static const SignedArray a = make({{2, 9, 7, 1},
                                       {-8, 12, 13, 4},
                                       {-17, 3, -16, -6},
                                       {18, -14, 11, -19},
                                       {5, -10, -15, 20}});
    return a;
}

const SignedArray& fig6_sma_5_8() {
    static const SignedArray a = make({{2, 9, 7, 1, -2, -9, -7, -1},
                                       {-8, 12, 13, 4, 8, -12, -13, -4},
                                       {-17, 3, -16, -6, 17, -3, 16, 6},
                                       {18, -14, 11, -19, -18, 14, -11, 19},
                                       {5, -10, -15, 20, -5, 10, 15, -20}});
    return a;
}

const SignedArray& appendix1_sma_3_12() {
    static const SignedArray a =
        make({{1, -1, 2, -2, 4, -4, 5, -5, 7, -7, 8, -8},
              {17, 16, -17, 14, -16, 13, -14, 11, -13, 10, -11, -10},
              {-18, -15, 15, -12, 12, -9, 9, -6, 6, -3, 3, 18}});
    return a;
}

const SignedArray& appendix1_b_3_12() {
    static const SignedArray a =
        make({{2, -2, 1, -1, 5, -5, 4, -4, 8, -8, 7, -7},
              {17, 16, -17, 14, -16, 13, -14, 11, -13, 10, -11, -10},
              {-18, -15, 15, -12, 12, -9, 9, -6, 6, -3, 3, 18}});
    return a;
}

const SignedArray& appendix1_sma_5_12() {
    static const SignedArray a =
        make({{2, -2, 1, -1, 5, -5, 4, -4, 8, -8, 7, -7},
              {17, 16, -17, 14, -16, 13, -14, 11, -13, 10, -11, -10},
              {-18, -15, 15, -12, 12, -9, 9, -6, 6, -3, 3, 18},
              {19, -19, -21, 21, 23, -23, -25, 25, 27, -27, -29, 29},
              {-20, 20, 22, -22, -24, 24, 26, -26, -28, 28, 30, -30}});
    return a;
}

const SignedArray& appendix2_sma_3_10() {
    static const SignedArray a = make({{1, -1, 2, -2, 4, -4, 5, -5, 7, -7},
                                       {14, 13, -14, 11, -13, 10, -11, 8, -10, -8},
                                       {-15, -12, 12, -9, 9, -6, 6, -3, 3, 15}});
    return a;
}

const SignedArray& appendix2_b_3_10() {
    static const SignedArray a = make({{2, -2, 1, -1, 5, -4, 4, -5, 7, -7},
                                       {14, 13, -14, 11, -13, 8, -11, 10, -8, -10},
                                       {-15, -12, 12, -9, 9, -6, 6, -3, 3, 15}});
    return a;
}

const SignedArray& appendix2_sma_5_10() {
    static const SignedArray a = make({{2, -2, 1, -1, 5, -4, 4, -5, 7, -7},
                                       {14, 13, -14, 11, -13, 8, -11, 10, -8, -10},
                                       {-15, -12, 12, -9, 9, -6, 6, -3, 3, 15},
                                       {16, -16, -18, 18, 20, -22, -20, 22, 23, -23},
                                       {-17, 17, 19, -19, -21, 24, 21, -24, -25, 25}});
    return a;
}

const std::vector<FixtureInfo>& all() {
    static const std::vector<FixtureInfo> list = {
        {"fig1-sma-3-2", fig1_sma_3_2(), true, false, false},
        {"fig1-sma-3-4", fig1_sma_3_4(), true, false, false},
        {"fig1-sma-4-2", fig1_sma_4_2(), true, true, false},
        {"fig2-ssma-4-4", fig2_ssma_4_4(), true, true, false},
        {"fig2-ssma-6-4", fig2_ssma_6_4(), true, true, false},
        {"fig3-ssma-4-6", fig3_ssma_4_6(), true, true, false},
        {"fig3-ssma-6-6", fig3_ssma_6_6(), true, true, false},
        {"fig4-ssma-6-10", fig4_ssma_6_10(), true, true, false},
        {"fig5-sma-5-4", fig5_sma_5_4(), true, false, false},
        {"fig5-sma-5-6", fig5_sma_5_6(), true, false, false},
        {"fig5-heffter-5-3", fig5_heffter_5_3(), false, false, true},
        {"fig6-sma-5-8", fig6_sma_5_8(), true, false, false},
        {"fig6-left-5-4", fig6_left_5_4(), false, false, true},
        {"appendix1-sma-3-12", appendix1_sma_3_12(), true, false, false},
        {"appendix1-b-3-12", appendix1_b_3_12(), false, false, false},
        {"appendix1-sma-5-12", appendix1_sma_5_12(), true, false, false},
        {"appendix2-sma-3-10", appendix2_sma_3_10(), true, false, false},
        {"appendix2-b-3-10", appendix2_b_3_10(), false, false, false},
        {"appendix2-sma-5-10", appendix2_sma_5_10(), true, false, false},
    };
    return list;
}

}  // namespace sma::fixtures
