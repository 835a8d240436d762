#include "sma/five_row.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sma/fixtures.hpp"
#include "sma/three_row.hpp"

namespace sma {

namespace {

// Swaps the cells holding values u and v within row r. Both values must be
// present exactly where the upstream construction put them.
void swap_values_in_row(std::vector<long long>& row, long long u, long long v,
                        std::size_t row_index) {
    auto iu = std::find(row.begin(), row.end(), u);
    auto iv = std::find(row.begin(), row.end(), v);
    if (iu == row.end() || iv == row.end()) {
        throw std::invalid_argument("switch plan: value " +
                                    std::to_string(iu == row.end() ? u : v) +
                                    " not found in row " + std::to_string(row_index + 1));
    }
    std::iter_swap(iu, iv);
}

std::vector<long long> row_copy(const SignedArray& a, std::size_t r) {
    auto span = a.row(r);
    return {span.begin(), span.end()};
}

}  // namespace

SwitchPlan case1_switch_plan(long long n) {
    if (n < 4 || n % 4 != 0) {
        throw std::invalid_argument("case 1 switch requires n ≡ 0 (mod 4) and n >= 4, got " +
                                    std::to_string(n));
    }
    SwitchPlan plan;
    for (long long i = 0; i <= (n - 4) / 4; ++i) {
        plan.row1_swaps.emplace_back(3 * i + 1, 3 * i + 2);
    }
    return plan;
}

SwitchPlan case2_switch_plan(long long n) {
    if (n < 10 || n % 4 != 2) {
        throw std::invalid_argument("case 2 switch requires n ≡ 2 (mod 4) and n >= 10, got " +
                                    std::to_string(n));
    }
    SwitchPlan plan;
    for (long long i = 0; i <= (n - 10) / 4; ++i) {
        plan.row1_swaps.emplace_back(3 * i + 1, 3 * i + 2);
    }
    const long long u = 3 * (n - 6) / 4 + 1;
    plan.row1_positive_swap = {u, u + 1};
    plan.row2_swaps.emplace_back((3 * n + 2) / 4, (3 * n + 10) / 4);
    return plan;
}

SignedArray apply_switch_plan(const SignedArray& a, const SwitchPlan& plan) {
    if (a.rows() != 3) {
        throw std::invalid_argument("switch plan applies to 3-row arrays, got " +
                                    std::to_string(a.rows()) + " rows");
    }
    std::vector<long long> row1 = row_copy(a, 0);
    std::vector<long long> row2 = row_copy(a, 1);
    for (auto [u, v] : plan.row1_swaps) {
        swap_values_in_row(row1, u, v, 0);
        swap_values_in_row(row1, -u, -v, 0);
    }
    if (plan.row1_positive_swap) {
        auto [u, v] = *plan.row1_positive_swap;
        swap_values_in_row(row1, u, v, 0);
    }
    for (auto [u, v] : plan.row2_swaps) {
        swap_values_in_row(row2, u, v, 1);
        swap_values_in_row(row2, -u, -v, 1);
    }
    return SignedArray::from_rows({row1, row2, row_copy(a, 2)});
}

SignedArray switch_case1(const SignedArray& a, long long n) {
    return apply_switch_plan(a, case1_switch_plan(n));
}

SignedArray switch_case2(const SignedArray& a, long long n) {
    return apply_switch_plan(a, case2_switch_plan(n));
}

CompletionAssignment plan_completion(const ColumnSumProfile& profile, long long n) {
    const auto cols = static_cast<std::size_t>(n);
    if (n < 4 || n % 2 != 0 || profile.sums.size() != cols) {
        throw std::invalid_argument("completion: profile length must equal the even width n");
    }

    std::vector<std::size_t> plus_one, minus_one, plus_two, minus_two, zero;
    for (std::size_t j = 0; j < cols; ++j) {
        switch (profile.sums[j]) {
            case 1: plus_one.push_back(j); break;
            case -1: minus_one.push_back(j); break;
            case 2: plus_two.push_back(j); break;
            case -2: minus_two.push_back(j); break;
            case 0: zero.push_back(j); break;
            default:
                throw std::invalid_argument("completion: column sum " +
                                            std::to_string(profile.sums[j]) +
                                            " at column " + std::to_string(j + 1) +
                                            " is outside {0, ±1, ±2}");
        }
    }
    if (plus_one.size() != minus_one.size() || plus_two.size() != minus_two.size() ||
        (plus_two.size() != 0 && plus_two.size() != 2) || zero.size() % 4 != 0) {
        throw std::invalid_argument(
            "completion: profile not coverable by the pairing scheme "
            "(needs matched ±1 columns, zero or exactly two ±2 column pairs, "
            "and a multiple of four balanced columns)");
    }

    const long long base = 3 * n / 2;
    const long long top = base + n;
    CompletionAssignment out;
    out.row4.assign(cols, 0);
    out.row5.assign(cols, 0);

    // Matched ±1 columns consume consecutive values (x, x+1) from the bottom:
    // the +1 column takes (+x, -(x+1)), its -1 partner the opposite signs.
    long long next = base + 1;
    for (std::size_t t = 0; t < plus_one.size(); ++t) {
        const long long x = next;
        next += 2;
        out.row4[plus_one[t]] = x;
        out.row5[plus_one[t]] = -(x + 1);
        out.row4[minus_one[t]] = -x;
        out.row5[minus_one[t]] = x + 1;
    }

    // Zero columns take one value each, in blocks of four with row-four signs
    // (+,-,-,+) so both completion rows keep a zero sum.
    static constexpr int kZeroSigns[4] = {1, -1, -1, 1};
    for (std::size_t t = 0; t < zero.size(); ++t) {
        const long long value = next++;
        const long long signed_value = kZeroSigns[t % 4] * value;
        out.row4[zero[t]] = signed_value;
        out.row5[zero[t]] = -signed_value;
    }

    // The two ±2 column pairs consume the top four values as (top-3, top-1)
    // and (top-2, top), keeping the required gap of two within each pair.
    if (plus_two.size() == 2) {
        if (next != top - 3) {
            throw std::invalid_argument("completion: profile not coverable "
                                        "(±1/±2 column counts do not partition the value range)");
        }
        for (std::size_t t = 0; t < 2; ++t) {
            const long long x = top - 3 + static_cast<long long>(t);
            out.row4[plus_two[t]] = x;
            out.row5[plus_two[t]] = -(x + 2);
            out.row4[minus_two[t]] = -x;
            out.row5[minus_two[t]] = x + 2;
        }
        next = top + 1;
    }
    if (next != top + 1) {
        throw std::invalid_argument("completion: profile not coverable "
                                    "(value range {" + std::to_string(base + 1) + ",...," +
                                    std::to_string(top) + "} not fully consumed)");
    }
    return out;
}

SignedArray complete_two_rows(const SignedArray& b, const ColumnSumProfile& profile) {
    if (b.rows() != 3) {
        throw std::invalid_argument("complete_two_rows: expected a 3-row array, got " +
                                    std::to_string(b.rows()) + " rows");
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
        long long sum = 0;
        for (long long e : b.row(r)) sum += e;
        if (sum != 0) {
            throw std::invalid_argument("complete_two_rows: row " + std::to_string(r + 1) +
                                        " sums to " + std::to_string(sum) + ", expected 0");
        }
    }
    if (column_sums(b) != profile) {
        throw std::invalid_argument(
            "complete_two_rows: supplied profile does not match the column sums of the array");
    }
    const auto plan = plan_completion(profile, static_cast<long long>(b.cols()));
    return vstack(b, SignedArray::from_rows({plan.row4, plan.row5}));
}

SignedArray build_sma5(long long n) {
    if (n < 4 || n % 2 != 0) {
        throw std::invalid_argument("build_sma5: n must be even and >= 4, got " +
                                    std::to_string(n));
    }
    if (n == 4) return fixtures::fig5_sma_5_4();
    if (n == 6) return fixtures::fig5_sma_5_6();
    const SignedArray b = n % 4 == 0 ? switch_case1(build_sma3(n), n)
                                     : switch_case2(build_sma3(n), n);
    return complete_two_rows(b, column_sums(b));
}

}  // namespace sma
