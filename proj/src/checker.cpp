#include "sma/checker.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>

namespace sma {

namespace {

std::string cell_name(std::size_t r, std::size_t c) {
    return "(" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ")";
}

}  // namespace

SupportSpec support_of(const SignedArray& a) {
    return SupportSpec{static_cast<long long>(a.rows() * a.cols() / 2)};
}

void VerificationReport::merge(const VerificationReport& other) {
    is_support_exact = is_support_exact && other.is_support_exact;
    is_row_zero = is_row_zero && other.is_row_zero;
    is_col_zero = is_col_zero && other.is_col_zero;
    has_same_row_pairs = has_same_row_pairs && other.has_same_row_pairs;
    is_shiftable = is_shiftable && other.is_shiftable;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

VerificationReport verify_sma(const SignedArray& a) {
    VerificationReport report;
    if (a.cell_count() == 0 || a.cell_count() % 2 != 0) {
        report.is_support_exact = false;
        report.violations.push_back({"support", 0, 0,
                                     "cell count " + std::to_string(a.cell_count()) +
                                         " does not admit a zero-free symmetric support"});
        return report;
    }
    const long long half = support_of(a).half_size;

    // Support: each of ±1,...,±half exactly once.
    std::map<long long, std::size_t> count;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const long long e = a(r, c);
            if (e == 0 || std::llabs(e) > half) {
                report.is_support_exact = false;
                report.violations.push_back({"support", r + 1, c + 1,
                                             "entry " + std::to_string(e) + " outside {±1,...,±" +
                                                 std::to_string(half) + "}"});
            } else {
                ++count[e];
            }
        }
    }
    for (long long x = 1; x <= half; ++x) {
        for (long long e : {x, -x}) {
            const auto it = count.find(e);
            const std::size_t seen = it == count.end() ? 0 : it->second;
            if (seen != 1) {
                report.is_support_exact = false;
                report.violations.push_back({"support", 0, 0,
                                             "value " + std::to_string(e) + " appears " +
                                                 std::to_string(seen) + " times, expected once"});
            }
        }
    }

    for (std::size_t r = 0; r < a.rows(); ++r) {
        long long sum = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) sum += a(r, c);
        if (sum != 0) {
            report.is_row_zero = false;
            report.violations.push_back(
                {"row-sum", r + 1, 0, "row sums to " + std::to_string(sum)});
        }
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        long long sum = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) sum += a(r, c);
        if (sum != 0) {
            report.is_col_zero = false;
            report.violations.push_back(
                {"col-sum", 0, c + 1, "column sums to " + std::to_string(sum)});
        }
    }
    return report;
}

VerificationReport verify_same_row_pairs(const SignedArray& a) {
    VerificationReport report;
    // magnitude -> rows where each sign was seen
    struct Sighting {
        std::vector<std::size_t> pos_rows, neg_rows;
    };
    std::map<long long, Sighting> seen;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const long long e = a(r, c);
            if (e > 0) seen[e].pos_rows.push_back(r);
            if (e < 0) seen[-e].neg_rows.push_back(r);
        }
    }
    for (const auto& [mag, s] : seen) {
        if (s.pos_rows.empty() || s.neg_rows.empty()) {
            report.has_same_row_pairs = false;
            report.violations.push_back({"pairing", 0, 0,
                                         "magnitude " + std::to_string(mag) + " has no " +
                                             (s.pos_rows.empty() ? "positive" : "negative") +
                                             " partner"});
            continue;
        }
        for (std::size_t pr : s.pos_rows) {
            for (std::size_t nr : s.neg_rows) {
                if (pr != nr) {
                    report.has_same_row_pairs = false;
                    report.violations.push_back(
                        {"pairing", pr + 1, 0,
                         "+" + std::to_string(mag) + " in row " + std::to_string(pr + 1) + " but " +
                             std::to_string(-mag) + " in row " + std::to_string(nr + 1)});
                }
            }
        }
    }
    return report;
}

VerificationReport verify_shiftable(const SignedArray& a) {
    VerificationReport report;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (a(r, c) == 0) {
                throw std::invalid_argument("verify_shiftable: zero entry at " + cell_name(r, c));
            }
        }
    }
    for (std::size_t r = 0; r < a.rows(); ++r) {
        long long pos = 0, neg = 0;
        for (std::size_t c = 0; c < a.cols(); ++c) (a(r, c) > 0 ? pos : neg)++;
        if (pos != neg) {
            report.is_shiftable = false;
            report.violations.push_back({"balance", r + 1, 0,
                                         "row has " + std::to_string(pos) + " positive vs " +
                                             std::to_string(neg) + " negative entries"});
        }
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
        long long pos = 0, neg = 0;
        for (std::size_t r = 0; r < a.rows(); ++r) (a(r, c) > 0 ? pos : neg)++;
        if (pos != neg) {
            report.is_shiftable = false;
            report.violations.push_back({"balance", 0, c + 1,
                                         "column has " + std::to_string(pos) + " positive vs " +
                                             std::to_string(neg) + " negative entries"});
        }
    }
    return report;
}

ColumnSumProfile column_sums(const SignedArray& a) {
    ColumnSumProfile profile;
    profile.sums.assign(a.cols(), 0);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) profile.sums[c] += a(r, c);
    }
    return profile;
}

}  // namespace sma
