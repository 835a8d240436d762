#include "sma/heffter.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace sma {

namespace {

// One-of-±x support over {1,...,mn}: each magnitude exactly once, either sign.
VerificationReport check_half_support(const SignedArray& h) {
    VerificationReport report;
    const long long full = static_cast<long long>(h.rows() * h.cols());
    std::map<long long, std::size_t> seen;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = 0; c < h.cols(); ++c) {
            const long long e = h(r, c);
            if (e == 0 || std::llabs(e) > full) {
                report.is_support_exact = false;
                report.violations.push_back({"support", r + 1, c + 1,
                                             "entry " + std::to_string(e) +
                                                 " outside ±{1,...," + std::to_string(full) + "}"});
            } else {
                ++seen[std::llabs(e)];
            }
        }
    }
    for (long long x = 1; x <= full; ++x) {
        const auto it = seen.find(x);
        const std::size_t count = it == seen.end() ? 0 : it->second;
        if (count != 1) {
            report.is_support_exact = false;
            report.violations.push_back({"support", 0, 0,
                                         "magnitude " + std::to_string(x) + " appears " +
                                             std::to_string(count) + " times, expected once"});
        }
    }
    return report;
}

VerificationReport check_col_sums(const SignedArray& h) {
    VerificationReport report;
    for (std::size_t c = 0; c < h.cols(); ++c) {
        long long sum = 0;
        for (std::size_t r = 0; r < h.rows(); ++r) sum += h(r, c);
        if (sum != 0) {
            report.is_col_zero = false;
            report.violations.push_back(
                {"col-sum", 0, c + 1, "column sums to " + std::to_string(sum)});
        }
    }
    return report;
}

}  // namespace

VerificationReport verify_heffter(const SignedArray& h) {
    VerificationReport report = check_half_support(h);
    for (std::size_t r = 0; r < h.rows(); ++r) {
        long long sum = 0;
        for (std::size_t c = 0; c < h.cols(); ++c) sum += h(r, c);
        if (sum != 0) {
            report.is_row_zero = false;
            report.violations.push_back(
                {"row-sum", r + 1, 0, "row sums to " + std::to_string(sum)});
        }
    }
    report.merge(check_col_sums(h));
    return report;
}

VerificationReport verify_mirror_ready(const SignedArray& h) {
    VerificationReport report = check_half_support(h);
    report.merge(check_col_sums(h));
    return report;
}

SignedArray mirror_concat(const SignedArray& h) {
    const VerificationReport report = verify_mirror_ready(h);
    if (!report.passed()) {
        throw std::invalid_argument(
            "mirror_concat: input is not mirror-ready (" + report.violations.front().kind + ": " +
            report.violations.front().detail + ")");
    }
    return hstack(h, negate(h));
}

}  // namespace sma
