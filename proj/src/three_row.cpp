#include "sma/three_row.hpp"

#include <stdexcept>
#include <string>

#include "sma/fixtures.hpp"

namespace sma {

namespace {

void check_column(long long k, long long j) {
    if (2 * k < 6) {
        throw std::invalid_argument("row entry formula requires 2k >= 6, got k = " +
                                    std::to_string(k));
    }
    if (j < 1 || j > 2 * k) {
        throw std::invalid_argument("column index " + std::to_string(j) +
                                    " out of range 1,...," + std::to_string(2 * k));
    }
}

// p_j = ceil(j/2), so columns pair off: p ranges over 1,...,k.
long long p_index(long long j) { return (j + 1) / 2; }

}  // namespace

long long row1_entry(long long k, long long j) {
    check_column(k, j);
    const long long p = p_index(j);
    switch (j % 4) {
        case 0: return -(3 * p - 2) / 2;
        case 1: return (3 * p - 1) / 2;
        case 2: return -(3 * p - 1) / 2;
        default: return (3 * p - 2) / 2;  // j ≡ 3 (mod 4)
    }
}

long long row3_entry(long long k, long long j) {
    check_column(k, j);
    if (j == 1) return -3 * k;
    if (j == 2 * k) return 3 * k;
    const long long p = p_index(j);
    if (j % 2 == 0) return -3 * (k - p);
    return 3 * (k - p + 1);
}

SignedArray build_sma3(long long n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("build_sma3: n must be even and >= 2, got " +
                                    std::to_string(n));
    }
    if (n == 2) return fixtures::fig1_sma_3_2();
    if (n == 4) return fixtures::fig1_sma_3_4();

    const long long k = n / 2;
    std::vector<long long> top, middle, bottom;
    top.reserve(n);
    middle.reserve(n);
    bottom.reserve(n);
    for (long long j = 1; j <= n; ++j) {
        const long long r1 = row1_entry(k, j);
        const long long r3 = row3_entry(k, j);
        top.push_back(r1);
        middle.push_back(-(r1 + r3));
        bottom.push_back(r3);
    }
    return SignedArray::from_rows({top, middle, bottom});
}

}  // namespace sma
