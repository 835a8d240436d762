#include "sma/even_block.hpp"

#include <stdexcept>
#include <string>

#include "sma/fixtures.hpp"

namespace sma {

const SignedArray& base_block(long long m, long long n) {
    if (m == 4 && n == 4) return fixtures::fig2_ssma_4_4();
    if (m == 6 && n == 4) return fixtures::fig2_ssma_6_4();
    if (m == 4 && n == 6) return fixtures::fig3_ssma_4_6();
    if (m == 6 && n == 6) return fixtures::fig3_ssma_6_6();
    throw std::invalid_argument("base_block: no base grid for " + std::to_string(m) + "x" +
                                std::to_string(n));
}

SignedArray build_even(long long m, long long n) {
    if (m < 4 || n < 4 || m % 2 != 0 || n % 2 != 0) {
        throw std::invalid_argument("build_even: m and n must be even and >= 4, got " +
                                    std::to_string(m) + "x" + std::to_string(n));
    }
    if (m <= 6) {
        if (n <= 6) return base_block(m, n);
        return hstack(build_even(m, n - 4), shift(base_block(m, 4), m * (n - 4) / 2));
    }
    return vstack(build_even(m - 4, n), shift(build_even(4, n), (m - 4) * n / 2));
}

}  // namespace sma
