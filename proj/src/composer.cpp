#include "sma/composer.hpp"

#include "sma/even_block.hpp"
#include "sma/fixtures.hpp"
#include "sma/five_row.hpp"
#include "sma/three_row.hpp"

namespace sma {

namespace {

void require_even_width(long long n) {
    if (n < 2 || n % 2 != 0) {
        throw std::invalid_argument("n must be even and >= 2, got " + std::to_string(n));
    }
}

std::string infeasibility_reason(long long m) {
    if (m < 3) {
        return "m >= 3 is required (m = " + std::to_string(m) + ")";
    }
    // n = 2 with m ≡ 1 or 2 (mod 4): 1 + 2 + ... + m is odd, so no sign
    // assignment can cancel.
    return "n = 2 requires m ≡ 0 or 3 (mod 4) (m = " + std::to_string(m) + " ≡ " +
           std::to_string(m % 4) + ")";
}

ConstructionPlan plain_route(Route route) { return {route, 0, {}}; }

}  // namespace

const char* route_name(Route route) {
    switch (route) {
        case Route::FIXTURE: return "FIXTURE";
        case Route::LEMMA3: return "LEMMA3";
        case Route::LEMMA5: return "LEMMA5";
        case Route::EVEN_EVEN: return "EVEN_EVEN";
        case Route::SIGN_VECTOR_N2: return "SIGN_VECTOR_N2";
        case Route::STACK_3_PLUS_EVEN: return "STACK_3_PLUS_EVEN";
        case Route::STACK_5_PLUS_EVEN: return "STACK_5_PLUS_EVEN";
        case Route::NONEXISTENT: return "NONEXISTENT";
    }
    return "UNKNOWN";
}

bool feasible(long long m, long long n) {
    require_even_width(n);
    if (m < 3) return false;
    if (n == 2) return m % 4 == 0 || m % 4 == 3;
    return true;
}

std::vector<int> sign_vector(long long m) {
    if (m < 3 || (m % 4 != 0 && m % 4 != 3)) {
        throw std::invalid_argument("sign_vector: requires m >= 3 with m ≡ 0 or 3 (mod 4), got " +
                                    std::to_string(m));
    }
    std::vector<int> signs;
    signs.reserve(static_cast<std::size_t>(m));
    if (m % 4 == 3) {
        signs.insert(signs.end(), {1, 1, -1});  // 1 + 2 - 3 = 0
    }
    while (static_cast<long long>(signs.size()) < m) {
        signs.insert(signs.end(), {1, -1, -1, 1});  // a - (a+1) - (a+2) + (a+3) = 0
    }
    return signs;
}

SignedArray build_n2(long long m) {
    const std::vector<int> signs = sign_vector(m);
    std::vector<long long> entries;
    entries.reserve(static_cast<std::size_t>(2 * m));
    for (long long i = 1; i <= m; ++i) {
        const long long e = signs[static_cast<std::size_t>(i - 1)] * i;
        entries.push_back(e);
        entries.push_back(-e);
    }
    return SignedArray(static_cast<std::size_t>(m), 2, std::move(entries));
}

ConstructionPlan plan(long long m, long long n) {
    require_even_width(n);
    if (!feasible(m, n)) {
        return {Route::NONEXISTENT, 0, infeasibility_reason(m)};
    }
    if (n == 2) return plain_route(Route::SIGN_VECTOR_N2);
    if (m == 3) return plain_route(n == 4 ? Route::FIXTURE : Route::LEMMA3);
    if (m == 5) return plain_route(n <= 6 ? Route::FIXTURE : Route::LEMMA5);
    if (m % 2 == 0) {
        return plain_route(m <= 6 && n <= 6 ? Route::FIXTURE : Route::EVEN_EVEN);
    }
    if (m % 4 == 3) return {Route::STACK_3_PLUS_EVEN, 3 * n / 2, {}};
    return {Route::STACK_5_PLUS_EVEN, 5 * n / 2, {}};
}

SignedArray generate(long long m, long long n) {
    const ConstructionPlan p = plan(m, n);
    switch (p.route) {
        case Route::NONEXISTENT:
            throw NonexistentError(p.reason);
        case Route::SIGN_VECTOR_N2:
            return build_n2(m);
        case Route::FIXTURE:
        case Route::LEMMA3:
        case Route::LEMMA5:
        case Route::EVEN_EVEN:
            if (m == 3) return build_sma3(n);
            if (m == 5) return build_sma5(n);
            return build_even(m, n);
        case Route::STACK_3_PLUS_EVEN:
            return vstack(build_sma3(n), shift(build_even(m - 3, n), p.shift_amount));
        case Route::STACK_5_PLUS_EVEN:
            return vstack(build_sma5(n), shift(build_even(m - 5, n), p.shift_amount));
    }
    throw std::logic_error("generate: unhandled route");
}

}  // namespace sma
