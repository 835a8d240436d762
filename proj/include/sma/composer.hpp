#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "sma/grid.hpp"

namespace sma {

/// Construction route chosen for a requested size.
enum class Route {
    FIXTURE,            // served verbatim from a reference grid
    LEMMA3,             // three-row closed form
    LEMMA5,             // five-row switch-and-complete
    EVEN_EVEN,          // recursive block stacking, m and n even
    SIGN_VECTOR_N2,     // two-column array from a zero-sum sign vector
    STACK_3_PLUS_EVEN,  // three-row array over a shifted even block
    STACK_5_PLUS_EVEN,  // five-row array over a shifted even block
    NONEXISTENT,
};

const char* route_name(Route route);

struct ConstructionPlan {
    Route route;
    long long shift_amount = 0;  // set for the stacked routes
    std::string reason;          // set for NONEXISTENT: the violated condition
};

/// Raised by generate() for sizes where no array with the same-row property
/// exists; what() carries "NONEXISTENT: <violated condition>".
class NonexistentError : public std::runtime_error {
public:
    explicit NonexistentError(const std::string& condition)
        : std::runtime_error("NONEXISTENT: " + condition) {}
};

/// True iff an m x n array with the same-row ± property exists:
/// n = 2 with m >= 3 and m ≡ 0 or 3 (mod 4), or m >= 3 and n >= 4.
/// Throws std::invalid_argument for odd n.
bool feasible(long long m, long long n);

/// Canonical zero-sum signs for rows 1,...,m: blocks of four consecutive
/// integers signed (+,-,-,+) cancel exactly, prefixed by (+,+,-) on 1,2,3
/// when m ≡ 3 (mod 4). Requires m >= 3 with m ≡ 0 or 3 (mod 4).
std::vector<int> sign_vector(long long m);

/// The m x 2 array with row i = (s_i * i, -s_i * i).
SignedArray build_n2(long long m);

/// The route generate() would take, with the shift amount for stacked routes.
/// Never throws for even n; infeasible sizes yield a NONEXISTENT plan.
ConstructionPlan plan(long long m, long long n);

/// Builds an m x n signed magic array with the same-row ± property, support
/// exactly {±1,...,±(mn/2)}. Throws NonexistentError when feasible(m,n) is
/// false and std::invalid_argument for out-of-domain m or odd n.
SignedArray generate(long long m, long long n);

}  // namespace sma
