#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid::exclusion {

/// Integer points of m^2 = u^2 - 8w^2, n^2 = u^2 - 9w^2, reported with
/// u, w > 0 and m, n >= 0 (signs are free).
struct ResidualPoint {
    std::int64_t u, w, m, n;
    friend bool operator==(const ResidualPoint&, const ResidualPoint&) = default;
};

struct ResidualSearch {
    std::int64_t bound = 0;
    std::vector<ResidualPoint> nontrivial;  // n != 0, w != 0; expected empty
    std::size_t trivial_w_zero = 0;         // w = 0: u = +-m = +-n
    std::size_t trivial_n_zero = 0;         // n = 0: u = 3w, m = w
};

// Exhaustive over 0 <= u <= bound, 0 <= w <= bound.
ResidualSearch residual_system_search(std::int64_t bound);

// (x, y) = (n^2/w^2, n m u / w^3) on y^2 = x(x+1)(x+9), for w != 0.
std::pair<Rational, Rational> residual_to_e0(const ResidualPoint& pt);

struct P2ResidualHit {
    std::int64_t m, n, k, delta1;
    unsigned d;
};

struct P2ResidualSearch {
    std::int64_t bound = 0;
    std::size_t pairs_examined = 0;    // odd coprime (m, n) reaching the equations
    std::size_t rejected_parity = 0;   // m or n even
    std::size_t pruned_negative = 0;   // 9m^2 - 8n^2 < 0
    std::vector<P2ResidualHit> hits;   // expected empty
};

/// Odd coprime 1 <= m, n <= bound and d in [3, 8] with
/// m^2 - n^2 = 2^(2d-2) delta1^2 (delta1 odd) and 9m^2 - 8n^2 = k^2.
P2ResidualSearch verify_p2_residual(std::int64_t bound);

}  // namespace cuboid::exclusion
