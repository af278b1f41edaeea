#pragma once

#include <string>
#include <string_view>

#include "cuboid/bigint.hpp"
#include "cuboid/params.hpp"

namespace cuboid::exclusion {

// Which concrete comparison rules a star-equation candidate out.
enum class Obstruction {
    Valuation3,     // nu_3(LHS) != nu_3(RHS), read off mod 3
    Valuation2,     // nu_2(LHS) != nu_2(RHS), read off mod 8
    Mod16,          // LHS = 1, RHS = 4 (mod 16)
    DividesX72,     // LHS = 72 delta^4 (mod X) with gcd(X, delta) = 1 forces X | 72
    GcdLemma,       // gcd(X, delta) > 1
    TerminalUnit,   // X = +-1: 9 delta^2 - 1 would have to be a square
    TerminalThree,  // X = +-3: delta^2 - 1 would have to be a square
};

std::string_view to_string(Obstruction o) noexcept;

/// Position of (X, params) in the case split by 3 | au (branch "I") versus
/// 3 !| au with a, u both odd ("II.1") or of opposite parity ("II.2").
struct BranchVerdict {
    std::string branch;
    std::string subcase;
    Obstruction obstruction;
    // The obstruction's claimed inequality was recomputed on the actual numbers.
    bool confirmed = false;
};

// When several obstructions apply, the first in case-split order is reported:
// branch I before II, valuation before residue. Throws Error{ZeroX}.
BranchVerdict branch_analysis(const Int& X, const CuboidParams& params);

}  // namespace cuboid::exclusion
