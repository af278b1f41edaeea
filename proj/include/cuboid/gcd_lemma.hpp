#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "cuboid/bigint.hpp"
#include "cuboid/params.hpp"

namespace cuboid::exclusion {

/// How a star-equation candidate X with gcd(X, delta) > 1 is ruled out.
///
/// Labels name the branch of the coprimality argument:
///   "odd_p:d>x:valuation", "odd_p:d=x:valuation",
///   "odd_p:d<x:valuation", "odd_p:d<x:mod_p", "odd_p:d<x:elliptic_residual",
///   "p3:d<x:valuation", "p3:d<x:mod3",
///   "p2:B:x>=d+2:valuation", "p2:B:x=d+1:valuation", "p2:B:x=d+1:odd_part_mod8",
///   "p2:C:x=d:valuation",
///   "p2:A:step1_valuation", "p2:A:step3_mod8", "p2:A:steps4-5_residual",
///   "x_zero".
/// A residue separation in a configuration the argument settles by valuations
/// alone is labelled "odd_p:mod_p" or "p2:mod8"; a case nothing separates is
/// "unattributed".
/// Here x = nu_p(X) and d = nu_p(delta). Valuation comparisons are tried at
/// every common prime before residue comparisons, odd primes before 2.
struct GcdCase {
    Int prime;           // prime carrying the obstruction; 0 for "x_zero"
    std::string label;
    bool blocked = false;  // the labelled comparison really separates LHS and RHS
    bool star_holds = false;
};

// Precondition: gcd(X, delta) > 1 (X = 0 included).
GcdCase classify_gcd_case(const Int& X, const CuboidParams& params);

struct GcdLemmaReport {
    std::size_t pairs = 0;
    std::size_t checked = 0;          // (params, X) with gcd(X, delta) > 1
    std::size_t skipped_coprime = 0;  // gcd(X, delta) = 1, outside the lemma
    std::size_t unattributed = 0;     // no labelled comparison separated the sides
    std::map<std::string, std::size_t> tally;
    std::vector<std::pair<CuboidParams, Int>> violations;  // star equation holds

    void merge(const GcdLemmaReport& other);
};

// All X with |X| <= max_abs for one parameter pair.
GcdLemmaReport verify_gcd_lemma_for(const CuboidParams& params, const Int& max_abs);

// All valid pairs with a, u <= param_range and |X| <= max_abs.
GcdLemmaReport verify_gcd_lemma(const Int& max_abs, const Int& param_range);

}  // namespace cuboid::exclusion
