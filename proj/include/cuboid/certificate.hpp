#pragma once

/**
 * Assembly of the full irreducibility certificate for P_{a,u}.
 *
 * Every factorization pattern of a degree-8 polynomial with at least two
 * parts is listed with the exclusion that kills it. Patterns with an odd
 * part are closed under t -> -t: an odd-degree irreducible factor f cannot
 * satisfy f(-t) = +-f(t), since then f(0) = 0 and t | P, contradicting
 * D > 0. So f(t) f(-t) is an even factor of degree 2 or 6, a 2+6 split.
 * This closure step is artifact-level reasoning.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "cuboid/exclusion.hpp"
#include "cuboid/oracle.hpp"
#include "cuboid/params.hpp"

namespace cuboid::exclusion {

// All partitions of 8 with at least two parts, largest part first, "5+3" style.
std::vector<std::string> multi_part_patterns();

struct StructuralRun {
    std::vector<Int> star_solutions;
    std::vector<Even44Candidate> even44;
    Conj44Search conj44;
    Exclude26 quad26;

    bool complete() const {
        return star_solutions.empty() && even44.empty() && conj44.candidates.empty() && quad26.excluded;
    }
};

StructuralRun run_structural(const CuboidParams& params);
oracle::StructuralEvidence structural_evidence(const StructuralRun& run);

// Structural exclusions plus the independent oracle. An Inconclusive oracle
// leaves a partial certificate whose structural part is still complete.
oracle::IrredCertificate certify_irreducible(const CuboidParams& params,
                                             const std::vector<std::uint64_t>& primes = oracle::default_primes());

}  // namespace cuboid::exclusion
