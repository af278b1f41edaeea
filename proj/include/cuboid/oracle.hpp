#pragma once

/**
 * Irreducibility evidence from factorization patterns modulo small primes.
 *
 * If f = g h over Z with f monic of degree n, then modulo every prime p for
 * which f mod p is squarefree, the irreducible factor degrees of f mod p
 * split into two sub-multisets summing to deg g and deg h. Intersecting the
 * achievable sub-multiset sums across primes and finding only {0, n} proves
 * f irreducible. This path is independent of the structural exclusions.
 */

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cuboid/bigint.hpp"
#include "cuboid/params.hpp"
#include "cuboid/zpoly.hpp"

namespace cuboid::oracle {

struct DegreePattern {
    std::uint64_t prime = 0;
    std::vector<unsigned> degrees;  // ascending

    unsigned total() const;
    friend bool operator==(const DegreePattern&, const DegreePattern&) = default;
};

std::string to_string(const DegreePattern& pattern);

enum class Verdict { Proven, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct PatternEvidence {
    std::string pattern;   // e.g. "4+4", "2+2+4"
    std::string evidence;  // how it is excluded
};

struct StructuralEvidence {
    std::vector<PatternEvidence> patterns;
    bool complete = false;
};

struct IrredCertificate {
    Int a, u;
    Verdict verdict = Verdict::Inconclusive;  // oracle verdict
    std::vector<DegreePattern> patterns;
    std::vector<std::uint64_t> skipped_primes;
    std::set<unsigned> intersection;
    std::vector<std::string> transcript;
    std::optional<StructuralEvidence> structural;

    bool full() const { return verdict == Verdict::Proven && structural && structural->complete; }
};

// Distinct-degree factorization of monic f modulo p, or nullopt (Skip) when
// f mod p is not squarefree. Throws Error{NotPrime} or Error{NotMonic}.
std::optional<DegreePattern> modp_degree_pattern(const IntPoly& f, std::uint64_t p);
std::optional<DegreePattern> modp_degree_pattern(const CuboidParams& params, std::uint64_t p);

std::set<unsigned> subset_sums(const DegreePattern& pattern);

// Sums achievable in every pattern. Throws Error{EmptyInput}.
std::set<unsigned> pattern_intersect(const std::vector<DegreePattern>& patterns);

IrredCertificate oracle_certify_poly(const IntPoly& f, const std::vector<std::uint64_t>& primes);
IrredCertificate oracle_certify(const CuboidParams& params, const std::vector<std::uint64_t>& primes);

// All primes below 200.
std::vector<std::uint64_t> default_primes();

}  // namespace cuboid::oracle
