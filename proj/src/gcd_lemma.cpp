#include "cuboid/gcd_lemma.hpp"

#include <algorithm>

#include "cuboid/exclusion.hpp"
#include "cuboid/padic.hpp"

namespace cuboid::exclusion {

namespace {

std::string valuation_label(const Int& p, std::uint64_t x, std::uint64_t d) {
    if (p != 2) {
        if (d > x) return "odd_p:d>x:valuation";
        if (d == x) return "odd_p:d=x:valuation";
        return p == 3 ? "p3:d<x:valuation" : "odd_p:d<x:valuation";
    }
    if (x >= d + 2) return "p2:B:x>=d+2:valuation";
    if (x == d + 1) return "p2:B:x=d+1:valuation";
    if (x == d) return "p2:C:x=d:valuation";
    return "p2:A:step1_valuation";
}

std::string residue_label(const Int& p, std::uint64_t x, std::uint64_t d) {
    if (p != 2) {
        if (d < x) return p == 3 ? "p3:d<x:mod3" : "odd_p:d<x:mod_p";
        return "odd_p:mod_p";
    }
    if (x == d + 1) return "p2:B:x=d+1:odd_part_mod8";
    if (x < d) return "p2:A:step3_mod8";
    return "p2:mod8";
}

std::string residual_label(const Int& p, std::uint64_t x, std::uint64_t d) {
    if (p != 2 && p != 3 && d < x) return "odd_p:d<x:elliptic_residual";
    if (p == 2 && x < d) return "p2:A:steps4-5_residual";
    return "unattributed";
}

}  // namespace

GcdCase classify_gcd_case(const Int& X, const CuboidParams& params) {
    const Int lhs = star_lhs(X, params.delta());
    const Int rhs = star_rhs(X, params.a(), params.u());
    const bool holds = lhs == rhs;
    if (X == 0) return {0, "x_zero", lhs != rhs, holds};

    std::vector<Int> primes;
    for (const auto& [p, e] : padic::factorize(gcd(X, params.delta()))) primes.push_back(p);
    // Odd primes first, then 2.
    std::stable_partition(primes.begin(), primes.end(), [](const Int& p) { return p != 2; });

    struct Local {
        Int p;
        std::uint64_t x, d;
        ValuationProfile vp;
    };
    std::vector<Local> locals;
    for (const Int& p : primes) {
        locals.push_back({p, *padic::nu(p, X).value, *padic::nu(p, params.delta()).value,
                          valuation_profile(X, params, p)});
    }

    for (const auto& l : locals)
        if (l.vp.blocks()) return {l.p, valuation_label(l.p, l.x, l.d), true, holds};

    for (const auto& l : locals) {
        // Tied finite valuations: compare unit parts.
        const Int pv = pow(l.p, *l.vp.nu_lhs.value);
        const Int modulus = l.p == 2 ? Int(8) : l.p;
        if (mod(lhs / pv, modulus) != mod(rhs / pv, modulus))
            return {l.p, residue_label(l.p, l.x, l.d), true, holds};
    }

    const auto& first = locals.front();
    const std::string label = residual_label(first.p, first.x, first.d);
    return {first.p, label, label != "unattributed" && !holds, holds};
}

void GcdLemmaReport::merge(const GcdLemmaReport& other) {
    pairs += other.pairs;
    checked += other.checked;
    skipped_coprime += other.skipped_coprime;
    unattributed += other.unattributed;
    for (const auto& [k, v] : other.tally) tally[k] += v;
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

GcdLemmaReport verify_gcd_lemma_for(const CuboidParams& params, const Int& max_abs) {
    GcdLemmaReport report;
    report.pairs = 1;
    for (Int X = -max_abs; X <= max_abs; ++X) {
        if (gcd(X, params.delta()) == 1) {
            ++report.skipped_coprime;
            continue;
        }
        ++report.checked;
        const GcdCase c = classify_gcd_case(X, params);
        ++report.tally[c.label];
        if (!c.blocked) ++report.unattributed;
        if (c.star_holds) report.violations.emplace_back(params, X);
    }
    return report;
}

GcdLemmaReport verify_gcd_lemma(const Int& max_abs, const Int& param_range) {
    GcdLemmaReport report;
    for (Int a = 1; a <= param_range; ++a) {
        for (Int u = 1; u <= param_range; ++u) {
            if (a == u || gcd(a, u) != 1) continue;
            report.merge(verify_gcd_lemma_for(CuboidParams::make(a, u), max_abs));
        }
    }
    return report;
}

}  // namespace cuboid::exclusion
