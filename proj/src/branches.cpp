#include "cuboid/branches.hpp"

#include "cuboid/error.hpp"
#include "cuboid/exclusion.hpp"
#include "cuboid/gcd_lemma.hpp"
#include "cuboid/padic.hpp"

namespace cuboid::exclusion {

std::string_view to_string(Obstruction o) noexcept {
    switch (o) {
        case Obstruction::Valuation3: return "valuation_3";
        case Obstruction::Valuation2: return "valuation_2";
        case Obstruction::Mod16: return "mod_16";
        case Obstruction::DividesX72: return "x_divides_72";
        case Obstruction::GcdLemma: return "gcd_lemma";
        case Obstruction::TerminalUnit: return "terminal_x_1";
        case Obstruction::TerminalThree: return "terminal_x_3";
    }
    return "unknown";
}

namespace {

struct Sides {
    Int lhs, rhs;
    ValuationProfile at2, at3;
};

bool valuations_differ(const ValuationProfile& vp) { return vp.blocks(); }

std::uint64_t finite(const padic::Valuation& v) { return v.value.value_or(~std::uint64_t{0}); }

}  // namespace

BranchVerdict branch_analysis(const Int& X, const CuboidParams& params) {
    if (X == 0) throw Error(ErrorCode::ZeroX, "branch analysis needs X != 0");
    const Int& delta = params.delta();
    const Sides s{star_lhs(X, delta), star_rhs(X, params.a(), params.u()), valuation_profile(X, params, 2),
                  valuation_profile(X, params, 3)};
    const bool coprime = gcd(X, delta) == 1;
    const bool a_odd = !divides(2, params.a());
    const bool u_odd = !divides(2, params.u());
    auto gcd_lemma = [&](std::string branch, std::string subcase) {
        return BranchVerdict{std::move(branch), std::move(subcase), Obstruction::GcdLemma,
                             !coprime && classify_gcd_case(X, params).blocked};
    };
    auto divides_72 = [&](std::string branch) {
        // Nonzero residue of LHS - RHS modulo X.
        return BranchVerdict{std::move(branch), "X!|72", Obstruction::DividesX72,
                             coprime && !divides(X, 72) && mod(s.lhs - s.rhs, X) != 0};
    };

    const auto k = *padic::nu(3, params.m()).value;
    if (k >= 1) {
        const std::string I = "I";
        const auto x = *padic::nu(3, X).value;
        if (x == 0) {
            return {I, "3!|X", Obstruction::Valuation3,
                    finite(s.at3.nu_lhs) == 0 && finite(s.at3.nu_rhs) >= 2};
        }
        if (x >= 2) {
            return {I, "3|X,x>=2", Obstruction::Valuation3,
                    finite(s.at3.nu_lhs) == 2 && finite(s.at3.nu_rhs) == 2 * k + 2 * x};
        }
        // nu_3(X^2 - 9 delta^2) = 2 + r
        const auto nu_second = s.at3.nu_lhs_factor2;
        if (nu_second.infinite() || *nu_second.value != 2 + 2 * k)
            return {I, "3|X,x=1,r!=2k", Obstruction::Valuation3, valuations_differ(s.at3)};

        if (!coprime) return gcd_lemma(I, "edge:gcd");
        if (!divides(X, 72)) return divides_72(I);
        if (a_odd && u_odd) {
            return {I, "edge:both_odd", Obstruction::Valuation2,
                    finite(s.at2.nu_lhs) == 0 && finite(s.at2.nu_rhs) == 2};
        }
        if (divides(2, X)) {
            return {I, "edge:opposite_parity,X_even", Obstruction::Valuation2,
                    finite(s.at2.nu_lhs) <= 3 && finite(s.at2.nu_rhs) >= 6};
        }
        // X = +-3: (1 - delta^2)(9 - 8 delta^2) = (2au)^2 with coprime negative factors.
        return {I, "edge:X=+-3", Obstruction::TerminalThree,
                !padic::is_perfect_square(delta * delta - 1) && s.lhs != s.rhs};
    }

    if (divides(3, X)) return gcd_lemma("II", "3|X");
    if (a_odd && u_odd) {
        const std::string II1 = "II.1";
        if (divides(2, X)) return gcd_lemma(II1, "X_even");
        return {II1, "X_odd", Obstruction::Mod16, mod(s.lhs, 16) == 1 && mod(s.rhs, 16) == 4};
    }

    const std::string II2 = "II.2";
    const auto x2 = *padic::nu(2, X).value;
    if (x2 == 1) {
        return {II2, "nu2(X)=1", Obstruction::Valuation2,
                finite(s.at2.nu_lhs) == 2 && finite(s.at2.nu_rhs) >= 6};
    }
    if (x2 >= 2) {
        return {II2, "nu2(X)>=2", Obstruction::Valuation2,
                finite(s.at2.nu_lhs) == 3 && finite(s.at2.nu_rhs) >= 8};
    }
    if (!coprime) return gcd_lemma(II2, "X_odd,gcd");
    if (!divides(X, 72)) return divides_72(II2);
    // X = +-1: 1 - 9 delta^2 = -n^2 would need (3 delta)^2 - n^2 = 1.
    return {II2, "X=+-1", Obstruction::TerminalUnit,
            !padic::is_perfect_square(9 * delta * delta - 1) && s.lhs != s.rhs};
}

}  // namespace cuboid::exclusion
