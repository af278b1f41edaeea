#pragma once

/**
 * Exact mechanization of the 4+4 and 2+6 exclusions for P_{a,u}.
 *
 * The 4+4 split comes in two shapes: both quartic factors even (E), or a
 * conjugate pair F(t) F(-t) (C). Shape (E) reduces, with X = p - 3 delta,
 * to the quartic Diophantine condition
 *
 *     (X^2 - 8 delta^2)(X^2 - 9 delta^2) = 4 a^2 u^2 X^2,
 *
 * referred to below as the star equation. Shape (C) reduces to a finite
 * enumeration over factor pairs of 12 delta. An even quadratic factor
 * t^2 + q exists iff Q(-q) = 0; that equation, read as a quadratic in
 * a0 = a^2 u^2, has discriminant 32 delta^2 q^2, never a square.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/bigint.hpp"
#include "cuboid/padic.hpp"
#include "cuboid/params.hpp"
#include "cuboid/zpoly.hpp"

namespace cuboid::exclusion {

// ---------------------------------------------------------------------------
// Star equation

// (X^2 - 8 delta^2)(X^2 - 9 delta^2)
Int star_lhs(const Int& X, const Int& delta);
// 4 a^2 u^2 X^2
Int star_rhs(const Int& X, const Int& a, const Int& u);

struct StarInstance {
    Int X;
    Int lhs;
    Int rhs;

    static StarInstance make(const Int& X, const CuboidParams& params);
    // Stored sides must agree with a recomputation from (X, params).
    bool consistent_with(const CuboidParams& params) const;
    bool holds() const { return lhs == rhs; }
};

bool star_holds(const Int& X, const CuboidParams& params);
// Same test on raw integers; no hypothesis on (delta, a, u) is enforced.
bool star_holds_raw(const Int& X, const Int& delta, const Int& a, const Int& u);

/// isqrt(17 delta^2 + 4 a^2 u^2) + 1.
///
/// With W = X^2 the star equation reads W^2 - (17 delta^2 + 4 a0) W + 72 delta^4 = 0.
/// Both roots are real with positive product, so each is at most their sum
/// 17 delta^2 + 4 a0, and every integer solution has |X| < the returned bound.
Int star_search_bound(const CuboidParams& params);

/// All integer X with |X| <= star_search_bound + margin satisfying the star
/// equation, ascending. Exhaustive; both sides are even in X so the scan runs
/// over X >= 0 and mirrors hits.
std::vector<Int> solve_star(const CuboidParams& params, const Int& margin = 0);

// ---------------------------------------------------------------------------
// Identities of the even-even derivation. Each throws std::logic_error if
// its two computation routes disagree.

// M = B + p^2 - A p, checked against X^2 - 8 delta^2 - 2 a0 with X = p - 3 delta.
Int derive_M(const Int& p_coeff, const CuboidParams& params);

// M^2 - 4D; when X is given, checked against (X^2 - 8 delta^2)(X^2 - 8 delta^2 - 4 a0).
Int t_squared(const Int& M, const CuboidParams& params, const std::optional<Int>& X = std::nullopt);

// 2C - A M, checked against -6 delta X^2 + 48 delta^3.
Int two_c_minus_am(const Int& p_coeff, const CuboidParams& params);

// For F = t^4 + p t^2 + q, G = t^4 + r t^2 + s with arbitrary integers, the
// product's coefficients satisfy sigma T (A - 2p) = 2C - A M where
// sigma T = q - s and M = q + s.
bool key_relation_holds(const Int& p, const Int& q, const Int& r, const Int& s);

// ---------------------------------------------------------------------------
// 4+4, shape (E)

struct Even44Candidate {
    Int p, q, r, s;  // F = t^4 + p t^2 + q, G = t^4 + r t^2 + s
    friend bool operator==(const Even44Candidate&, const Even44Candidate&) = default;
};

/// Every (p, q, r, s) with (t^4 + p t^2 + q)(t^4 + r t^2 + s) equal to
/// t^8 + A t^6 + B t^4 + C t^2 + D, D != 0. Enumerates qs = D over signed
/// divisor pairs, then solves p^2 - A p + (B - q - s) = 0 exactly.
std::vector<Even44Candidate> solve_even_44_coeffs(const Int& A, const Int& B, const Int& C, const Int& D);
std::vector<Even44Candidate> solve_even_44_coeffs(const Int& A, const Int& B, const Int& C, const Int& D,
                                                  const padic::Factorization& d_factors);

std::vector<Even44Candidate> solve_even_44(const CuboidParams& params);

// Factorization of D = (a u)^4 assembled from a and u.
padic::Factorization factor_D(const CuboidParams& params);

// ---------------------------------------------------------------------------
// 4+4, shape (C)

struct Conj44Candidate {
    Int alpha, beta, gamma, delta;  // F = t^4 + alpha t^3 + beta t^2 + gamma t + delta
    Int kappa, s, t, m;
};

struct Conj44Search {
    // delta = -a0 forces alpha = gamma = 0, beta = 3 delta, then C2 leaves 8 delta^2 = 0.
    Int negative_branch_residual;
    std::size_t divisor_pairs = 0;      // signed (s, t) with s t = 12 delta
    std::size_t same_parity_pairs = 0;  // those with s = t (mod 2)
    // Minimum over same-parity pairs of (3U - 3V - 48m)^2 + 32UV, U = s^2, V = t^2.
    // C2 holds for a pair iff this value is 0.
    std::optional<Int> min_completed_square;
    std::vector<Conj44Candidate> candidates;
};

Conj44Search solve_conj_44_detailed(const CuboidParams& params);
std::vector<Conj44Candidate> solve_conj_44(const CuboidParams& params);

// 9U^2 + 14UV + 9V^2 - 288mU + 288mV + 2304m^2
Int completed_square_expanded(const Int& U, const Int& V, const Int& m);
// (3U - 3V - 48m)^2 + 32UV
Int completed_square_form(const Int& U, const Int& V, const Int& m);

// ---------------------------------------------------------------------------
// Valuations of the two sides of the star equation

struct ValuationProfile {
    Int prime;
    padic::Valuation nu_lhs_factor1;  // X^2 - 8 delta^2
    padic::Valuation nu_lhs_factor2;  // X^2 - 9 delta^2
    padic::Valuation nu_lhs;
    padic::Valuation nu_rhs;          // 4 a^2 u^2 X^2

    bool blocks() const { return nu_lhs != nu_rhs; }
};

// Raw integer form, used to probe hypothetical configurations. Throws Error{ZeroX}.
ValuationProfile valuation_profile(const Int& X, const Int& delta, const Int& a, const Int& u, const Int& prime);
ValuationProfile valuation_profile(const Int& X, const CuboidParams& params, const Int& prime);

// ---------------------------------------------------------------------------
// 2+6

// Q(-q) == 0, cross-checked against the remainder of P divided by t^2 + q.
bool quad_divisor_check(const Int& q, const CuboidParams& params);
// Same criterion for any even polynomial.
bool quad_divisor_check(const IntPoly& even_poly, const Int& q);

// b^2 - 4c for b = 6 delta q - 2q^2, c = delta^2 q^2 - 6 delta q^3 + q^4,
// checked against 32 delta^2 q^2.
Int disc_A0(const Int& q, const Int& delta);

struct Exclude26 {
    bool excluded = false;
    // Non-even quadratics pair with their reflection into a 4+4 split.
    std::string regrouping_note;
    bool zero_q_blocked = false;         // t^2 does not divide P since D > 0
    std::size_t divisors_scanned = 0;    // signed divisors q of D
    std::vector<Int> dividing_q;         // q with (t^2 + q) | P; must be empty
    std::size_t disc_blocked = 0;        // q whose disc_A0 is not a square
    std::vector<Int> disc_square_q;      // q whose disc_A0 is a square; must be empty
    bool routes_agree = false;
};

Exclude26 exclude_2_6(const CuboidParams& params);

}  // namespace cuboid::exclusion
