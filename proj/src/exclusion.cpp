#include "cuboid/exclusion.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuboid/error.hpp"

namespace cuboid::exclusion {

namespace {

void ensure(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error(what);
}

const IntPoly& t_squared_plus(const Int& q, IntPoly& scratch) {
    scratch = IntPoly{q, 0, 1};
    return scratch;
}

bool quad_divisor_check_prebuilt(const IntPoly& P, const IntPoly& Q, const Int& q) {
    const bool criterion = evaluate(Q, -q) == 0;
    IntPoly divisor;
    const bool divides_exactly = divmod_monic(P, t_squared_plus(q, divisor)).rem.is_zero();
    ensure(criterion == divides_exactly,
           "even quadratic criterion disagrees with division for q=" + to_string(q));
    return criterion;
}

}  // namespace

// ---------------------------------------------------------------------------

Int star_lhs(const Int& X, const Int& delta) {
    const Int x2 = X * X;
    const Int d2 = delta * delta;
    return (x2 - 8 * d2) * (x2 - 9 * d2);
}

Int star_rhs(const Int& X, const Int& a, const Int& u) {
    const Int au = a * u;
    return 4 * au * au * X * X;
}

StarInstance StarInstance::make(const Int& X, const CuboidParams& params) {
    return {X, star_lhs(X, params.delta()), star_rhs(X, params.a(), params.u())};
}

bool StarInstance::consistent_with(const CuboidParams& params) const {
    return lhs == star_lhs(X, params.delta()) && rhs == star_rhs(X, params.a(), params.u());
}

bool star_holds(const Int& X, const CuboidParams& params) {
    return star_holds_raw(X, params.delta(), params.a(), params.u());
}

bool star_holds_raw(const Int& X, const Int& delta, const Int& a, const Int& u) {
    return star_lhs(X, delta) == star_rhs(X, a, u);
}

Int star_search_bound(const CuboidParams& params) {
    const Int& d = params.delta();
    return padic::isqrt(17 * d * d + 4 * params.a0()) + 1;
}

std::vector<Int> solve_star(const CuboidParams& params, const Int& margin) {
    const Int limit = star_search_bound(params) + margin;
    std::vector<Int> nonneg;

    const auto lim64 = to_int64(limit);
    const auto d64 = to_int64(params.delta());
    const auto a064 = to_int64(params.a0());
    constexpr std::int64_t k28 = std::int64_t{1} << 28;
    constexpr std::int64_t k60 = std::int64_t{1} << 60;
    if (lim64 && d64 && a064 && *lim64 < k28 && *d64 < k28 && *d64 > -k28 && *a064 < k60) {
        // Every intermediate stays below 2^123.
        using i128 = __int128;
        const i128 d2 = static_cast<i128>(*d64) * *d64;
        const i128 four_a0 = static_cast<i128>(4) * *a064;
        for (std::int64_t x = 0; x <= *lim64; ++x) {
            const i128 x2 = static_cast<i128>(x) * x;
            if ((x2 - 8 * d2) * (x2 - 9 * d2) == four_a0 * x2) nonneg.emplace_back(static_cast<long>(x));
        }
    } else {
        const Int d2 = params.delta() * params.delta();
        const Int eight_d2 = 8 * d2;
        const Int nine_d2 = 9 * d2;
        const Int four_a0 = 4 * params.a0();
        Int x2, lhs, rhs;
        for (Int x = 0; x <= limit; ++x) {
            x2 = x * x;
            lhs = (x2 - eight_d2) * (x2 - nine_d2);
            rhs = four_a0 * x2;
            if (lhs == rhs) nonneg.push_back(x);
        }
    }

    std::vector<Int> out;
    for (auto it = nonneg.rbegin(); it != nonneg.rend(); ++it)
        if (*it != 0) out.push_back(-*it);
    out.insert(out.end(), nonneg.begin(), nonneg.end());
    return out;
}

// ---------------------------------------------------------------------------

Int derive_M(const Int& p_coeff, const CuboidParams& params) {
    const Int M = params.coeff_B() + p_coeff * p_coeff - params.coeff_A() * p_coeff;
    const Int X = p_coeff - 3 * params.delta();
    const Int& d = params.delta();
    ensure(M == X * X - 8 * d * d - 2 * params.a0(), "M identity failed");
    return M;
}

Int t_squared(const Int& M, const CuboidParams& params, const std::optional<Int>& X) {
    const Int t2 = M * M - 4 * params.coeff_D();
    if (X) {
        const Int& d = params.delta();
        const Int f = (*X) * (*X) - 8 * d * d;
        ensure(t2 == f * (f - 4 * params.a0()), "T^2 factorization failed");
    }
    return t2;
}

Int two_c_minus_am(const Int& p_coeff, const CuboidParams& params) {
    const Int M = derive_M(p_coeff, params);
    const Int value = 2 * params.coeff_C() - params.coeff_A() * M;
    const Int X = p_coeff - 3 * params.delta();
    const Int& d = params.delta();
    ensure(value == -6 * d * X * X + 48 * d * d * d, "2C - AM closed form failed");
    return value;
}

bool key_relation_holds(const Int& p, const Int& q, const Int& r, const Int& s) {
    const Int A = p + r;
    const Int C = p * s + r * q;
    const Int M = q + s;
    return (q - s) * (A - 2 * p) == 2 * C - A * M;
}

// ---------------------------------------------------------------------------

padic::Factorization factor_D(const CuboidParams& params) {
    return padic::combine(padic::factorize(params.a()), 4, padic::factorize(params.u()), 4);
}

std::vector<Even44Candidate> solve_even_44_coeffs(const Int& A, const Int& B, const Int& C, const Int& D) {
    if (D == 0) throw Error(ErrorCode::ZeroInput, "constant term must be nonzero");
    return solve_even_44_coeffs(A, B, C, D, padic::factorize(D));
}

std::vector<Even44Candidate> solve_even_44_coeffs(const Int& A, const Int& B, const Int& C, const Int& D,
                                                  const padic::Factorization& d_factors) {
    std::vector<Even44Candidate> out;
    const IntPoly target{D, 0, C, 0, B, 0, A, 0, 1};
    for (const Int& d : padic::positive_divisors(d_factors)) {
        for (const Int& q : {Int(d), Int(-d)}) {
            const Int s = D / q;
            const Int M = q + s;
            // p^2 - A p + (B - M) = 0
            const Int disc = A * A - 4 * (B - M);
            const auto root = padic::is_perfect_square(disc);
            if (!root) continue;
            if (!divides(2, A + *root)) continue;
            std::vector<Int> ps{(A + *root) / 2};
            if (*root != 0) ps.push_back((A - *root) / 2);
            for (const Int& p : ps) {
                const Int r = A - p;
                if (p + r != A || p * r + q + s != B || p * s + r * q != C || q * s != D) continue;
                ensure(mul(IntPoly{q, 0, p, 0, 1}, IntPoly{s, 0, r, 0, 1}) == target,
                       "accepted even 4+4 candidate does not multiply back");
                out.push_back({p, q, r, s});
            }
        }
    }
    return out;
}

std::vector<Even44Candidate> solve_even_44(const CuboidParams& params) {
    return solve_even_44_coeffs(params.coeff_A(), params.coeff_B(), params.coeff_C(), params.coeff_D(),
                                factor_D(params));
}

// ---------------------------------------------------------------------------

Int completed_square_expanded(const Int& U, const Int& V, const Int& m) {
    return 9 * U * U + 14 * U * V + 9 * V * V - 288 * m * U + 288 * m * V + 2304 * m * m;
}

Int completed_square_form(const Int& U, const Int& V, const Int& m) {
    const Int w = 3 * U - 3 * V - 48 * m;
    return w * w + 32 * U * V;
}

Conj44Search solve_conj_44_detailed(const CuboidParams& params) {
    Conj44Search out;
    const Int& A = params.coeff_A();
    const Int& B = params.coeff_B();
    const Int& C = params.coeff_C();
    const Int& D = params.coeff_D();
    const Int& delta = params.delta();
    const IntPoly P = build_P(params);

    auto c_system_holds = [&](const Int& al, const Int& be, const Int& ga, const Int& de) {
        return 2 * be - al * al == A && be * be + 2 * de - 2 * al * ga == B && 2 * be * de - ga * ga == C &&
               de * de == D;
    };
    auto accept = [&](Conj44Candidate cand) {
        const IntPoly F{cand.delta, cand.gamma, cand.beta, cand.alpha, 1};
        ensure(mul(F, reflect(F)) == P, "accepted conjugate 4+4 candidate does not multiply back");
        out.candidates.push_back(std::move(cand));
    };

    // delta_F = -a0: gamma^2 = -a0 alpha^2 with a0 > 0 leaves alpha = gamma = 0 and beta = 3 delta.
    {
        const Int de = -params.a0();
        const Int be = 3 * delta;
        out.negative_branch_residual = (be * be + 2 * de) - B;
        ensure(out.negative_branch_residual == 8 * delta * delta, "negative-sign branch residual");
        if (c_system_holds(0, be, 0, de)) accept({0, be, 0, de, 0, 0, 0, params.m()});
    }

    // delta_F = +a0 = m^2, gamma = m kappa, kappa^2 - alpha^2 = 12 delta.
    const Int m = params.m();
    const Int N = 12 * delta;
    auto factors = padic::combine(padic::factorize(params.u() - params.a()), 1,
                                  padic::factorize(params.u() + params.a()), 1);
    factors = padic::combine(factors, 1, {{2, 2}, {3, 1}}, 1);
    for (const Int& d : padic::positive_divisors(factors)) {
        for (const Int& s : {Int(d), Int(-d)}) {
            const Int t = N / s;
            ensure(s * t == N, "divisor pair");
            ++out.divisor_pairs;
            if (!divides(2, s - t)) continue;
            ++out.same_parity_pairs;

            const Int U = s * s;
            const Int V = t * t;
            const Int square_form = completed_square_form(U, V, m);
            ensure(square_form == completed_square_expanded(U, V, m), "completed-square identity");
            // C2 times 576 after substituting beta = (s^2+t^2)/8, alpha gamma = m (s^2-t^2)/4, delta = st/12.
            const Int main_square = 9 * (U + V) * (U + V) - 288 * m * (U - V) + 2304 * m * m - 4 * U * V;
            ensure(main_square == square_form, "C2 elimination identity");
            if (!out.min_completed_square || square_form < *out.min_completed_square)
                out.min_completed_square = square_form;

            const Int alpha = (s - t) / 2;
            const Int kappa = (s + t) / 2;
            const Int twice_beta = alpha * alpha + 6 * delta;
            if (!divides(2, twice_beta)) continue;
            const Int beta = twice_beta / 2;
            const Int gamma = m * kappa;
            const Int de = m * m;
            const bool holds = c_system_holds(alpha, beta, gamma, de);
            ensure(holds == (square_form == 0), "C2 must hold exactly when the completed square vanishes");
            if (holds) accept({alpha, beta, gamma, de, kappa, s, t, m});
        }
    }
    return out;
}

std::vector<Conj44Candidate> solve_conj_44(const CuboidParams& params) {
    return solve_conj_44_detailed(params).candidates;
}

// ---------------------------------------------------------------------------

ValuationProfile valuation_profile(const Int& X, const Int& delta, const Int& a, const Int& u, const Int& prime) {
    if (X == 0) throw Error(ErrorCode::ZeroX, "valuation profile needs X != 0");
    const Int x2 = X * X;
    const Int d2 = delta * delta;
    ValuationProfile vp{prime, padic::nu(prime, x2 - 8 * d2), padic::nu(prime, x2 - 9 * d2), {}, {}};
    vp.nu_lhs = vp.nu_lhs_factor1 + vp.nu_lhs_factor2;
    vp.nu_rhs = padic::nu(prime, star_rhs(X, a, u));
    return vp;
}

ValuationProfile valuation_profile(const Int& X, const CuboidParams& params, const Int& prime) {
    return valuation_profile(X, params.delta(), params.a(), params.u(), prime);
}

// ---------------------------------------------------------------------------

bool quad_divisor_check(const Int& q, const CuboidParams& params) {
    return quad_divisor_check_prebuilt(build_P(params), build_Q(params), q);
}

bool quad_divisor_check(const IntPoly& even_poly, const Int& q) {
    return quad_divisor_check_prebuilt(even_poly, even_part_substitute(even_poly), q);
}

Int disc_A0(const Int& q, const Int& delta) {
    const Int b = 6 * delta * q - 2 * q * q;
    const Int c = delta * delta * q * q - 6 * delta * q * q * q + q * q * q * q;
    const Int disc = b * b - 4 * c;
    ensure(disc == 32 * delta * delta * q * q, "discriminant closed form");
    return disc;
}

Exclude26 exclude_2_6(const CuboidParams& params) {
    Exclude26 out;
    out.regrouping_note =
        "a quadratic factor Q2 that is not even pairs with Q2(-t), which then divides the sextic "
        "cofactor; Q2(t) Q2(-t) times the remaining quartic is a 4+4 split, excluded separately";

    const IntPoly P = build_P(params);
    const IntPoly Q = build_Q(params);
    const Int& delta = params.delta();

    out.zero_q_blocked = params.coeff_D() != 0 && !quad_divisor_check_prebuilt(P, Q, 0);

    for (const Int& d : padic::positive_divisors(factor_D(params))) {
        for (const Int& q : {Int(d), Int(-d)}) {
            ++out.divisors_scanned;
            if (quad_divisor_check_prebuilt(P, Q, q)) out.dividing_q.push_back(q);

            const Int disc = disc_A0(q, delta);
            const auto v2 = padic::nu(2, disc);
            ensure(*v2.value == 5 + 2 * *padic::nu(2, delta * q).value, "2-adic valuation of disc_A0");
            if (padic::is_perfect_square(disc)) {
                out.disc_square_q.push_back(q);
            } else {
                ++out.disc_blocked;
            }
        }
    }
    // A non-square discriminant rules out an integer root a0, so no blocked q may divide.
    out.routes_agree = out.dividing_q.empty() && out.disc_square_q.empty() &&
                       out.disc_blocked == out.divisors_scanned;
    out.excluded = out.zero_q_blocked && out.routes_agree;
    return out;
}

}  // namespace cuboid::exclusion
