#pragma once

/**
 * Elliptic curves over Q in long Weierstrass form
 *
 *     y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6,   a_i in Z,
 *
 * with exact rational points. Enough machinery to reproduce the torsion
 * computation of y^2 = x(x+1)(x+9): chord-tangent law, Nagell-Lutz
 * candidate enumeration, j-invariant, the change to a short model and a
 * naive bounded point search.
 */

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid::ecq {

class ECCurve {
public:
    // Throws Error{SingularCurve} if the discriminant vanishes.
    ECCurve(Int a1, Int a2, Int a3, Int a4, Int a6);

    // y^2 = x(x+1)(x+9)
    static ECCurve e0();
    // y^2 = x^3 + x^2 - 24x + 36
    static ECCurve minimal_e0();

    const Int& a1() const noexcept { return a1_; }
    const Int& a2() const noexcept { return a2_; }
    const Int& a3() const noexcept { return a3_; }
    const Int& a4() const noexcept { return a4_; }
    const Int& a6() const noexcept { return a6_; }
    const Int& discriminant() const noexcept { return disc_; }
    const Int& c4() const noexcept { return c4_; }

    friend bool operator==(const ECCurve& x, const ECCurve& y) {
        return x.a1_ == y.a1_ && x.a2_ == y.a2_ && x.a3_ == y.a3_ && x.a4_ == y.a4_ && x.a6_ == y.a6_;
    }

private:
    Int a1_, a2_, a3_, a4_, a6_;
    Int c4_, disc_;
};

std::string to_string(const ECCurve& E);

/// The point at infinity or an affine point with canonical rational
/// coordinates (lowest terms, positive denominators), so equality is
/// structural.
class ECPoint {
public:
    ECPoint() = default;  // infinity
    ECPoint(Rational x, Rational y);

    static ECPoint infinity() { return {}; }

    bool is_infinity() const noexcept { return !affine_; }
    const Rational& x() const;
    const Rational& y() const;

    friend bool operator==(const ECPoint&, const ECPoint&) = default;
    friend auto operator<=>(const ECPoint& p, const ECPoint& q) {
        if (p.is_infinity() || q.is_infinity()) return q.is_infinity() <=> p.is_infinity();
        if (auto c = cmp(p.x(), q.x()); c != 0) return c <=> 0;
        return cmp(p.y(), q.y()) <=> 0;
    }

private:
    struct Affine {
        Rational x, y;
        friend bool operator==(const Affine&, const Affine&) = default;
    };
    std::optional<Affine> affine_;
};

std::string to_string(const ECPoint& P);

bool on_curve(const ECPoint& P, const ECCurve& E);

ECPoint negate(const ECPoint& P, const ECCurve& E);

// Chord-tangent addition. Throws Error{NotOnCurve}.
ECPoint add(const ECPoint& P, const ECPoint& Q, const ECCurve& E);

// n P by double-and-add; negative n via negation. Throws Error{NotOnCurve}.
ECPoint scalar_mul(const Int& n, const ECPoint& P, const ECCurve& E);

// Smallest n in [1, cap] with n P = O.
std::optional<unsigned> order(const ECPoint& P, const ECCurve& E, unsigned cap = 16);

struct TorsionResult {
    std::vector<ECPoint> points;  // sorted, infinity first
    std::string structure;        // "Z/n" or "Z/2 x Z/2m"
    std::size_t candidates_tested = 0;
};

/// Rational torsion of an integral model with a1 = a3 = 0. Candidates are the
/// integer points with y = 0 or y^2 dividing the discriminant of the cubic;
/// a candidate is torsion if its order is at most 16 (above Mazur's 12).
TorsionResult nagell_lutz_torsion(const ECCurve& E);

// Group structure from the element orders of a finite subgroup.
std::string group_structure(const std::vector<ECPoint>& points, const ECCurve& E);

// c4^3 / disc
Rational j_invariant(const ECCurve& E);

/// Short model y'^2 = x'^3 + A x' + B of a curve with a1 = a3 = 0 via
/// x' = 9x + 3 a2, y' = 27 y. For y^2 = x(x+1)(x+9) this is
/// y'^2 = x'^3 - 1971 x' + 32130.
struct ShortModel {
    ECCurve curve;
    std::function<ECPoint(const ECPoint&)> forward;
    std::function<ECPoint(const ECPoint&)> backward;
};

ShortModel transform_to_short(const ECCurve& E);

// Points whose x-coordinate is the square of a rational.
std::vector<ECPoint> square_x_points(const std::vector<ECPoint>& points);

// Affine points with x = p / q^2 in lowest terms, |p| <= bound, 1 <= q <= bound.
std::vector<ECPoint> bounded_point_search(const ECCurve& E, const Int& height_bound);

}  // namespace cuboid::ecq
