#include "cuboid/ecq.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "cuboid/error.hpp"
#include "cuboid/padic.hpp"

namespace cuboid::ecq {

using cuboid::to_string;

namespace {

struct BInvariants {
    Int b2, b4, b6, b8;
};

BInvariants b_invariants(const Int& a1, const Int& a2, const Int& a3, const Int& a4, const Int& a6) {
    return {a1 * a1 + 4 * a2, 2 * a4 + a1 * a3, a3 * a3 + 4 * a6,
            a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4};
}

Rational canonical(Rational q) {
    q.canonicalize();
    return q;
}

// Rational square root, if q is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q < 0) return std::nullopt;
    auto num = padic::is_perfect_square(q.get_num());
    if (!num) return std::nullopt;
    auto den = padic::is_perfect_square(q.get_den());
    if (!den) return std::nullopt;
    return canonical(Rational(*num, *den));
}

// Integer roots of x^3 + b x^2 + c x + e.
std::vector<Int> integer_roots(const Int& b, const Int& c, const Int& e) {
    std::vector<Int> roots;
    auto is_root = [&](const Int& x) { return ((x + b) * x + c) * x + e == 0; };
    if (e == 0) {
        roots.push_back(0);
        const Int disc = b * b - 4 * c;
        if (auto r = padic::is_perfect_square(disc)) {
            for (const Int& num : {Int(-b + *r), Int(-b - *r)})
                if (divides(2, num)) roots.push_back(num / 2);
        }
    } else {
        for (const Int& d : padic::positive_divisors(e))
            for (const Int& x : {Int(d), Int(-d)})
                if (is_root(x)) roots.push_back(x);
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

void require_on_curve(const ECPoint& P, const ECCurve& E) {
    if (!on_curve(P, E)) throw Error(ErrorCode::NotOnCurve, to_string(P) + " is not on " + to_string(E));
}

}  // namespace

ECCurve::ECCurve(Int a1, Int a2, Int a3, Int a4, Int a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    const auto [b2, b4, b6, b8] = b_invariants(a1_, a2_, a3_, a4_, a6_);
    c4_ = b2 * b2 - 24 * b4;
    disc_ = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (disc_ == 0) throw Error(ErrorCode::SingularCurve, to_string(*this));
}

ECCurve ECCurve::e0() { return ECCurve(0, 10, 0, 9, 0); }

ECCurve ECCurve::minimal_e0() { return ECCurve(0, 1, 0, -24, 36); }

std::string to_string(const ECCurve& E) {
    return "[" + to_string(E.a1()) + "," + to_string(E.a2()) + "," + to_string(E.a3()) + "," + to_string(E.a4()) +
           "," + to_string(E.a6()) + "]";
}

ECPoint::ECPoint(Rational x, Rational y) : affine_(Affine{canonical(std::move(x)), canonical(std::move(y))}) {}

const Rational& ECPoint::x() const {
    if (!affine_) throw std::logic_error("point at infinity has no coordinates");
    return affine_->x;
}

const Rational& ECPoint::y() const {
    if (!affine_) throw std::logic_error("point at infinity has no coordinates");
    return affine_->y;
}

std::string to_string(const ECPoint& P) {
    if (P.is_infinity()) return "O";
    return "(" + to_string(P.x()) + "," + to_string(P.y()) + ")";
}

bool on_curve(const ECPoint& P, const ECCurve& E) {
    if (P.is_infinity()) return true;
    const Rational& x = P.x();
    const Rational& y = P.y();
    const Rational lhs = y * y + E.a1() * x * y + E.a3() * y;
    const Rational rhs = ((x + E.a2()) * x + E.a4()) * x + E.a6();
    return lhs == rhs;
}

ECPoint negate(const ECPoint& P, const ECCurve& E) {
    if (P.is_infinity()) return P;
    return {P.x(), Rational(-P.y() - E.a1() * P.x() - E.a3())};
}

ECPoint add(const ECPoint& P, const ECPoint& Q, const ECCurve& E) {
    require_on_curve(P, E);
    require_on_curve(Q, E);
    if (P.is_infinity()) return Q;
    if (Q.is_infinity()) return P;
    if (Q == negate(P, E)) return {};

    const Rational &x1 = P.x(), &y1 = P.y(), &x2 = Q.x(), &y2 = Q.y();
    Rational slope;
    if (x1 != x2) {
        slope = (y2 - y1) / (x2 - x1);
    } else {
        slope = (3 * x1 * x1 + 2 * E.a2() * x1 + E.a4() - E.a1() * y1) / (2 * y1 + E.a1() * x1 + E.a3());
    }
    const Rational intercept = y1 - slope * x1;
    const Rational x3 = slope * slope + E.a1() * slope - E.a2() - x1 - x2;
    const Rational y3 = -(slope + E.a1()) * x3 - intercept - E.a3();
    return {x3, y3};
}

ECPoint scalar_mul(const Int& n, const ECPoint& P, const ECCurve& E) {
    require_on_curve(P, E);
    if (n < 0) return scalar_mul(Int(-n), negate(P, E), E);
    ECPoint acc;
    ECPoint base = P;
    Int k = n;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) acc = add(acc, base, E);
        k >>= 1;
        if (k > 0) base = add(base, base, E);
    }
    return acc;
}

std::optional<unsigned> order(const ECPoint& P, const ECCurve& E, unsigned cap) {
    require_on_curve(P, E);
    ECPoint acc = P;
    for (unsigned n = 1; n <= cap; ++n) {
        if (acc.is_infinity()) return n;
        acc = add(acc, P, E);
    }
    return std::nullopt;
}

std::string group_structure(const std::vector<ECPoint>& points, const ECCurve& E) {
    std::size_t two_torsion = 0;
    for (const auto& P : points)
        if (order(P, E) == 2u) ++two_torsion;
    const std::size_t n = points.size();
    if (two_torsion == 3) return "Z/2 x Z/" + std::to_string(n / 2);
    return "Z/" + std::to_string(n);
}

TorsionResult nagell_lutz_torsion(const ECCurve& E) {
    if (E.a1() != 0 || E.a3() != 0) throw std::invalid_argument("Nagell-Lutz needs a1 = a3 = 0");
    const Int &b = E.a2(), &c = E.a4(), &e = E.a6();
    const Int cubic_disc = -4 * b * b * b * e + b * b * c * c + 18 * b * c * e - 4 * c * c * c - 27 * e * e;
    if (cubic_disc == 0) throw Error(ErrorCode::SingularCurve, to_string(E));

    TorsionResult out;
    std::vector<ECPoint> found{ECPoint::infinity()};
    auto consider = [&](const Int& x, const Int& y) {
        ++out.candidates_tested;
        ECPoint P{Rational(x), Rational(y)};
        if (order(P, E)) found.push_back(P);
    };
    for (const Int& x : integer_roots(b, c, e)) consider(x, 0);
    // y^2 | cubic_disc
    std::vector<Int> ys;
    for (const Int& y : padic::positive_divisors(cubic_disc))
        if (divides(y * y, cubic_disc)) ys.push_back(y);
    for (const Int& y : ys)
        for (const Int& x : integer_roots(b, c, e - y * y)) {
            consider(x, y);
            consider(x, -y);
        }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    out.structure = group_structure(found, E);
    out.points = std::move(found);
    return out;
}

Rational j_invariant(const ECCurve& E) {
    const Int& c4 = E.c4();
    return canonical(Rational(Int(c4 * c4 * c4), E.discriminant()));
}

ShortModel transform_to_short(const ECCurve& E) {
    if (E.a1() != 0 || E.a3() != 0) throw std::invalid_argument("short model needs a1 = a3 = 0");
    const Int &a2 = E.a2(), &a4 = E.a4(), &a6 = E.a6();
    ECCurve S(0, 0, 0, 81 * a4 - 27 * a2 * a2, 54 * a2 * a2 * a2 - 243 * a2 * a4 + 729 * a6);
    const Int shift = 3 * a2;
    auto forward = [shift](const ECPoint& P) -> ECPoint {
        if (P.is_infinity()) return P;
        return {Rational(9 * P.x() + shift), Rational(27 * P.y())};
    };
    auto backward = [shift](const ECPoint& P) -> ECPoint {
        if (P.is_infinity()) return P;
        return {Rational((P.x() - shift) / 9), Rational(P.y() / 27)};
    };
    return {std::move(S), forward, backward};
}

std::vector<ECPoint> square_x_points(const std::vector<ECPoint>& points) {
    std::vector<ECPoint> out;
    for (const auto& P : points)
        if (!P.is_infinity() && rational_sqrt(P.x())) out.push_back(P);
    return out;
}

std::vector<ECPoint> bounded_point_search(const ECCurve& E, const Int& height_bound) {
    if (height_bound < 1) throw std::invalid_argument("height bound must be >= 1");
    std::vector<ECPoint> out;
    for (Int q = 1; q <= height_bound; ++q) {
        const Int q2 = q * q;
        for (Int p = -height_bound; p <= height_bound; ++p) {
            if (gcd(p, q) != 1) continue;
            const Rational x = canonical(Rational(p, q2));
            // (2y + a1 x + a3)^2 = (a1 x + a3)^2 + 4 f(x)
            const Rational lin = E.a1() * x + E.a3();
            const Rational f = ((x + E.a2()) * x + E.a4()) * x + E.a6();
            const auto root = rational_sqrt(Rational(lin * lin + 4 * f));
            if (!root) continue;
            out.emplace_back(x, Rational((*root - lin) / 2));
            if (*root != 0) out.emplace_back(x, Rational((-*root - lin) / 2));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cuboid::ecq
