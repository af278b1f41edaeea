#pragma once

/**
 * Dense univariate polynomials over Z.
 *
 * Coefficients are stored ascending by degree with trailing zeros trimmed,
 * so the zero polynomial is the empty sequence and structural equality is
 * polynomial equality. Everything is exact.
 */

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid {

class IntPoly {
public:
    IntPoly() = default;
    IntPoly(std::initializer_list<Int> coeffs);
    explicit IntPoly(std::vector<Int> coeffs);

    // c * t^k
    static IntPoly monomial(const Int& c, std::size_t k);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    // nullopt stands for deg(0) = -infinity.
    std::optional<std::size_t> degree() const noexcept;

    // Coefficient of t^k; zero beyond the degree.
    Int operator[](std::size_t k) const;
    const Int& leading() const;
    bool is_monic() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPoly add(const IntPoly& p, const IntPoly& q);
IntPoly sub(const IntPoly& p, const IntPoly& q);
IntPoly negate(const IntPoly& p);
IntPoly mul(const IntPoly& p, const IntPoly& q);
IntPoly scale(const IntPoly& p, const Int& c);

inline IntPoly operator+(const IntPoly& p, const IntPoly& q) { return add(p, q); }
inline IntPoly operator-(const IntPoly& p, const IntPoly& q) { return sub(p, q); }
inline IntPoly operator-(const IntPoly& p) { return negate(p); }
inline IntPoly operator*(const IntPoly& p, const IntPoly& q) { return mul(p, q); }

struct DivMod {
    IntPoly quot;
    IntPoly rem;
};

// n = d * quot + rem with deg rem < deg d. Throws Error{NotMonic} for a zero
// or non-monic divisor.
DivMod divmod_monic(const IntPoly& n, const IntPoly& d);

Int evaluate(const IntPoly& p, const Int& x);

// gcd of all coefficients, 0 for the zero polynomial.
Int content(const IntPoly& p);

// p(t) -> p(-t)
IntPoly reflect(const IntPoly& p);

// Q with p(t) = Q(t^2). Throws Error{NotEven} if an odd coefficient is nonzero.
IntPoly even_part_substitute(const IntPoly& p);

// Q(x) -> Q(t^2)
IntPoly substitute_square(const IntPoly& q);

IntPoly derivative(const IntPoly& p);

// "c0 + c1*t + ... + ck*t^k" with zero terms and unit coefficients omitted;
// negative terms render as " - |c|*t^k". The zero polynomial renders as "0".
std::string to_string(const IntPoly& p, std::string_view var = "t");

// Inverse of to_string for the same variable name; also accepts terms in
// any order and repeated powers. Throws Error{ParseError}.
IntPoly parse_poly(std::string_view text, std::string_view var = "t");

}  // namespace cuboid
