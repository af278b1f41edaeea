#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cuboid {

using Int = mpz_class;
using Rational = mpq_class;

std::string to_string(const Int& n);
std::string to_string(const Rational& q);

// Throws Error{ParseError} unless `text` is an optionally signed decimal integer.
Int parse_int(std::string_view text);

std::optional<std::int64_t> to_int64(const Int& n);

inline Int abs(const Int& n) { return n < 0 ? Int(-n) : n; }
inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}
inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}
// Euclidean remainder in [0, |m|).
inline Int mod(const Int& n, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
    return r;
}
inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace cuboid
