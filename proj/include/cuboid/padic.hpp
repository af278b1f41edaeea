#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cuboid/bigint.hpp"

namespace cuboid::padic {

/// nu_p(n). An empty `value` is +infinity (n = 0).
struct Valuation {
    Int prime;
    std::optional<std::uint64_t> value;

    bool infinite() const noexcept { return !value.has_value(); }
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

// Sum with infinity absorbing; both operands must share the prime.
Valuation operator+(const Valuation& x, const Valuation& y);

// Primality by trial division; intended for small moduli.
bool is_prime_small(const Int& n);

// Primes below 10^6 are checked when `check_prime` is set (Error{NotPrime}).
Valuation nu(const Int& p, const Int& n, bool check_prime = true);

// floor(sqrt(n)) by Newton iteration, n >= 0.
Int isqrt(const Int& n);

// The root r >= 0 with r^2 = n, if one exists.
std::optional<Int> is_perfect_square(const Int& n);

// Legendre symbol (a/p) by Euler's criterion. Throws Error{NotOddPrime}.
int legendre(const Int& a, const Int& p);

// n = 2^s * m with m odd and carrying the sign of n. Throws Error{ZeroInput}.
std::pair<std::uint64_t, Int> odd_part(const Int& n);

using Factorization = std::vector<std::pair<Int, unsigned>>;

// Prime factorization of |n| by trial division, ascending, n != 0.
Factorization factorize(const Int& n);

// All positive divisors of |n|, ascending, n != 0.
std::vector<Int> positive_divisors(const Int& n);
std::vector<Int> positive_divisors(const Factorization& factors);

// Factorization of x^k * y^l from factorizations of x and y.
Factorization combine(const Factorization& x, unsigned k, const Factorization& y, unsigned l);

std::vector<std::uint64_t> primes_below(std::uint64_t limit);

}  // namespace cuboid::padic
