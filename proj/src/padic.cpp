#include "cuboid/padic.hpp"

#include <algorithm>
#include <stdexcept>

#include "cuboid/error.hpp"

namespace cuboid::padic {

namespace {
const Int kCheckedPrimeLimit = 1000000;
}

Valuation operator+(const Valuation& x, const Valuation& y) {
    if (x.prime != y.prime) throw std::invalid_argument("valuations at different primes");
    if (x.infinite() || y.infinite()) return {x.prime, std::nullopt};
    return {x.prime, *x.value + *y.value};
}

bool is_prime_small(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (divides(2, n)) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (divides(d, n)) return false;
    return true;
}

Valuation nu(const Int& p, const Int& n, bool check_prime) {
    if (p < 2 || (check_prime && p < kCheckedPrimeLimit && !is_prime_small(p)))
        throw Error(ErrorCode::NotPrime, to_string(p) + " is not prime");
    if (n == 0) return {p, std::nullopt};
    Int rest = abs(n);
    std::uint64_t v = 0;
    while (divides(p, rest)) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return {p, v};
}

Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of a negative number");
    if (n < 2) return n;
    // Start above the root: 2^ceil(bits/2) > sqrt(n).
    const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    Int x = 1;
    x <<= static_cast<unsigned long>((bits + 1) / 2);
    while (true) {
        Int y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = y;
    }
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    Int r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

int legendre(const Int& a, const Int& p) {
    if (p < 3 || !divides(2, p - 1) || (p < kCheckedPrimeLimit && !is_prime_small(p)))
        throw Error(ErrorCode::NotOddPrime, to_string(p) + " is not an odd prime");
    const Int r = mod(a, p);
    if (r == 0) return 0;
    Int e = (p - 1) / 2;
    Int out;
    mpz_powm(out.get_mpz_t(), r.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    if (out == 1) return 1;
    if (out == p - 1) return -1;
    throw std::logic_error("Euler criterion gave " + to_string(out) + " mod " + to_string(p));
}

std::pair<std::uint64_t, Int> odd_part(const Int& n) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "odd_part(0)");
    Int m = n;
    std::uint64_t s = 0;
    while (divides(2, m)) {
        m /= 2;
        ++s;
    }
    return {s, m};
}

Factorization factorize(const Int& n) {
    if (n == 0) throw Error(ErrorCode::ZeroInput, "factorize(0)");
    Factorization out;
    Int rest = abs(n);
    auto strip = [&](const Int& d) {
        unsigned e = 0;
        while (divides(d, rest)) {
            rest /= d;
            ++e;
        }
        if (e) out.emplace_back(d, e);
    };
    strip(2);
    for (Int d = 3; d * d <= rest; d += 2) strip(d);
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

std::vector<Int> positive_divisors(const Int& n) { return positive_divisors(factorize(n)); }

Factorization combine(const Factorization& x, unsigned k, const Factorization& y, unsigned l) {
    Factorization out;
    for (const auto& [p, e] : x) out.emplace_back(p, e * k);
    for (const auto& [p, e] : y) {
        auto it = std::find_if(out.begin(), out.end(), [&](const auto& f) { return f.first == p; });
        if (it == out.end()) {
            out.emplace_back(p, e * l);
        } else {
            it->second += e * l;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& f) { return f.second == 0; }), out.end());
    return out;
}

std::vector<Int> positive_divisors(const Factorization& factors) {
    std::vector<Int> divs{1};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> primes_below(std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    if (limit <= 2) return out;
    std::vector<bool> composite(limit, false);
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return out;
}

}  // namespace cuboid::padic
