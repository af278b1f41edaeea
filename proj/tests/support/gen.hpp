#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cuboid/bigint.hpp"
#include "cuboid/params.hpp"
#include "cuboid/zpoly.hpp"

namespace gen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }
    cuboid::Int big(std::int64_t lo, std::int64_t hi) { return cuboid::Int(static_cast<long>(range(lo, hi))); }
    // Roughly `bits` random bits with a random sign.
    cuboid::Int wide(unsigned bits) {
        cuboid::Int r = 0;
        for (unsigned i = 0; i < bits; i += 32) r = (r << 32) + cuboid::Int(static_cast<unsigned long>(eng_() & 0xffffffffu));
        r >>= (bits + 31) / 32 * 32 - bits;
        return range(0, 1) ? cuboid::Int(-r) : r;
    }
    cuboid::IntPoly poly(std::size_t max_deg, std::int64_t bound) {
        std::vector<cuboid::Int> c(static_cast<std::size_t>(range(0, static_cast<std::int64_t>(max_deg) + 1)));
        for (auto& x : c) x = big(-bound, bound);
        return cuboid::IntPoly(std::move(c));
    }
    cuboid::IntPoly monic(std::size_t deg, std::int64_t bound) {
        std::vector<cuboid::Int> c(deg + 1);
        for (std::size_t i = 0; i < deg; ++i) c[i] = big(-bound, bound);
        c[deg] = 1;
        return cuboid::IntPoly(std::move(c));
    }
    cuboid::CuboidParams params(std::int64_t max) {
        for (;;) {
            const auto a = range(1, max), u = range(1, max);
            if (a != u && std::gcd(a, u) == 1) return cuboid::CuboidParams::make(cuboid::Int(static_cast<long>(a)), cuboid::Int(static_cast<long>(u)));
        }
    }
    std::mt19937_64& engine() { return eng_; }

private:
    std::mt19937_64 eng_;
};

inline cuboid::Int I(long v) { return cuboid::Int(v); }

}  // namespace gen
