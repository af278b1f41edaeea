#include "cuboid/residual.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace cuboid::exclusion {

namespace {

// Exact square root of a nonnegative 64-bit value, if it is a square.
std::optional<std::int64_t> exact_sqrt(std::int64_t v) {
    if (v < 0) return std::nullopt;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    if (r * r != v) return std::nullopt;
    return r;
}

}  // namespace

ResidualSearch residual_system_search(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (bound > 1'000'000) throw std::invalid_argument("bound too large for 64-bit search");
    ResidualSearch out;
    out.bound = bound;
    for (std::int64_t u = 0; u <= bound; ++u) {
        const std::int64_t u2 = u * u;
        for (std::int64_t w = 0; w <= bound && 9 * w * w <= u2; ++w) {
            const auto n = exact_sqrt(u2 - 9 * w * w);
            if (!n) continue;
            const auto m = exact_sqrt(u2 - 8 * w * w);
            if (!m) continue;
            if (w == 0) {
                ++out.trivial_w_zero;
            } else if (*n == 0) {
                ++out.trivial_n_zero;
            } else {
                out.nontrivial.push_back({u, w, *m, *n});
            }
        }
    }
    return out;
}

std::pair<Rational, Rational> residual_to_e0(const ResidualPoint& pt) {
    if (pt.w == 0) throw std::invalid_argument("w = 0 has no image");
    const Int n(static_cast<long>(pt.n)), m(static_cast<long>(pt.m)), u(static_cast<long>(pt.u)),
        w(static_cast<long>(pt.w));
    Rational x(Int(n * n), Int(w * w));
    Rational y(Int(n * m * u), Int(w * w * w));
    x.canonicalize();
    y.canonicalize();
    return {x, y};
}

P2ResidualSearch verify_p2_residual(std::int64_t bound) {
    if (bound < 1) throw std::invalid_argument("bound must be >= 1");
    if (bound > 1'000'000) throw std::invalid_argument("bound too large for 64-bit search");
    P2ResidualSearch out;
    out.bound = bound;
    for (std::int64_t m = 1; m <= bound; ++m) {
        for (std::int64_t n = 1; n <= bound; ++n) {
            if (m % 2 == 0 || n % 2 == 0) {
                ++out.rejected_parity;
                continue;
            }
            const std::int64_t k2 = 9 * m * m - 8 * n * n;
            if (k2 < 0) {
                ++out.pruned_negative;
                continue;
            }
            if (std::gcd(m, n) != 1) continue;
            ++out.pairs_examined;
            const std::int64_t diff = m * m - n * n;
            if (diff <= 0) continue;
            const auto k = exact_sqrt(k2);
            if (!k) continue;
            std::int64_t odd = diff;
            unsigned twos = 0;
            while (odd % 2 == 0) {
                odd /= 2;
                ++twos;
            }
            // twos = 2d - 2 with 3 <= d <= 8
            if (twos % 2 != 0 || twos < 4 || twos > 14) continue;
            const auto delta1 = exact_sqrt(odd);
            if (!delta1) continue;
            out.hits.push_back({m, n, *k, *delta1, twos / 2 + 1});
        }
    }
    return out;
}

}  // namespace cuboid::exclusion
