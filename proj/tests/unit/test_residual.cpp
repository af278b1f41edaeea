#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cuboid/ecq.hpp"
#include "cuboid/residual.hpp"
#include "gen.hpp"

using namespace cuboid;
using namespace cuboid::exclusion;

TEST_CASE("residual system: no nontrivial points") {
    const auto r = residual_system_search(2000);
    CHECK(r.nontrivial.empty());
    CHECK(r.trivial_w_zero == 2001);
    CHECK(r.trivial_n_zero == 666);
}

TEST_CASE("residual system agrees with brute force on a small box") {
    std::size_t w0 = 0, n0 = 0, other = 0;
    for (long u = 0; u <= 120; ++u)
        for (long w = 0; w <= 120; ++w)
            for (long m = 0; m <= u; ++m)
                for (long n = 0; n <= m; ++n)
                    if (m * m == u * u - 8 * w * w && n * n == u * u - 9 * w * w) {
                        if (w == 0) ++w0;
                        else if (n == 0) ++n0;
                        else ++other;
                    }
    const auto r = residual_system_search(120);
    CHECK(r.trivial_w_zero == w0);
    CHECK(r.trivial_n_zero == n0);
    CHECK(other == 0);
}

TEST_CASE("map to E0") {
    const ResidualPoint pt{3, 1, 1, 0};
    const auto [x, y] = residual_to_e0(pt);
    CHECK(x == 0);
    CHECK(y == 0);
    CHECK(ecq::on_curve(ecq::ECPoint(x, y), ecq::ECCurve::e0()));
}

TEST_CASE("p = 2 residual") {
    const auto r = verify_p2_residual(1000);
    CHECK(r.hits.empty());
    CHECK(r.pairs_examined > 0);
    CHECK(r.rejected_parity > 0);
    CHECK(r.pruned_negative > 0);
    // Each equation alone has solutions; only the pair is impossible.
    bool first = false, second = false;
    for (long m = 1; m < 200 && !(first && second); m += 2)
        for (long n = 1; n < m; n += 2) {
            const long diff = m * m - n * n;
            if (diff % 16 == 0) first = true;
            const long k2 = 9 * m * m - 8 * n * n;
            long k = 0;
            while (k * k < k2) ++k;
            if (k * k == k2) second = true;
        }
    CHECK(first);
    CHECK(second);
}
