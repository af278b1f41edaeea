#include "cuboid/params.hpp"

#include <stdexcept>

#include "cuboid/error.hpp"

namespace cuboid {

CuboidParams CuboidParams::make(const Int& a, const Int& u) {
    if (a <= 0 || u <= 0)
        throw Error(ErrorCode::NonPositive, "a=" + to_string(a) + ", u=" + to_string(u) + " must be positive");
    if (a == u) throw Error(ErrorCode::Equal, "a = u = " + to_string(a));
    if (gcd(a, u) != 1)
        throw Error(ErrorCode::NotCoprime, "gcd(" + to_string(a) + ", " + to_string(u) + ") != 1");

    CuboidParams p;
    p.a_ = a;
    p.u_ = u;
    p.delta_ = u * u - a * a;
    p.a0_ = a * a * u * u;
    p.A_ = 6 * p.delta_;
    p.B_ = p.delta_ * p.delta_ - 2 * p.a0_;
    p.C_ = -p.a0_ * p.A_;
    p.D_ = p.a0_ * p.a0_;
    return p;
}

IntPoly build_P(const CuboidParams& params) {
    IntPoly p{params.coeff_D(), 0, params.coeff_C(), 0, params.coeff_B(), 0, params.coeff_A(), 0, 1};
    if (p != reflect(p) || !p.is_monic() || *p.degree() != 8 || content(p) != 1 || p[0] <= 0)
        throw std::logic_error("build_P: postcondition failed for " + to_string(p));
    return p;
}

IntPoly build_Q(const CuboidParams& params) {
    return IntPoly{params.coeff_D(), params.coeff_C(), params.coeff_B(), params.coeff_A(), 1};
}

}  // namespace cuboid
