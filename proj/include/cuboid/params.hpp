#pragma once

#include "cuboid/bigint.hpp"
#include "cuboid/zpoly.hpp"

namespace cuboid {

/// A validated coprime pair (a, u), a != u, both positive, together with the
/// derived quantities of the octic
///   P(t) = t^8 + A t^6 + B t^4 + C t^2 + D,
///   delta = u^2 - a^2, a0 = a^2 u^2,
///   A = 6 delta, B = delta^2 - 2 a0, C = -a0 A, D = a0^2.
/// Both orders (a < u and a > u) are legal; nothing is canonicalized.
class CuboidParams {
public:
    // Throws Error{NonPositive}, Error{Equal} or Error{NotCoprime}, checked in that order.
    static CuboidParams make(const Int& a, const Int& u);

    const Int& a() const noexcept { return a_; }
    const Int& u() const noexcept { return u_; }
    const Int& delta() const noexcept { return delta_; }
    const Int& a0() const noexcept { return a0_; }
    const Int& coeff_A() const noexcept { return A_; }
    const Int& coeff_B() const noexcept { return B_; }
    const Int& coeff_C() const noexcept { return C_; }
    const Int& coeff_D() const noexcept { return D_; }
    // a * u, so that a0 = m^2.
    Int m() const { return a_ * u_; }

    friend bool operator==(const CuboidParams& x, const CuboidParams& y) { return x.a_ == y.a_ && x.u_ == y.u_; }

private:
    CuboidParams() = default;
    Int a_, u_, delta_, a0_, A_, B_, C_, D_;
};

inline CuboidParams new_params(const Int& a, const Int& u) { return CuboidParams::make(a, u); }

IntPoly build_P(const CuboidParams& params);
IntPoly build_Q(const CuboidParams& params);

}  // namespace cuboid
