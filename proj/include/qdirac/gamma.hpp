#pragma once

#include <array>
#include <cmath>

#include "qdirac/cquat.hpp"

namespace qdirac {

/// C^4-valued bispinor.
struct Spinor4 {
    std::array<Cplx, 4> c{};

    constexpr Spinor4() = default;
    constexpr Spinor4(Cplx c0, Cplx c1, Cplx c2, Cplx c3) : c{c0, c1, c2, c3} {}

    Cplx& operator[](int k) { return c[static_cast<std::size_t>(k)]; }
    const Cplx& operator[](int k) const { return c[static_cast<std::size_t>(k)]; }

    Spinor4 operator+(const Spinor4& o) const {
        return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
    }
    Spinor4 operator-(const Spinor4& o) const {
        return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
    }
    Spinor4 operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }
    Spinor4 operator*(Cplx s) const { return {c[0] * s, c[1] * s, c[2] * s, c[3] * s}; }
    friend Spinor4 operator*(Cplx s, const Spinor4& v) { return v * s; }

    constexpr bool operator==(const Spinor4&) const = default;
};

// Euclidean modulus sqrt(Sum |ck|^2).
inline double modulus(const Spinor4& v) {
    return std::sqrt(std::norm(v.c[0]) + std::norm(v.c[1]) + std::norm(v.c[2]) + std::norm(v.c[3]));
}

/// Dense 4x4 complex matrix, row major.
struct CMatrix4 {
    std::array<std::array<Cplx, 4>, 4> m{};

    Cplx& operator()(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Cplx& operator()(int r, int c) const {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    static CMatrix4 identity();
    static CMatrix4 from_rows(const std::array<Cplx, 16>& entries);

    CMatrix4 operator*(const CMatrix4& b) const;
    CMatrix4 operator+(const CMatrix4& b) const;
    CMatrix4 operator-(const CMatrix4& b) const;
    CMatrix4 operator*(Cplx s) const;
    friend CMatrix4 operator*(Cplx s, const CMatrix4& a) { return a * s; }

    Spinor4 operator*(const Spinor4& v) const;
};

// Largest componentwise modulus of (a - b).
double max_abs_diff(const CMatrix4& a, const CMatrix4& b);

// Dirac gamma matrices in the Dirac-Pauli representation; k in {0,1,2,3,5}.
// gamma0^2 = gamma5^2 = E4, gammak^2 = -E4 (k=1..3), and all pairs
// anticommute.
const CMatrix4& gamma(int k);

// The value map of the spinor <-> quaternion transform and its inverse
// (a_matrix carries the global 1/2 factor; a_matrix * a_inv_matrix = E4).
// The argument reflection x3 -> -x3 that completes the transform lives at
// field level (lift_A / lift_A_inv), keeping these purely algebraic.
const CMatrix4& a_matrix();
const CMatrix4& a_inv_matrix();

// Constant product gamma1*gamma2*gamma3, used by the similarity between the
// Dirac operator and its quaternionic form.
const CMatrix4& gamma123();

// Pointwise value maps: quaternion components act as a C^4 vector.
CQuat apply_A(const Spinor4& phi);
Spinor4 apply_A_inv(const CQuat& rho);

// x_gamma = Sum xk * gammak.
CMatrix4 x_gamma(const Vec3& x);

} // namespace qdirac
