#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

#include "qdirac/errors.hpp"
#include "qdirac/vec3.hpp"

namespace qdirac {

using Cplx = std::complex<double>;

inline constexpr Cplx kImagUnit{0.0, 1.0};

// Relative threshold below which a*conj(a) is treated as zero (zero divisor
// or zero element) when inverting.
inline constexpr double kInverseEps = 1e-12;

// Relative tolerance for the zero-divisor classification margin.
inline constexpr double kZeroDivisorTol = 1e-10;

/// Complex quaternion (biquaternion): a0 + a1*i1 + a2*i2 + a3*i3 with complex
/// components. The basis satisfies i1*i2 = i3 (cyclic) and ik^2 = -1; the
/// complex unit i commutes with all ik. The algebra has zero divisors, so
/// a*conj(a) may vanish for nonzero a.
struct CQuat {
    Cplx a0, a1, a2, a3;

    constexpr CQuat() : a0(0.0), a1(0.0), a2(0.0), a3(0.0) {}
    constexpr CQuat(Cplx s0, Cplx s1, Cplx s2, Cplx s3) : a0(s0), a1(s1), a2(s2), a3(s3) {}

    // Scalar embedding: z -> z * i0.
    constexpr CQuat(double real_scalar) : a0(real_scalar), a1(0.0), a2(0.0), a3(0.0) {}
    constexpr CQuat(Cplx scalar) : a0(scalar), a1(0.0), a2(0.0), a3(0.0) {}

    static constexpr CQuat zero() { return {}; }
    static constexpr CQuat one() { return {1.0, 0.0, 0.0, 0.0}; }
    static constexpr CQuat i1() { return {0.0, 1.0, 0.0, 0.0}; }
    static constexpr CQuat i2() { return {0.0, 0.0, 1.0, 0.0}; }
    static constexpr CQuat i3() { return {0.0, 0.0, 0.0, 1.0}; }

    // Pure-vector quaternion from a real 3-vector: Sum xk*ik.
    static constexpr CQuat from_vec(const Vec3& v) { return {0.0, v.x, v.y, v.z}; }

    constexpr Cplx sc() const { return a0; }
    constexpr CQuat vec() const { return {0.0, a1, a2, a3}; }

    constexpr CQuat operator+(const CQuat& b) const {
        return {a0 + b.a0, a1 + b.a1, a2 + b.a2, a3 + b.a3};
    }
    constexpr CQuat operator-(const CQuat& b) const {
        return {a0 - b.a0, a1 - b.a1, a2 - b.a2, a3 - b.a3};
    }
    constexpr CQuat operator-() const { return {-a0, -a1, -a2, -a3}; }

    CQuat& operator+=(const CQuat& b) {
        a0 += b.a0; a1 += b.a1; a2 += b.a2; a3 += b.a3;
        return *this;
    }
    CQuat& operator-=(const CQuat& b) {
        a0 -= b.a0; a1 -= b.a1; a2 -= b.a2; a3 -= b.a3;
        return *this;
    }

    // Complex scalars commute with the whole algebra.
    constexpr CQuat operator*(Cplx s) const { return {a0 * s, a1 * s, a2 * s, a3 * s}; }
    friend constexpr CQuat operator*(Cplx s, const CQuat& a) { return a * s; }
    constexpr CQuat operator/(Cplx s) const { return {a0 / s, a1 / s, a2 / s, a3 / s}; }
    constexpr CQuat operator*(double s) const { return {a0 * s, a1 * s, a2 * s, a3 * s}; }
    friend constexpr CQuat operator*(double s, const CQuat& a) { return a * s; }
    constexpr CQuat operator/(double s) const { return {a0 / s, a1 / s, a2 / s, a3 / s}; }

    // Quaternion product: a0*b0 - <av,bv> + a0*bv + av*b0 + av x bv.
    constexpr CQuat operator*(const CQuat& b) const {
        return {a0 * b.a0 - (a1 * b.a1 + a2 * b.a2 + a3 * b.a3),
                a0 * b.a1 + a1 * b.a0 + (a2 * b.a3 - a3 * b.a2),
                a0 * b.a2 + a2 * b.a0 + (a3 * b.a1 - a1 * b.a3),
                a0 * b.a3 + a3 * b.a0 + (a1 * b.a2 - a2 * b.a1)};
    }

    constexpr bool operator==(const CQuat&) const = default;
};

// Quaternionic conjugate: (a0, av) -> (a0, -av).
constexpr CQuat conj(const CQuat& a) { return {a.a0, -a.a1, -a.a2, -a.a3}; }

// a * conj(a) = a0^2 + a1^2 + a2^2 + a3^2, a complex scalar. Vanishes exactly
// on the zero-divisor cone.
constexpr Cplx norm_sq(const CQuat& a) {
    return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
}

// Componentwise modulus |a|_c = sqrt(Sum |ak|^2); finite and positive for any
// nonzero a, including zero divisors.
inline double modulus_c_sq(const CQuat& a) {
    return std::norm(a.a0) + std::norm(a.a1) + std::norm(a.a2) + std::norm(a.a3);
}

inline double modulus_c(const CQuat& a) { return std::sqrt(modulus_c_sq(a)); }

// Inverse conj(a)/(a*conj(a)). Throws ZeroDivisorOrZero when a*conj(a) is
// zero relative to |a|_c^2 (threshold kInverseEps).
inline CQuat inverse(const CQuat& a) {
    const Cplx n = norm_sq(a);
    const double scale = modulus_c_sq(a);
    if (std::abs(n) <= kInverseEps * scale) {
        throw ZeroDivisorOrZero("quaternion has no inverse: a*conj(a) ~ 0");
    }
    return conj(a) / n;
}

/// Diagnostics for the zero-divisor classification. The four criteria are
/// algebraically equivalent characterizations of the cone a0^2 = av^2:
///   c0: |a*conj(a)|            c1: |a0^2 - av^2|
///   c2: |a^2 - 2*a0*a|_c       c3: |a^2 - 2*av*a|_c
/// all normalized by |a|_c^2. `margin` is c0/|a|_c^2, a relative distance
/// from the cone; the boolean alone is fragile near it.
struct ZeroDivisorDiag {
    bool is_zero_divisor = false;
    double margin = 0.0;
    std::array<double, 4> criteria{};
};

inline ZeroDivisorDiag zero_divisor_check(const CQuat& a) {
    const double scale = modulus_c_sq(a);
    if (scale == 0.0) throw ZeroInput("zero quaternion cannot be classified");

    const CQuat av = a.vec();
    const CQuat asq = a * a;
    const Cplx av_sq = (av * av).a0;

    ZeroDivisorDiag d;
    d.criteria[0] = std::abs(norm_sq(a)) / scale;
    d.criteria[1] = std::abs(a.a0 * a.a0 - av_sq) / scale;
    d.criteria[2] = modulus_c(asq - 2.0 * a.a0 * a) / scale;
    d.criteria[3] = modulus_c(asq - (2.0 * av) * a) / scale;
    d.margin = d.criteria[0];
    d.is_zero_divisor = d.margin <= kZeroDivisorTol;
    return d;
}

inline bool is_zero_divisor(const CQuat& a) { return zero_divisor_check(a).is_zero_divisor; }

// Square root branch used throughout: nu with nu^2 = z, Im nu >= 0, and
// Re nu >= 0 when Im nu = 0.
inline Cplx sqrt_upper_halfplane(Cplx z) {
    Cplx s = std::sqrt(z);
    if (s.imag() < 0.0 || (s.imag() == 0.0 && s.real() < 0.0)) s = -s;
    return s;
}

namespace detail {
inline void require_pure_vector(const CQuat& alpha, const char* who) {
    if (std::abs(alpha.a0) > 1e-12 * std::max(1.0, modulus_c(alpha))) {
        throw NotPureVector(std::string(who) + ": scalar part must vanish");
    }
}
} // namespace detail

// nu = sqrt(alpha^2) for purely vectorial alpha; alpha^2 is the complex
// scalar -(a1^2+a2^2+a3^2). Returns exactly 0 on the zero-divisor cone.
inline Cplx alpha_to_nu(const CQuat& alpha) {
    detail::require_pure_vector(alpha, "alpha_to_nu");
    const Cplx alpha_sq = -(alpha.a1 * alpha.a1 + alpha.a2 * alpha.a2 + alpha.a3 * alpha.a3);
    if (std::abs(alpha_sq) <= kInverseEps * modulus_c_sq(alpha)) return Cplx(0.0);
    return sqrt_upper_halfplane(alpha_sq);
}

/// Right-multiplier pair ((nu+alpha)/2nu, (nu-alpha)/2nu). Right
/// multiplication by `plus`/`minus` gives the complementary projections onto
/// the +nu / -nu eigenspaces of right multiplication by alpha.
struct ProjectorPair {
    CQuat plus;
    CQuat minus;
    Cplx nu;
};

inline ProjectorPair make_projectors(const CQuat& alpha) {
    detail::require_pure_vector(alpha, "make_projectors");
    const Cplx nu = alpha_to_nu(alpha);
    if (nu == Cplx(0.0)) {
        throw ZeroDivisorAlpha("make_projectors: alpha^2 = 0 has no projector split");
    }
    const Cplx half = 0.5;
    return {half * (CQuat(nu) + alpha) / nu, half * (CQuat(nu) - alpha) / nu, nu};
}

} // namespace qdirac
