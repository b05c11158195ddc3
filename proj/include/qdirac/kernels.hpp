#pragma once

#include <vector>

#include "qdirac/field.hpp"

namespace qdirac {

// Kernel evaluation requires |x| at or above this guard.
inline constexpr double kSingularGuard = 1e-8;

// Falsifiable proxy for "o(1/|x|)": r * residual(r) drops by at least
// kDecadeDecayFactor per decade of r, within kDecadeDecaySlack. Radiating
// fields approach the factor-10 bound from below (exactly 10 for an origin
// source, 10*(1 - O(1/r)) otherwise), so the comparison needs the slack;
// non-decaying fields score near 1 and stay far from it.
inline constexpr double kDecadeDecayFactor = 10.0;
inline constexpr double kDecadeDecaySlack = 0.05;

/// Wave parameters in one of three equivalent descriptions:
///   Nu        a complex wavenumber nu, Im nu >= 0
///   Alpha     a pure-vector quaternion, nu = sqrt(alpha^2) derived
///   SpinorWM  a frequency/mass pair, alpha = -(i*omega*i1 + m*i2)
/// nu always satisfies Im nu >= 0, and Re nu >= 0 when Im nu = 0. The
/// Alpha/SpinorWM variants hit the zero-divisor cone exactly when nu = 0
/// (for SpinorWM: omega^2 = m^2).
struct KernelParams {
    enum class Kind { Nu, Alpha, SpinorWM };

    Kind kind = Kind::Nu;
    Cplx nu{};
    CQuat alpha{};
    double omega = 0.0;
    double m = 0.0;

    static KernelParams from_nu(Cplx nu);
    static KernelParams from_alpha(const CQuat& alpha);
    static KernelParams from_spinor(double omega, double m);

    bool zero_divisor() const { return kind != Kind::Nu && nu == Cplx(0.0); }
};

// Outgoing fundamental solution of the Helmholtz operator,
// -exp(i*nu*|x|) / (4*pi*|x|). Throws SingularPoint near the origin.
Cplx theta(const Vec3& x, Cplx nu);

// Fundamental solution of D + sign*nu:
//   (sign*nu + x/|x|^2 - i*nu*x/|x|) * theta(x, nu)
// with x the pure-vector quaternion. Both signs share the same theta branch.
// sign = +1 is the outgoing kernel; sign = -1 does not radiate.
CQuat fund_K(const Vec3& x, Cplx nu, int sign);

// Decaying null solution of D + M^alpha for alpha on the zero-divisor cone:
// K0(x) + theta0(x)*alpha. O(1/|x|) overall, with the K0 part O(1/|x|^2).
// Throws NotZeroDivisor unless alpha^2 = 0.
CQuat fund_E_zero_divisor(const Vec3& x, const CQuat& alpha);

/// Point source: constant right factor attached to a kernel translate.
struct PointSource {
    Vec3 location;
    CQuat strength;
};

// Superposition of kernel translates lying in the null space of the operator
// selected by `params`:
//   Nu               Sum K_{+}(x - x0) * c
//   Alpha, nu != 0   Sum [K_{+}(x-x0)*c*plus + K_{-}(x-x0)*c*minus]
//   Alpha, nu  = 0   Sum [K0(x-x0)*c + theta0(x-x0)*c*alpha]
// Evaluation throws SingularPoint when x hits a source.
QuatField null_field(const KernelParams& params, const std::vector<PointSource>& sources);

// lift_A_inv of the Alpha-variant field: a null spinor field of the
// time-harmonic Dirac operator for (omega, m).
SpinorField null_spinor_field(double omega, double m, const std::vector<PointSource>& sources);

/// Which radiation-condition defect to evaluate.
enum class RadiationKind {
    Rad,    // (nu - x/|x|^2 + i*nu*x/|x|) * f(x)
    MM,     // (1 + i*x/|x|) * f(x)
    Alpha,  // nu*f(x) + (i*x/|x|) * f(x) * alpha
    Spinor, // nu*q(x) - (omega*gamma0 - m) * (x_gamma/|x|) * q(x)
};

// |defect|_c of the selected radiation condition at x. Rad and MM accept any
// variant (MM ignores params); Alpha requires an alpha-bearing variant.
// Spinor is the spinor-field overload below.
double radiation_residual(RadiationKind kind, const QuatField& f, const Vec3& x,
                          const KernelParams& params);

double radiation_residual(RadiationKind kind, const SpinorField& q, const Vec3& x,
                          const KernelParams& params);

} // namespace qdirac
