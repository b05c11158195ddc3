#pragma once

#include "qdirac/field.hpp"

namespace qdirac {

// Default second-order central-difference step at x.
inline double fd_default_step(const Vec3& x) { return 1e-3 * (1.0 + norm(x)); }

/// First-order quaternionic differential operators applied by central
/// differences:
///   D        Sum ik * dk f        (left basis multiplication)
///   DRight   Sum dk f * ik        (right basis multiplication)
///   DNu      D f + nu * f
///   DAlpha   D f + f * alpha      (right multiplication by a pure vector)
struct DiffOp {
    enum class Kind { D, DRight, DNu, DAlpha };

    Kind kind = Kind::D;
    Cplx nu{};
    CQuat alpha{};

    static DiffOp d() { return {Kind::D, {}, {}}; }
    static DiffOp d_right() { return {Kind::DRight, {}, {}}; }
    static DiffOp d_nu(Cplx nu) { return {Kind::DNu, nu, {}}; }
    static DiffOp d_alpha(const CQuat& alpha) { return {Kind::DAlpha, {}, alpha}; }
};

// Apply `op` to f at x with central differences of step h (O(h^2) accurate).
CQuat fd_apply(const DiffOp& op, const QuatField& f, const Vec3& x, double h);

inline CQuat fd_apply(const DiffOp& op, const QuatField& f, const Vec3& x) {
    return fd_apply(op, f, x, fd_default_step(x));
}

// Central-difference Laplacian, componentwise.
CQuat fd_laplacian(const QuatField& f, const Vec3& x, double h);

// Time-harmonic Dirac operator i*omega*gamma0 - Sum gammak*dk + i*m applied
// to a spinor field by central differences.
Spinor4 dirac_wm_fd(const SpinorField& q, double omega, double m, const Vec3& x, double h);

inline Spinor4 dirac_wm_fd(const SpinorField& q, double omega, double m, const Vec3& x) {
    return dirac_wm_fd(q, omega, m, x, fd_default_step(x));
}

// |D_alpha f - (-A g123 Dirac_{omega,m} A^{-1} f)|_c at x, with alpha =
// -(i*omega*i1 + m*i2) and both sides evaluated by central differences of
// step h. Zero (up to rounding) exactly when the similarity between the two
// operators holds.
double similarity_residual(const QuatField& f, double omega, double m, const Vec3& x, double h);

// alpha = -(i*omega*i1 + m*i2), the pure-vector parameter matching the
// spinor pair (omega, m).
inline CQuat spinor_alpha(double omega, double m) {
    return {0.0, -kImagUnit * omega, -m, 0.0};
}

} // namespace qdirac
