#include "qdirac/fd.hpp"

namespace qdirac {

namespace {

const Vec3 kAxes[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

CQuat central_diff(const QuatField& f, const Vec3& x, int k, double h) {
    const Vec3 step = kAxes[k] * h;
    return (f(x + step) - f(x - step)) / Cplx(2.0 * h);
}

Spinor4 central_diff(const SpinorField& q, const Vec3& x, int k, double h) {
    const Vec3 step = kAxes[k] * h;
    return (q(x + step) - q(x - step)) * Cplx(1.0 / (2.0 * h));
}

} // namespace

CQuat fd_apply(const DiffOp& op, const QuatField& f, const Vec3& x, double h) {
    const CQuat basis[3] = {CQuat::i1(), CQuat::i2(), CQuat::i3()};
    CQuat out;
    for (int k = 0; k < 3; ++k) {
        const CQuat dk = central_diff(f, x, k, h);
        out += op.kind == DiffOp::Kind::DRight ? dk * basis[k] : basis[k] * dk;
    }
    switch (op.kind) {
        case DiffOp::Kind::D:
        case DiffOp::Kind::DRight: return out;
        case DiffOp::Kind::DNu: return out + op.nu * f(x);
        case DiffOp::Kind::DAlpha: return out + f(x) * op.alpha;
    }
    return out;
}

CQuat fd_laplacian(const QuatField& f, const Vec3& x, double h) {
    CQuat out;
    const CQuat center = f(x);
    for (int k = 0; k < 3; ++k) {
        const Vec3 step = kAxes[k] * h;
        out += (f(x + step) - 2.0 * center + f(x - step)) / Cplx(h * h);
    }
    return out;
}

Spinor4 dirac_wm_fd(const SpinorField& q, double omega, double m, const Vec3& x, double h) {
    const Cplx i = kImagUnit;
    Spinor4 out = gamma(0) * q(x) * (i * omega) + q(x) * (i * m);
    for (int k = 0; k < 3; ++k) {
        out = out - gamma(k + 1) * central_diff(q, x, k, h);
    }
    return out;
}

double similarity_residual(const QuatField& f, double omega, double m, const Vec3& x, double h) {
    const CQuat lhs = fd_apply(DiffOp::d_alpha(spinor_alpha(omega, m)), f, x, h);

    // -A g123 Dirac A^{-1}, with the argument reflection folded into the A
    // transforms at field level.
    const SpinorField q = lift_A_inv(f);
    const Spinor4 dirac_at_reflected = dirac_wm_fd(q, omega, m, reflect_z(x), h);
    const CQuat rhs = -apply_A(gamma123() * dirac_at_reflected);

    return modulus_c(lhs - rhs);
}

} // namespace qdirac
