#include "qdirac/kernels.hpp"

#include <cmath>

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {

constexpr double kFourPi = 4.0 * 3.14159265358979323846;

void check_off_origin(const Vec3& x) {
    if (norm(x) < kSingularGuard) throw SingularPoint("kernel evaluated at its singularity");
}

} // namespace

KernelParams KernelParams::from_nu(Cplx nu) {
    if (nu.imag() < 0.0 || (nu.imag() == 0.0 && nu.real() < 0.0)) {
        throw ConfigInvalid("KernelParams: nu must satisfy Im nu >= 0 (Re nu >= 0 when real)");
    }
    KernelParams p;
    p.kind = Kind::Nu;
    p.nu = nu;
    return p;
}

KernelParams KernelParams::from_alpha(const CQuat& alpha) {
    KernelParams p;
    p.kind = Kind::Alpha;
    p.alpha = alpha;
    p.nu = alpha_to_nu(alpha); // throws NotPureVector for non-vector alpha
    return p;
}

KernelParams KernelParams::from_spinor(double omega, double m) {
    KernelParams p;
    p.kind = Kind::SpinorWM;
    p.omega = omega;
    p.m = m;
    p.alpha = CQuat{0.0, -kImagUnit * omega, -m, 0.0};
    p.nu = alpha_to_nu(p.alpha);
    return p;
}

Cplx theta(const Vec3& x, Cplx nu) {
    check_off_origin(x);
    const double r = norm(x);
    return -std::exp(kImagUnit * nu * r) / (kFourPi * r);
}

CQuat fund_K(const Vec3& x, Cplx nu, int sign) {
    check_off_origin(x);
    const double r = norm(x);
    const CQuat xq = CQuat::from_vec(x);
    const CQuat factor = CQuat(static_cast<double>(sign) * nu) + xq / (r * r) - (kImagUnit * nu / r) * xq;
    return factor * theta(x, nu);
}

CQuat fund_E_zero_divisor(const Vec3& x, const CQuat& alpha) {
    detail::require_pure_vector(alpha, "fund_E_zero_divisor");
    if (alpha_to_nu(alpha) != Cplx(0.0)) {
        throw NotZeroDivisor("fund_E_zero_divisor: alpha^2 must vanish");
    }
    return fund_K(x, 0.0, +1) + theta(x, 0.0) * alpha;
}

QuatField null_field(const KernelParams& params, const std::vector<PointSource>& sources) {
    std::vector<Vec3> singulars;
    singulars.reserve(sources.size());
    for (const auto& s : sources) singulars.push_back(s.location);

    switch (params.kind) {
        case KernelParams::Kind::Nu: {
            const Cplx nu = params.nu;
            return {[sources, nu](const Vec3& x) {
                        CQuat acc;
                        for (const auto& s : sources) acc += fund_K(x - s.location, nu, +1) * s.strength;
                        return acc;
                    },
                    singulars};
        }
        case KernelParams::Kind::Alpha:
        case KernelParams::Kind::SpinorWM: {
            if (params.zero_divisor()) {
                const CQuat alpha = params.alpha;
                return {[sources, alpha](const Vec3& x) {
                            CQuat acc;
                            for (const auto& s : sources) {
                                const Vec3 u = x - s.location;
                                acc += fund_K(u, 0.0, +1) * s.strength + theta(u, 0.0) * s.strength * alpha;
                            }
                            return acc;
                        },
                        singulars};
            }
            const ProjectorPair proj = make_projectors(params.alpha);
            const Cplx nu = params.nu;
            return {[sources, proj, nu](const Vec3& x) {
                        CQuat acc;
                        for (const auto& s : sources) {
                            const Vec3 u = x - s.location;
                            acc += fund_K(u, nu, +1) * s.strength * proj.plus +
                                   fund_K(u, nu, -1) * s.strength * proj.minus;
                        }
                        return acc;
                    },
                    singulars};
        }
    }
    throw Error("null_field: unreachable");
}

SpinorField null_spinor_field(double omega, double m, const std::vector<PointSource>& sources) {
    return lift_A_inv(null_field(KernelParams::from_spinor(omega, m), sources));
}

double radiation_residual(RadiationKind kind, const QuatField& f, const Vec3& x,
                          const KernelParams& params) {
    check_off_origin(x);
    const double r = norm(x);
    const CQuat xq = CQuat::from_vec(x);
    const CQuat fx = f(x);

    switch (kind) {
        case RadiationKind::Rad: {
            const Cplx nu = params.nu;
            const CQuat factor = CQuat(nu) - xq / (r * r) + (kImagUnit * nu / r) * xq;
            return modulus_c(factor * fx);
        }
        case RadiationKind::MM: {
            const CQuat factor = CQuat::one() + (kImagUnit / r) * xq;
            return modulus_c(factor * fx);
        }
        case RadiationKind::Alpha: {
            if (params.kind == KernelParams::Kind::Nu) {
                throw KindMismatch("radiation_residual: Alpha kind needs an alpha-bearing variant");
            }
            const CQuat defect = params.nu * fx + ((kImagUnit / r) * xq) * fx * params.alpha;
            return modulus_c(defect);
        }
        case RadiationKind::Spinor:
            throw KindMismatch("radiation_residual: Spinor kind applies to spinor fields");
    }
    throw Error("radiation_residual: unreachable");
}

double radiation_residual(RadiationKind kind, const SpinorField& q, const Vec3& x,
                          const KernelParams& params) {
    if (kind != RadiationKind::Spinor) {
        throw KindMismatch("radiation_residual: spinor fields support the Spinor kind only");
    }
    if (params.kind != KernelParams::Kind::SpinorWM) {
        throw KindMismatch("radiation_residual: Spinor kind needs the SpinorWM variant");
    }
    check_off_origin(x);
    const double r = norm(x);
    const Spinor4 qx = q(x);
    const CMatrix4 mass_term = gamma(0) * Cplx(params.omega) - CMatrix4::identity() * Cplx(params.m);
    const Spinor4 defect = qx * params.nu - (mass_term * (x_gamma(x) * qx)) * Cplx(1.0 / r);
    return modulus(defect);
}

} // namespace qdirac
