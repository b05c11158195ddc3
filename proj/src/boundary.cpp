#include "qdirac/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {

void check_guard(const SurfaceMesh& mesh, const Vec3& x) {
    if (mesh.distance_to_nodes(x) < kBoundaryGuardEdges * mesh.typical_edge) {
        throw TooCloseToBoundary("target violates the near-surface quadrature guard");
    }
}

void check_sizes(const SurfaceMesh& mesh, std::size_t got) {
    if (got != mesh.size()) throw ConfigInvalid("boundary data size does not match mesh node count");
}

} // namespace

CQuat k_nu_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x, Cplx nu, int sign) {
    check_sizes(mesh, g.size());
    check_guard(mesh, x);
    CQuat acc;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        acc += mesh.weights[i] * (fund_K(x - mesh.nodes[i], nu, sign) * mesh.normal_cq(i) * g[i]);
    }
    return -acc;
}

CQuat v0_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x) {
    check_sizes(mesh, g.size());
    check_guard(mesh, x);
    CQuat acc;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        acc += mesh.weights[i] * (theta(x - mesh.nodes[i], 0.0) * mesh.normal_cq(i) * g[i]);
    }
    return acc;
}

CQuat k_alpha_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x,
                 const CQuat& alpha, KAlphaForm form) {
    check_sizes(mesh, g.size());
    const Cplx nu = alpha_to_nu(alpha);

    if (form == KAlphaForm::Projection) {
        if (nu == Cplx(0.0)) {
            return k_nu_op(mesh, g, x, 0.0) - v0_op(mesh, g, x) * alpha;
        }
        const ProjectorPair proj = make_projectors(alpha);
        return k_nu_op(mesh, g, x, nu, +1) * proj.plus + k_nu_op(mesh, g, x, nu, -1) * proj.minus;
    }

    check_guard(mesh, x);
    CQuat acc;
    for (std::size_t i = 0; i < mesh.size(); ++i) {
        const Vec3 u = x - mesh.nodes[i];
        const double r = norm(u);
        const CQuat uq = CQuat::from_vec(u);
        const Cplx th = theta(u, nu);
        const CQuat ng = mesh.normal_cq(i) * g[i];
        acc += mesh.weights[i] *
               (th * ((uq / (r * r) - (kImagUnit * nu / r) * uq) * ng) + th * ng * alpha);
    }
    return -acc;
}

Spinor4 k_spinor_op(const SurfaceMesh& mesh, std::span<const Spinor4> q, const Vec3& x,
                    double omega, double m) {
    check_sizes(mesh, q.size());
    const std::vector<std::size_t> sigma = mesh.reflection_node_map();

    // g = A[q] sampled on the mesh: the value map applied to the trace at
    // the reflected node.
    std::vector<CQuat> g(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) g[i] = apply_A(q[sigma[i]]);

    const CQuat kalpha = k_alpha_op(mesh, g, reflect_z(x), spinor_alpha(omega, m),
                                    KAlphaForm::Projection);
    return apply_A_inv(kalpha);
}

std::vector<CQuat> sample_boundary(const SurfaceMesh& mesh, const QuatField& f) {
    std::vector<CQuat> g(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) g[i] = f(mesh.nodes[i]);
    return g;
}

std::vector<Spinor4> sample_boundary(const SurfaceMesh& mesh, const SpinorField& q) {
    std::vector<Spinor4> g(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i) g[i] = q(mesh.nodes[i]);
    return g;
}

ReconstructionReport make_report(const Vec3& target, const CQuat& reconstructed,
                                 const CQuat& reference, double scale, int mesh_level) {
    ReconstructionReport rep;
    rep.target = target;
    rep.reconstructed = reconstructed;
    rep.reference = reference;
    rep.abs_error = modulus_c(reconstructed - reference);
    rep.rel_error = rep.abs_error / std::max(modulus_c(reference), kRelErrorFloor * scale);
    rep.mesh_level = mesh_level;
    return rep;
}

namespace {

double boundary_scale(std::span<const CQuat> g) {
    double s = 0.0;
    for (const CQuat& v : g) s = std::max(s, modulus_c(v));
    return s > 0.0 ? s : 1.0;
}

CQuat apply_side(OperatorSide side, const CQuat& value) {
    return side == OperatorSide::Interior ? value : -value;
}

} // namespace

ReconstructionReport reconstruct_nu(const SurfaceMesh& mesh, const QuatField& f, const Vec3& x,
                                    Cplx nu, OperatorSide side, int mesh_level) {
    const std::vector<CQuat> g = sample_boundary(mesh, f);
    const CQuat rec = apply_side(side, k_nu_op(mesh, g, x, nu));
    return make_report(x, rec, f(x), boundary_scale(g), mesh_level);
}

ReconstructionReport reconstruct_alpha(const SurfaceMesh& mesh, const QuatField& f, const Vec3& x,
                                       const CQuat& alpha, OperatorSide side, KAlphaForm form,
                                       int mesh_level) {
    const std::vector<CQuat> g = sample_boundary(mesh, f);
    const CQuat rec = apply_side(side, k_alpha_op(mesh, g, x, alpha, form));
    return make_report(x, rec, f(x), boundary_scale(g), mesh_level);
}

ReconstructionReport reconstruct_spinor(const SurfaceMesh& mesh, const SpinorField& q,
                                        const Vec3& x, double omega, double m, OperatorSide side,
                                        int mesh_level) {
    const std::vector<Spinor4> qs = sample_boundary(mesh, q);
    Spinor4 rec = k_spinor_op(mesh, qs, x, omega, m);
    if (side == OperatorSide::Exterior) rec = -rec;
    const Spinor4 ref = q(x);

    double scale = 0.0;
    for (const Spinor4& v : qs) scale = std::max(scale, modulus(v));
    if (scale == 0.0) scale = 1.0;

    ReconstructionReport rep;
    rep.target = x;
    rep.reconstructed = CQuat{rec[0], rec[1], rec[2], rec[3]};
    rep.reference = CQuat{ref[0], ref[1], ref[2], ref[3]};
    rep.abs_error = modulus(rec - ref);
    rep.rel_error = rep.abs_error / std::max(modulus(ref), kRelErrorFloor * scale);
    rep.mesh_level = mesh_level;
    return rep;
}

CQuat truncation_integral(const QuatField& f, const Vec3& x, Cplx nu, double big_radius,
                          int level) {
    const SurfaceMesh sphere = icosphere(big_radius, level);
    return surface_integrate(sphere, [&](std::size_t i) {
        const Vec3& y = sphere.nodes[i];
        return fund_K(x - y, nu, +1) * (CQuat::from_vec(y) / norm(y)) * f(y);
    });
}

double stokes_residual(const BallGrid& grid, const SurfaceMesh& mesh, const QuatField& f,
                       const QuatField& g, double h) {
    CQuat volume;
    for (const Vec3& p : grid.points) {
        const CQuat drf = fd_apply(DiffOp::d_right(), f, p, h);
        const CQuat dg = fd_apply(DiffOp::d(), g, p, h);
        volume += grid.cell_weight * (drf * g(p) + f(p) * dg);
    }
    const CQuat surface = surface_integrate(
        mesh, [&](std::size_t i) { return f(mesh.nodes[i]) * mesh.normal_cq(i) * g(mesh.nodes[i]); });
    return modulus_c(volume - surface);
}

double stokes_scale(const BallGrid& grid, const QuatField& f, const QuatField& g, double h) {
    double acc = 0.0;
    for (const Vec3& p : grid.points) {
        const CQuat drf = fd_apply(DiffOp::d_right(), f, p, h);
        const CQuat dg = fd_apply(DiffOp::d(), g, p, h);
        acc += grid.cell_weight * (modulus_c(drf * g(p)) + modulus_c(f(p) * dg));
    }
    return acc;
}

GrowthScan l2_growth_scan(const QuatField& f, std::span<const double> radii, int level) {
    GrowthScan scan;
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (double r : radii) {
        const SurfaceMesh sphere = icosphere(r, level);
        const double n = surface_l2_c_norm(sphere, f.eval);
        const double n2 = n * n;
        scan.samples.push_back({r, n2});
        lo = std::min(lo, n2);
        hi = std::max(hi, n2);
    }
    scan.max_over_min = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    return scan;
}

} // namespace qdirac
