#pragma once

#include <span>
#include <vector>

#include "qdirac/fd.hpp"
#include "qdirac/kernels.hpp"
#include "qdirac/surface.hpp"

namespace qdirac {

// Targets must keep at least this many typical edge lengths away from the
// surface; centroid quadrature degrades rapidly below it.
inline constexpr double kBoundaryGuardEdges = 3.0;

// Floor entering relative errors, scaled by the reference magnitude.
inline constexpr double kRelErrorFloor = 1e-14;

/// Which side of the surface the reconstruction formula targets. The sign
/// convention: interior points reproduce f via +K[f], exterior points via
/// -K[f]; normals stay outward from the enclosed domain in both cases.
enum class OperatorSide { Interior, Exterior };

/// How to assemble the alpha-parametrized Cauchy operator.
enum class KAlphaForm {
    Projection,     // K_{+nu}[g]*plus + K_{-nu}[g]*minus (K0 - V0*alpha when nu = 0)
    ExplicitKernel, // single quadrature of the combined kernel; valid for all alpha
};

// Cauchy-type boundary integral -Sum w_i K_nu(x - y_i) n_i g_i, with the
// quaternionic product order kernel * normal * data. `sign` selects the
// K_{+nu} / K_{-nu} kernel. Throws TooCloseToBoundary under the guard.
CQuat k_nu_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x, Cplx nu,
              int sign = +1);

// Single-layer-style integral +Sum w_i theta0(x - y_i) n_i g_i (no leading
// minus).
CQuat v0_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x);

// Cauchy operator for D + M^alpha in either representation; the two agree
// for every pure-vector alpha, including the zero-divisor cone.
CQuat k_alpha_op(const SurfaceMesh& mesh, std::span<const CQuat> g, const Vec3& x,
                 const CQuat& alpha, KAlphaForm form);

// Spinor Cauchy operator: conjugate k_alpha_op by the A transform, boundary
// data sampled at the mesh nodes. Requires a mesh symmetric under
// x3 -> -x3 (the node pairing supplies the reflected trace).
Spinor4 k_spinor_op(const SurfaceMesh& mesh, std::span<const Spinor4> q, const Vec3& x,
                    double omega, double m);

// Node samples of a field over the mesh.
std::vector<CQuat> sample_boundary(const SurfaceMesh& mesh, const QuatField& f);
std::vector<Spinor4> sample_boundary(const SurfaceMesh& mesh, const SpinorField& q);

/// One reconstruction measurement: the boundary integral at `target`
/// against the directly evaluated reference.
struct ReconstructionReport {
    Vec3 target{};
    CQuat reconstructed{};
    CQuat reference{};
    double abs_error = 0.0;
    double rel_error = 0.0;
    int mesh_level = -1;
};

ReconstructionReport make_report(const Vec3& target, const CQuat& reconstructed,
                                 const CQuat& reference, double scale, int mesh_level = -1);

// Reconstruct f at x from its boundary trace with K_nu and compare against
// f(x); Exterior applies the -K sign.
ReconstructionReport reconstruct_nu(const SurfaceMesh& mesh, const QuatField& f, const Vec3& x,
                                    Cplx nu, OperatorSide side, int mesh_level = -1);

ReconstructionReport reconstruct_alpha(const SurfaceMesh& mesh, const QuatField& f, const Vec3& x,
                                       const CQuat& alpha, OperatorSide side, KAlphaForm form,
                                       int mesh_level = -1);

// Spinor variant; errors are measured in the C^4 Euclidean modulus.
ReconstructionReport reconstruct_spinor(const SurfaceMesh& mesh, const SpinorField& q,
                                        const Vec3& x, double omega, double m, OperatorSide side,
                                        int mesh_level = -1);

// Truncation tail of the exterior reconstruction argument: the integral of
// K_nu(x - y) (y/|y|) f(y) over the sphere |y| = R. Decays for radiating f.
CQuat truncation_integral(const QuatField& f, const Vec3& x, Cplx nu, double big_radius,
                          int level);

// | Int_vol [(D_r f) g + f (D g)] - Int_surf f n g |_c, derivatives by
// central differences of step h.
double stokes_residual(const BallGrid& grid, const SurfaceMesh& mesh, const QuatField& f,
                       const QuatField& g, double h);

// Scale for normalizing the Stokes residual: the volume integral of
// |(D_r f) g|_c + |f (D g)|_c (magnitudes before cancellation).
double stokes_scale(const BallGrid& grid, const QuatField& f, const QuatField& g, double h);

/// Squared surface L^2_c norms of f over spheres |x| = R.
struct GrowthSample {
    double radius = 0.0;
    double norm_sq = 0.0;
};

struct GrowthScan {
    std::vector<GrowthSample> samples;
    double max_over_min = 0.0;
};

GrowthScan l2_growth_scan(const QuatField& f, std::span<const double> radii, int level);

} // namespace qdirac
