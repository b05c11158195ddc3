#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qdirac/boundary.hpp"
#include "support.hpp"

using namespace qdirac;
using qdirac::testing::PolyField;
using qdirac::testing::random_poly_field;
using qdirac::testing::Rng;

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<CQuat> zeros(std::size_t n) { return std::vector<CQuat>(n); }

} // namespace

TEST_CASE("layer operators: trivial data and guards") {
    const SurfaceMesh m = icosphere(1.0, 2);
    const auto g = zeros(m.size());

    CHECK(modulus_c(k_nu_op(m, g, {0, 0, 0}, Cplx(1.0))) == 0.0);
    CHECK(modulus_c(v0_op(m, g, {0, 0, 0})) == 0.0);

    SUBCASE("v0 of constant data at the center vanishes by symmetry") {
        const std::vector<CQuat> ones(m.size(), CQuat::one());
        CHECK(modulus_c(v0_op(m, ones, {0, 0, 0})) < 1e-6);
    }

    SUBCASE("near-surface guard") {
        CHECK_THROWS_AS(k_nu_op(m, g, {1.01, 0, 0}, Cplx(1.0)), TooCloseToBoundary);
        CHECK_THROWS_AS(v0_op(m, g, {0.99, 0, 0}), TooCloseToBoundary);
        CHECK_THROWS_AS(
            k_alpha_op(m, g, {1.01, 0, 0}, spinor_alpha(2.0, 1.0), KAlphaForm::ExplicitKernel),
            TooCloseToBoundary);
    }

    SUBCASE("data size must match") {
        CHECK_THROWS_AS(k_nu_op(m, zeros(3), {0, 0, 0}, Cplx(1.0)), ConfigInvalid);
    }
}

TEST_CASE("interior Cauchy reconstruction converges at second order") {
    for (Cplx nu : {Cplx(1.0, 0.0), Cplx(1.0, 0.5)}) {
        const QuatField f = null_field(KernelParams::from_nu(nu),
                                       {{{0.0, 0.0, 3.0}, CQuat{1.0, 0.2, -0.3, 0.1}}});
        double prev = 0.0;
        for (int level : {2, 3, 4}) {
            const SurfaceMesh m = icosphere(1.0, level);
            const auto rep = reconstruct_nu(m, f, {0, 0, 0}, nu, OperatorSide::Interior, level);
            if (level == 4) CHECK(rep.rel_error < 1e-3);
            if (prev > 0.0) {
                const double order = std::log2(prev / rep.rel_error);
                CHECK(order > 1.7);
            }
            prev = rep.rel_error;
        }
    }
}

TEST_CASE("exterior Cauchy carries the minus sign") {
    const Cplx nu(1.0, 0.0);
    const QuatField f = null_field(KernelParams::from_nu(nu),
                                   {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}});
    const SurfaceMesh m = icosphere(1.0, 4);
    for (double r : {1.5, 2.0, 3.0}) {
        const Vec3 x{0.0, 0.3, r};
        CHECK(reconstruct_nu(m, f, x, nu, OperatorSide::Exterior, 4).rel_error < 1e-3);
        CHECK(reconstruct_nu(m, f, x, nu, OperatorSide::Interior, 4).rel_error > 0.5);
    }
}

TEST_CASE("truncation tail of the exterior argument") {
    SUBCASE("exponentially radiating field: tail collapses as R doubles") {
        const Cplx nu(1.0, 0.5);
        const QuatField f = null_field(KernelParams::from_nu(nu),
                                       {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}});
        double prev = 0.0;
        for (double radius : {4.0, 8.0, 16.0}) {
            const double tail = modulus_c(truncation_integral(f, {0.0, 0.3, 1.5}, nu, radius, 4));
            if (prev > 0.0) CHECK(tail < prev / 5.0);
            prev = tail;
        }
    }

    SUBCASE("real-frequency field: tail sits at quadrature noise") {
        const Cplx nu(1.0, 0.0);
        const QuatField f = null_field(KernelParams::from_nu(nu),
                                       {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}});
        for (double radius : {4.0, 8.0, 16.0}) {
            CHECK(modulus_c(truncation_integral(f, {0.0, 0.3, 1.5}, nu, radius, 4)) < 1e-6);
        }
    }
}

TEST_CASE("K_alpha representations agree and reconstruct") {
    Rng rng(41);

    SUBCASE("Projection and ExplicitKernel agree on random data") {
        const SurfaceMesh m = icosphere(1.0, 3);
        for (auto [w, mass] : {std::pair{2.0, 1.0}, {1.0, 2.0}}) {
            const CQuat alpha = spinor_alpha(w, mass);
            std::vector<CQuat> g(m.size());
            for (auto& v : g) v = rng.cquat();
            for (const Vec3& x : {Vec3{0, 0, 0}, Vec3{0.2, 0.1, 2.0}}) {
                const CQuat a = k_alpha_op(m, g, x, alpha, KAlphaForm::Projection);
                const CQuat b = k_alpha_op(m, g, x, alpha, KAlphaForm::ExplicitKernel);
                CHECK(modulus_c(a - b) < 1e-10);
            }
        }
    }

    SUBCASE("explicit kernel handles the zero-divisor cone like K0 - V0*alpha") {
        const SurfaceMesh m = icosphere(1.0, 3);
        const CQuat alpha = spinor_alpha(1.0, 1.0);
        std::vector<CQuat> g(m.size());
        for (auto& v : g) v = rng.cquat();
        const Vec3 x{0.3, -0.2, 0.1};
        const CQuat a = k_alpha_op(m, g, x, alpha, KAlphaForm::Projection);
        const CQuat b = k_alpha_op(m, g, x, alpha, KAlphaForm::ExplicitKernel);
        const CQuat c = k_nu_op(m, g, x, 0.0) - v0_op(m, g, x) * alpha;
        CHECK(modulus_c(a - b) < 1e-12);
        CHECK(modulus_c(a - c) < 1e-12);
    }

    SUBCASE("interior and exterior reconstruction, nu != 0 and zero divisor") {
        const SurfaceMesh m = icosphere(1.0, 4);
        for (auto [w, mass] : {std::pair{2.0, 1.0}, {1.0, 1.0}}) {
            const KernelParams p = KernelParams::from_spinor(w, mass);

            const QuatField fin = null_field(p, {{{0.0, 0.0, 3.0}, CQuat{0.3, 1.0, -0.2, 0.4}}});
            const auto inner = reconstruct_alpha(m, fin, {0.2, 0.1, -0.3}, p.alpha,
                                                 OperatorSide::Interior, KAlphaForm::Projection, 4);
            CHECK(inner.rel_error < 1e-3);

            const QuatField fout = null_field(p, {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}});
            const auto outer =
                reconstruct_alpha(m, fout, {0.0, 0.3, 2.0}, p.alpha, OperatorSide::Exterior,
                                  KAlphaForm::ExplicitKernel, 4);
            CHECK(outer.rel_error < 1e-3);
        }
    }

    SUBCASE("exterior zero-divisor case reconstructs fund_E directly") {
        const CQuat alpha = spinor_alpha(1.0, 1.0);
        const Vec3 src{0.1, -0.05, 0.2};
        const QuatField f{[alpha, src](const Vec3& x) { return fund_E_zero_divisor(x - src, alpha); },
                          {src}};
        const SurfaceMesh m = icosphere(1.0, 4);
        const auto rep = reconstruct_alpha(m, f, {0.0, 0.3, 2.0}, alpha, OperatorSide::Exterior,
                                           KAlphaForm::Projection, 4);
        CHECK(rep.rel_error < 1e-3);
    }

    SUBCASE("non-vector alpha is rejected") {
        const SurfaceMesh m = icosphere(1.0, 1);
        CHECK_THROWS_AS(
            k_alpha_op(m, zeros(m.size()), {0, 0, 0}, CQuat::one(), KAlphaForm::Projection),
            NotPureVector);
    }
}

TEST_CASE("spinor Cauchy operator") {
    const double omega = 2.0, mass = 1.0;
    const SurfaceMesh m = icosphere(1.0, 4);

    SUBCASE("zero data maps to zero") {
        const std::vector<Spinor4> q(m.size());
        CHECK(modulus(k_spinor_op(m, q, {0, 0, 0}, omega, mass)) == 0.0);
    }

    SUBCASE("definition round-trip against k_alpha_op") {
        Rng rng(42);
        const SurfaceMesh coarse = icosphere(1.0, 3);
        std::vector<Spinor4> q(coarse.size());
        for (auto& v : q) v = rng.spinor();
        const std::vector<std::size_t> sigma = coarse.reflection_node_map();
        std::vector<CQuat> g(coarse.size());
        for (std::size_t i = 0; i < coarse.size(); ++i) g[i] = apply_A(q[sigma[i]]);

        const Vec3 x{0.1, -0.2, 0.3};
        const Spinor4 lhs = k_spinor_op(coarse, q, x, omega, mass);
        const CQuat back = apply_A(lhs); // A evaluated at reflect(reflect(x))
        const CQuat rhs = k_alpha_op(coarse, g, reflect_z(x), spinor_alpha(omega, mass),
                                     KAlphaForm::Projection);
        CHECK(modulus_c(back - rhs) < 1e-12);
    }

    SUBCASE("exterior reconstruction of a Dirac null field") {
        const std::vector<PointSource> src = {{{0.1, -0.05, 0.2}, CQuat{1.0, 0.0, 0.5, -0.2}}};
        const SpinorField q = null_spinor_field(omega, mass, src);
        for (const Vec3& x : {Vec3{0.0, 0.3, 2.0}, Vec3{1.5, 0.0, 0.0}}) {
            const auto rep = reconstruct_spinor(m, q, x, omega, mass, OperatorSide::Exterior, 4);
            CHECK(rep.rel_error < 1e-3);
        }
        // interior formula with the wrong side fails
        const auto bad = reconstruct_spinor(m, q, {0.0, 0.3, 2.0}, omega, mass,
                                            OperatorSide::Interior, 4);
        CHECK(bad.rel_error > 0.5);
    }

    SUBCASE("asymmetric mesh is rejected") {
        const SurfaceMesh off = icosphere(1.0, 1, {0, 0, 0.4});
        const std::vector<Spinor4> q(off.size());
        CHECK_THROWS_AS(k_spinor_op(off, q, {0, 0, 0}, omega, mass),
                        DomainNotReflectionSymmetric);
    }
}

TEST_CASE("Stokes identity") {
    const SurfaceMesh m = icosphere(1.0, 4);
    const BallGrid grid = shell_grid(1.0, std::nullopt, 0.05);

    SUBCASE("constants make both sides vanish") {
        const QuatField c{[](const Vec3&) { return CQuat{1.0, -0.5, 0.25, 2.0}; }, {}};
        CHECK(stokes_residual(grid, m, c, c, 1e-3) < 1e-6 * grid.total_volume());
    }

    SUBCASE("f = 1, g = x1: both sides are i1 * volume") {
        const QuatField one{[](const Vec3&) { return CQuat::one(); }, {}};
        const QuatField x1{[](const Vec3& p) { return CQuat(Cplx(p.x)); }, {}};
        const double vol = 4.0 * kPi / 3.0;
        CHECK(stokes_residual(grid, m, one, x1, 1e-3) < 0.01 * vol);

        // closed-form check of the volume side alone
        CQuat volume_term;
        for (const Vec3& p : grid.points) {
            volume_term += grid.cell_weight * (fd_apply(DiffOp::d_right(), one, p, 1e-3) * x1(p) +
                                               one(p) * fd_apply(DiffOp::d(), x1, p, 1e-3));
        }
        CHECK(modulus_c(volume_term - vol * CQuat::i1()) < 0.01 * vol);
    }

    SUBCASE("random quadratic fields") {
        Rng rng(43);
        for (int trial = 0; trial < 3; ++trial) {
            const PolyField pf = random_poly_field(rng, 2);
            const PolyField pg = random_poly_field(rng, 2);
            const QuatField f = pf.as_field();
            const QuatField g = pg.as_field();
            const double scale = stokes_scale(grid, f, g, 1e-3);
            CHECK(stokes_residual(grid, m, f, g, 1e-3) < 0.01 * scale);
        }
    }
}

TEST_CASE("L2 growth scan") {
    const double radii[] = {2.0, 4.0, 8.0, 16.0};

    SUBCASE("radiating kernel stays bounded") {
        const QuatField f =
            null_field(KernelParams::from_nu(Cplx(2.0, 0.0)), {{{0, 0, 0}, CQuat::one()}});
        const GrowthScan scan = l2_growth_scan(f, radii, 4);
        CHECK(scan.max_over_min < 1.1);
        REQUIRE(scan.samples.size() == 4);
        CHECK(scan.samples[0].radius == 2.0);
    }

    SUBCASE("absorbing frequency decays strictly") {
        const QuatField f =
            null_field(KernelParams::from_nu(Cplx(0.0, 1.0)), {{{0, 0, 0}, CQuat::one()}});
        const GrowthScan scan = l2_growth_scan(f, radii, 3);
        for (std::size_t i = 1; i < scan.samples.size(); ++i) {
            CHECK(scan.samples[i].norm_sq < scan.samples[i - 1].norm_sq);
        }
    }

    SUBCASE("counterexample field grows like R^6") {
        const QuatField f{[](const Vec3& x) {
                              const double r = norm(x);
                              return (CQuat::one() - (kImagUnit / r) * CQuat::from_vec(x)) * (r * r);
                          },
                          {Vec3{}}};
        const GrowthScan scan = l2_growth_scan(f, radii, 3);
        const double slope = std::log2(scan.samples[3].norm_sq / scan.samples[0].norm_sq) / 3.0;
        CHECK(slope == doctest::Approx(6.0).epsilon(0.02));
        CHECK(scan.samples[3].norm_sq > std::pow(16.0 / 2.0, 4.0) * scan.samples[0].norm_sq);
    }
}
