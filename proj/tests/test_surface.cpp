#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "qdirac/kernels.hpp"
#include "qdirac/surface.hpp"
#include "support.hpp"

using namespace qdirac;
using qdirac::testing::Rng;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("icosphere basics") {
    CHECK(icosphere(1.0, 0).size() == 20);
    CHECK(icosphere(1.0, 1).size() == 80);
    CHECK(icosphere(1.0, 3).size() == 1280);
    CHECK_THROWS_AS(icosphere(-1.0, 0), ConfigInvalid);
    CHECK_THROWS_AS(icosphere(1.0, -1), ConfigInvalid);

    const SurfaceMesh m = icosphere(1.0, 4);
    CHECK(m.size() == 5120);

    SUBCASE("area converges to 4 pi R^2") {
        CHECK(m.total_area() == doctest::Approx(4.0 * kPi).epsilon(0.01));
        const SurfaceMesh m2 = icosphere(2.0, 4, {1.0, -3.0, 0.5});
        CHECK(m2.total_area() == doctest::Approx(16.0 * kPi).epsilon(0.01));
    }

    SUBCASE("unit outward normals, vanishing vector area") {
        for (std::size_t i = 0; i < m.size(); i += 97) {
            CHECK(norm(m.normals[i]) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(dot(m.normals[i], m.nodes[i]) > 0.0);
        }
        CHECK(norm(m.vector_area()) < 1e-6);
    }

    SUBCASE("metadata") {
        CHECK(m.enclosing_radius == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(norm(m.centroid) < 1e-12);
        CHECK(m.typical_edge == doctest::Approx(1.05 / 16.0).epsilon(0.3));
    }

    SUBCASE("quadrature error decays at second order") {
        // Smooth integrand with a closed form: Int over the unit sphere of
        // exp(z) dGamma = 4 pi sinh(1) / ... computed by the 1D reduction
        // 2 pi Int_{-1}^{1} exp(t) dt = 2 pi (e - 1/e).
        const double exact = 2.0 * kPi * (std::exp(1.0) - std::exp(-1.0));
        double prev_err = 0.0;
        for (int level : {2, 3, 4}) {
            const SurfaceMesh s = icosphere(1.0, level);
            const CQuat got = surface_integrate(s, [&](std::size_t i) {
                return CQuat(std::exp(s.nodes[i].z));
            });
            const double err = std::abs(got.a0.real() - exact);
            if (prev_err > 0.0) CHECK(err < prev_err / 3.0);
            prev_err = err;
        }
    }

    SUBCASE("deterministic construction") {
        const SurfaceMesh a = icosphere(1.0, 3);
        const SurfaceMesh b = icosphere(1.0, 3);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a.nodes[i] == b.nodes[i]);
            CHECK(a.weights[i] == b.weights[i]);
        }
    }
}

TEST_CASE("surface integration") {
    const SurfaceMesh m = icosphere(1.0, 4);

    SUBCASE("constant integrand gives the area") {
        const CQuat v = surface_integrate(m, [](std::size_t) { return CQuat::one(); });
        CHECK(v.a0.real() == doctest::Approx(4.0 * kPi).epsilon(0.01));
    }

    SUBCASE("normal integrand gives the vector area (zero)") {
        const CQuat v = surface_integrate(m, [&](std::size_t i) { return m.normal_cq(i); });
        CHECK(modulus_c(v) < 1e-6);
    }

    SUBCASE("L2 norm of the constant field") {
        const double n = surface_l2_c_norm(m, [](const Vec3&) { return CQuat::one(); });
        CHECK(n == doctest::Approx(std::sqrt(4.0 * kPi)).epsilon(0.005));
    }

    SUBCASE("squared norm of a radiating kernel stays bounded in R") {
        const Vec3 src{0.2, -0.1, 0.05};
        double first = 0.0;
        for (double radius : {2.0, 4.0, 8.0, 16.0}) {
            const SurfaceMesh s = icosphere(radius, 4);
            const double n = surface_l2_c_norm(
                s, [&](const Vec3& x) { return fund_K(x - src, Cplx(1.0), +1); });
            if (first == 0.0) first = n * n;
            CHECK(n * n < 1.5 * first);
            CHECK(n * n > first / 1.5);
        }
    }
}

TEST_CASE("reflection node pairing") {
    const SurfaceMesh m = icosphere(1.0, 2);
    const std::vector<std::size_t> sigma = m.reflection_node_map();
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(norm(m.nodes[sigma[i]] - reflect_z(m.nodes[i])) < 1e-12);
        CHECK(sigma[sigma[i]] == i);
    }

    SUBCASE("asymmetric geometry is rejected") {
        SurfaceMesh shifted = icosphere(1.0, 1, {0.0, 0.0, 0.4});
        CHECK_THROWS_AS(shifted.reflection_node_map(), DomainNotReflectionSymmetric);
    }
}

TEST_CASE("winding number classifies points") {
    const SurfaceMesh m = icosphere(1.0, 2);
    CHECK(m.winding_number({0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.winding_number({0.5, 0.3, -0.4}) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(m.winding_number({2, 0, 0}) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(m.contains({0.9, 0, 0}));
    CHECK_FALSE(m.contains({1.05, 0, 0}));
}

TEST_CASE("mesh text format round trip") {
    const SurfaceMesh m = icosphere(1.0, 1);
    std::stringstream buf;
    write_mesh(buf, m);

    // Header is "vcount fcount".
    std::size_t nv = 0, nf = 0;
    std::stringstream header(buf.str());
    header >> nv >> nf;
    CHECK(nv == m.vertices.size());
    CHECK(nf == m.faces.size());

    const SurfaceMesh r = read_mesh(buf);
    REQUIRE(r.size() == m.size());
    REQUIRE(r.vertices.size() == m.vertices.size());
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        CHECK(norm(r.vertices[i] - m.vertices[i]) == 0.0);
    }
    // Imported meshes carry flat normals; for a sphere they agree with the
    // radial ones to O(h^2).
    for (std::size_t i = 0; i < m.size(); ++i) {
        CHECK(norm(r.normals[i] - m.normals[i]) < 0.05);
        CHECK(r.weights[i] == m.weights[i]);
    }

    SUBCASE("bad input is rejected") {
        std::stringstream bad1("not a header");
        CHECK_THROWS_AS(read_mesh(bad1), ConfigInvalid);
        std::stringstream bad2("3 1\n0 0 0\n1 0 0\n0 1 0\n0 1 5\n");
        CHECK_THROWS_AS(read_mesh(bad2), ConfigInvalid);
    }
}

TEST_CASE("shell grid volumes") {
    SUBCASE("unit ball at spacing 0.05") {
        const BallGrid g = shell_grid(1.0, std::nullopt, 0.05);
        CHECK(g.total_volume() == doctest::Approx(4.0 * kPi / 3.0).epsilon(0.01));
    }

    SUBCASE("empty exclusion means the full ball") {
        const BallGrid a = shell_grid(0.8, std::nullopt, 0.1);
        CHECK(a.total_volume() == doctest::Approx(4.0 * kPi / 3.0 * 0.512).epsilon(0.03));
    }

    SUBCASE("spherical shell") {
        const SurfaceMesh inner = icosphere(1.0, 2);
        const BallGrid g = shell_grid(2.0, inner, 0.05);
        const double expected = 4.0 * kPi / 3.0 * (8.0 - 1.0);
        CHECK(g.total_volume() == doctest::Approx(expected).epsilon(0.01));
        for (std::size_t i = 0; i < g.points.size(); i += 503) {
            const double r = norm(g.points[i]);
            CHECK(r <= 2.0);
            CHECK(r >= 0.95);
        }
    }

    SUBCASE("validation") {
        CHECK_THROWS_AS(shell_grid(1.0, std::nullopt, -0.1), ConfigInvalid);
        const SurfaceMesh big = icosphere(2.0, 1);
        CHECK_THROWS_AS(shell_grid(1.0, big, 0.1), ConfigInvalid);
    }
}
