#include "qdirac/surface.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {

constexpr double kPi = 3.14159265358979323846;

void finalize(SurfaceMesh& mesh) {
    const std::size_t nf = mesh.faces.size();
    mesh.nodes.resize(nf);
    mesh.weights.resize(nf);
    if (mesh.normals.size() != nf) mesh.normals.resize(nf);

    Vec3 vc{};
    for (const Vec3& v : mesh.vertices) vc += v;
    mesh.centroid = vc / static_cast<double>(mesh.vertices.size());

    mesh.enclosing_radius = 0.0;
    for (const Vec3& v : mesh.vertices) {
        mesh.enclosing_radius = std::max(mesh.enclosing_radius, norm(v - mesh.centroid));
    }

    double edge_sum = 0.0;
    for (std::size_t f = 0; f < nf; ++f) {
        const Vec3& a = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][0])];
        const Vec3& b = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][1])];
        const Vec3& c = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][2])];
        mesh.nodes[f] = (a + b + c) / 3.0;
        mesh.weights[f] = 0.5 * norm(cross(b - a, c - a));
        edge_sum += norm(b - a) + norm(c - b) + norm(a - c);
    }
    mesh.typical_edge = nf > 0 ? edge_sum / (3.0 * static_cast<double>(nf)) : 0.0;
}

} // namespace

double SurfaceMesh::total_area() const {
    double a = 0.0;
    for (double w : weights) a += w;
    return a;
}

Vec3 SurfaceMesh::vector_area() const {
    Vec3 s{};
    for (std::size_t i = 0; i < size(); ++i) s += weights[i] * normals[i];
    return s;
}

double SurfaceMesh::distance_to_nodes(const Vec3& x) const {
    double best = std::numeric_limits<double>::infinity();
    for (const Vec3& p : nodes) best = std::min(best, norm(x - p));
    return best;
}

std::vector<std::size_t> SurfaceMesh::reflection_node_map() const {
    const double tol = 1e-9 * std::max(1.0, enclosing_radius);
    std::map<std::tuple<double, double, double>, std::size_t> index;
    for (std::size_t i = 0; i < size(); ++i) {
        index.emplace(std::make_tuple(nodes[i].x, nodes[i].y, nodes[i].z), i);
    }

    std::vector<std::size_t> sigma(size());
    for (std::size_t i = 0; i < size(); ++i) {
        const Vec3 r = reflect_z(nodes[i]);
        auto hit = index.find(std::make_tuple(r.x, r.y, r.z));
        if (hit != index.end()) {
            sigma[i] = hit->second;
            continue;
        }
        // Bit-exact lookup failed (vertex sums rounded differently); fall
        // back to a tolerance scan.
        std::size_t best = size();
        double best_d = tol;
        for (std::size_t j = 0; j < size(); ++j) {
            const double d = norm(nodes[j] - r);
            if (d < best_d) {
                best_d = d;
                best = j;
            }
        }
        if (best == size()) {
            throw DomainNotReflectionSymmetric("mesh nodes are not symmetric under x3 -> -x3");
        }
        sigma[i] = best;
    }
    return sigma;
}

double SurfaceMesh::winding_number(const Vec3& x) const {
    // Van Oosterom-Strackee signed solid angles, summed over faces.
    double total = 0.0;
    for (const auto& f : faces) {
        const Vec3 a = vertices[static_cast<std::size_t>(f[0])] - x;
        const Vec3 b = vertices[static_cast<std::size_t>(f[1])] - x;
        const Vec3 c = vertices[static_cast<std::size_t>(f[2])] - x;
        const double la = norm(a), lb = norm(b), lc = norm(c);
        const double numer = dot(a, cross(b, c));
        const double denom = la * lb * lc + dot(a, b) * lc + dot(b, c) * la + dot(c, a) * lb;
        total += 2.0 * std::atan2(numer, denom);
    }
    return total / (4.0 * kPi);
}

SurfaceMesh icosphere(double radius, int level, const Vec3& center) {
    if (radius <= 0.0) throw ConfigInvalid("icosphere: radius must be positive");
    if (level < 0) throw ConfigInvalid("icosphere: level must be >= 0");

    // Unit icosahedron; vertex order fixed for determinism.
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    const double s = 1.0 / std::sqrt(1.0 + phi * phi);
    std::vector<Vec3> verts = {
        {-s, phi * s, 0},  {s, phi * s, 0},  {-s, -phi * s, 0}, {s, -phi * s, 0},
        {0, -s, phi * s},  {0, s, phi * s},  {0, -s, -phi * s}, {0, s, -phi * s},
        {phi * s, 0, -s},  {phi * s, 0, s},  {-phi * s, 0, -s}, {-phi * s, 0, s},
    };
    std::vector<std::array<int, 3>> faces = {
        {0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9},  {5, 11, 4},
        {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6},  {3, 6, 8},
        {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1},
    };

    for (int l = 0; l < level; ++l) {
        std::map<std::pair<int, int>, int> midpoint;
        auto mid = [&](int i, int j) {
            const std::pair<int, int> key = std::minmax(i, j);
            auto it = midpoint.find(key);
            if (it != midpoint.end()) return it->second;
            const Vec3 m = normalized(verts[static_cast<std::size_t>(key.first)] +
                                      verts[static_cast<std::size_t>(key.second)]);
            verts.push_back(m);
            const int idx = static_cast<int>(verts.size()) - 1;
            midpoint.emplace(key, idx);
            return idx;
        };

        std::vector<std::array<int, 3>> refined;
        refined.reserve(faces.size() * 4);
        for (const auto& f : faces) {
            const int ab = mid(f[0], f[1]);
            const int bc = mid(f[1], f[2]);
            const int ca = mid(f[2], f[0]);
            refined.push_back({f[0], ab, ca});
            refined.push_back({f[1], bc, ab});
            refined.push_back({f[2], ca, bc});
            refined.push_back({ab, bc, ca});
        }
        faces = std::move(refined);
    }

    SurfaceMesh mesh;
    mesh.vertices.reserve(verts.size());
    for (const Vec3& v : verts) mesh.vertices.push_back(center + radius * v);
    mesh.faces = std::move(faces);

    finalize(mesh);

    // Exact spherical normals at the quadrature nodes.
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        mesh.normals[f] = normalized(mesh.nodes[f] - center);
    }
    return mesh;
}

SurfaceMesh mesh_from_vertices(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces) {
    SurfaceMesh mesh;
    mesh.vertices = std::move(vertices);
    mesh.faces = std::move(faces);
    const int nv = static_cast<int>(mesh.vertices.size());
    for (const auto& f : mesh.faces) {
        for (int k : f) {
            if (k < 0 || k >= nv) throw ConfigInvalid("mesh face references a missing vertex");
        }
    }
    finalize(mesh);
    // Flat face normals from the winding convention.
    for (std::size_t f = 0; f < mesh.faces.size(); ++f) {
        const Vec3& a = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][0])];
        const Vec3& b = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][1])];
        const Vec3& c = mesh.vertices[static_cast<std::size_t>(mesh.faces[f][2])];
        mesh.normals[f] = normalized(cross(b - a, c - a));
    }
    return mesh;
}

void write_mesh(std::ostream& out, const SurfaceMesh& mesh) {
    out.precision(17);
    out << mesh.vertices.size() << ' ' << mesh.faces.size() << '\n';
    for (const Vec3& v : mesh.vertices) out << v.x << ' ' << v.y << ' ' << v.z << '\n';
    for (const auto& f : mesh.faces) out << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

SurfaceMesh read_mesh(std::istream& in) {
    std::size_t nv = 0, nf = 0;
    if (!(in >> nv >> nf)) throw ConfigInvalid("mesh file: bad header");
    std::vector<Vec3> vertices(nv);
    for (auto& v : vertices) {
        if (!(in >> v.x >> v.y >> v.z)) throw ConfigInvalid("mesh file: bad vertex line");
    }
    std::vector<std::array<int, 3>> faces(nf);
    for (auto& f : faces) {
        if (!(in >> f[0] >> f[1] >> f[2])) throw ConfigInvalid("mesh file: bad face line");
    }
    return mesh_from_vertices(std::move(vertices), std::move(faces));
}

void save_mesh(const std::string& path, const SurfaceMesh& mesh) {
    std::ofstream out(path);
    if (!out) throw ConfigInvalid("cannot open mesh file for writing: " + path);
    write_mesh(out, mesh);
}

SurfaceMesh load_mesh(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open mesh file: " + path);
    return read_mesh(in);
}

CQuat surface_integrate(const SurfaceMesh& mesh, const std::function<CQuat(std::size_t)>& integrand) {
    CQuat acc;
    for (std::size_t i = 0; i < mesh.size(); ++i) acc += mesh.weights[i] * integrand(i);
    return acc;
}

double surface_l2_c_norm(const SurfaceMesh& mesh, const std::function<CQuat(const Vec3&)>& f) {
    double acc = 0.0;
    for (std::size_t i = 0; i < mesh.size(); ++i) acc += mesh.weights[i] * modulus_c_sq(f(mesh.nodes[i]));
    return std::sqrt(acc);
}

BallGrid shell_grid(double r_outer, const std::optional<SurfaceMesh>& inner_exclusion,
                    double spacing, const Vec3& center) {
    if (spacing <= 0.0) throw ConfigInvalid("shell_grid: spacing must be positive");
    if (r_outer <= 0.0) throw ConfigInvalid("shell_grid: outer radius must be positive");
    if (inner_exclusion && inner_exclusion->enclosing_radius >= r_outer) {
        throw ConfigInvalid("shell_grid: exclusion must lie strictly inside the outer ball");
    }

    BallGrid grid;
    grid.cell_weight = spacing * spacing * spacing;
    const int n = static_cast<int>(std::ceil(r_outer / spacing)) + 1;
    for (int i = -n; i < n; ++i) {
        for (int j = -n; j < n; ++j) {
            for (int k = -n; k < n; ++k) {
                const Vec3 p = center + Vec3{(i + 0.5) * spacing, (j + 0.5) * spacing, (k + 0.5) * spacing};
                if (norm(p - center) > r_outer) continue;
                if (inner_exclusion && inner_exclusion->contains(p)) continue;
                grid.points.push_back(p);
            }
        }
    }
    return grid;
}

} // namespace qdirac
