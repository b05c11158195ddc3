#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qdirac/cquat.hpp"

namespace qdirac {

/// Closed triangulated surface with one quadrature node per face: the flat
/// centroid, the outward unit normal there, and the flat-triangle area as
/// weight. Vertices/faces are kept for export and refinement bookkeeping.
/// Normals are outward with respect to the enclosed bounded domain;
/// integration convention is Sum w_i * integrand(i).
struct SurfaceMesh {
    std::vector<Vec3> vertices;
    std::vector<std::array<int, 3>> faces;

    std::vector<Vec3> nodes;    // per-face quadrature points
    std::vector<Vec3> normals;  // unit, outward
    std::vector<double> weights;

    Vec3 centroid{};
    double enclosing_radius = 0.0;
    double typical_edge = 0.0; // mean edge length

    std::size_t size() const { return nodes.size(); }

    // Outward normal as a pure-vector quaternion.
    CQuat normal_cq(std::size_t i) const { return CQuat::from_vec(normals[i]); }

    double total_area() const;
    Vec3 vector_area() const; // Sum w_i * n_i; ~0 for closed surfaces

    // Min distance from x to the quadrature nodes (O(h)-accurate distance to
    // the surface, which is all the near-surface guard needs).
    double distance_to_nodes(const Vec3& x) const;

    // Index map sigma with node[sigma(i)] = reflect_z(node[i]). Throws
    // DomainNotReflectionSymmetric when no such pairing exists.
    std::vector<std::size_t> reflection_node_map() const;

    // Generalized winding number of the closed surface around x: ~1 inside,
    // ~0 outside.
    double winding_number(const Vec3& x) const;
    bool contains(const Vec3& x) const { return winding_number(x) > 0.5; }
};

// Subdivided-icosahedron sphere: level 0 is the plain icosahedron (20
// faces); each level quadruples the face count. Vertices lie on the sphere;
// normals are the exact radial directions at the flat centroids.
// Deterministic: identical inputs give bit-identical meshes.
SurfaceMesh icosphere(double radius, int level, const Vec3& center = {});

// Rebuild the derived quadrature data (nodes, normals from face winding,
// weights, metadata) from vertices/faces. Used by the text-format importer;
// face winding must be outward (counter-clockwise seen from outside).
SurfaceMesh mesh_from_vertices(std::vector<Vec3> vertices, std::vector<std::array<int, 3>> faces);

// Line-oriented text format: "vcount fcount" header, then "x y z" vertex
// lines, then "i j k" 0-based face lines.
void write_mesh(std::ostream& out, const SurfaceMesh& mesh);
SurfaceMesh read_mesh(std::istream& in);
void save_mesh(const std::string& path, const SurfaceMesh& mesh);
SurfaceMesh load_mesh(const std::string& path);

// Sum w_i * integrand(i) with the quaternionic products already formed
// inside the integrand.
CQuat surface_integrate(const SurfaceMesh& mesh, const std::function<CQuat(std::size_t)>& integrand);

// sqrt( Sum w_i |f(node_i)|_c^2 ).
double surface_l2_c_norm(const SurfaceMesh& mesh, const std::function<CQuat(const Vec3&)>& f);

/// Axis-aligned box lattice restricted to a volume region; every retained
/// cell carries the uniform weight spacing^3.
struct BallGrid {
    std::vector<Vec3> points;
    double cell_weight = 0.0;

    double total_volume() const { return cell_weight * static_cast<double>(points.size()); }
};

// Lattice covering the ball |x - center| <= R_outer minus the region
// enclosed by `inner_exclusion` (kept strictly inside). Cell centers sit at
// half-spacing offsets, so no center lies exactly on a sphere through the
// lattice origin.
BallGrid shell_grid(double r_outer, const std::optional<SurfaceMesh>& inner_exclusion,
                    double spacing, const Vec3& center = {});

} // namespace qdirac
