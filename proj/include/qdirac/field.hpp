#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "qdirac/gamma.hpp"

namespace qdirac {

/// Quaternion-valued field on R^3. `singular_points` lists locations the
/// field is not defined at (kernel sources); samplers must avoid them.
struct QuatField {
    std::function<CQuat(const Vec3&)> eval;
    std::vector<Vec3> singular_points;

    CQuat operator()(const Vec3& x) const { return eval(x); }
};

/// C^4-valued field on R^3.
struct SpinorField {
    std::function<Spinor4(const Vec3&)> eval;
    std::vector<Vec3> singular_points;

    Spinor4 operator()(const Vec3& x) const { return eval(x); }
};

inline std::vector<Vec3> reflect_all(const std::vector<Vec3>& pts) {
    std::vector<Vec3> out;
    out.reserve(pts.size());
    for (const Vec3& p : pts) out.push_back(reflect_z(p));
    return out;
}

// Field-level spinor -> quaternion transform: the value map composed with the
// argument reflection x3 -> -x3. Inverse of lift_A_inv.
inline QuatField lift_A(const SpinorField& q) {
    return {[q](const Vec3& x) { return apply_A(q(reflect_z(x))); }, reflect_all(q.singular_points)};
}

inline SpinorField lift_A_inv(const QuatField& f) {
    return {[f](const Vec3& x) { return apply_A_inv(f(reflect_z(x))); }, reflect_all(f.singular_points)};
}

} // namespace qdirac
