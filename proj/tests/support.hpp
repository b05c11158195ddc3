#pragma once

// Shared test utilities. The reference quaternion product and the analytic
// polynomial fields are deliberately independent of the library's code
// paths: the product is assembled from the raw basis table, and the field
// derivatives are exact term-by-term differentiation, so either side can
// vouch for the other.

#include <array>
#include <random>
#include <vector>

#include "qdirac/cquat.hpp"
#include "qdirac/field.hpp"

namespace qdirac::testing {

// Basis table: i_a * i_b = sign * i_index.
struct BasisProduct {
    int index;
    double sign;
};

inline BasisProduct basis_product(int a, int b) {
    static const BasisProduct table[4][4] = {
        {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
        {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
        {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
        {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
    };
    return table[a][b];
}

inline Cplx component(const CQuat& q, int k) {
    switch (k) {
        case 0: return q.a0;
        case 1: return q.a1;
        case 2: return q.a2;
        default: return q.a3;
    }
}

inline void add_component(CQuat& q, int k, Cplx v) {
    switch (k) {
        case 0: q.a0 += v; break;
        case 1: q.a1 += v; break;
        case 2: q.a2 += v; break;
        default: q.a3 += v; break;
    }
}

// Reference product by expanding over all 16 basis pairs.
inline CQuat mul_reference(const CQuat& a, const CQuat& b) {
    CQuat out;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            const BasisProduct p = basis_product(i, j);
            add_component(out, p.index, p.sign * component(a, i) * component(b, j));
        }
    }
    return out;
}

struct Rng {
    std::mt19937_64 engine;
    std::uniform_real_distribution<double> unit{-1.0, 1.0};

    explicit Rng(std::uint64_t seed) : engine(seed) {}

    double real() { return unit(engine); }
    Cplx cplx() { return {real(), real()}; }
    CQuat cquat() { return {cplx(), cplx(), cplx(), cplx()}; }
    CQuat pure_vector() { return {0.0, cplx(), cplx(), cplx()}; }
    Vec3 vec3() { return {real(), real(), real()}; }
    Spinor4 spinor() { return {cplx(), cplx(), cplx(), cplx()}; }
};

// Quaternion-valued polynomial field with exact derivatives.
struct Monomial {
    int px, py, pz;
    Cplx coef;
};

struct PolyField {
    std::array<std::vector<Monomial>, 4> comp;

    CQuat operator()(const Vec3& p) const {
        CQuat out;
        for (int k = 0; k < 4; ++k) {
            Cplx acc = 0.0;
            for (const Monomial& m : comp[static_cast<std::size_t>(k)]) {
                acc += m.coef * std::pow(p.x, m.px) * std::pow(p.y, m.py) * std::pow(p.z, m.pz);
            }
            add_component(out, k, acc);
        }
        return out;
    }

    PolyField derivative(int axis) const {
        PolyField d;
        for (int k = 0; k < 4; ++k) {
            for (const Monomial& m : comp[static_cast<std::size_t>(k)]) {
                Monomial dm = m;
                int& p = axis == 0 ? dm.px : (axis == 1 ? dm.py : dm.pz);
                if (p == 0) continue;
                dm.coef *= static_cast<double>(p);
                --p;
                d.comp[static_cast<std::size_t>(k)].push_back(dm);
            }
        }
        return d;
    }

    QuatField as_field() const {
        PolyField copy = *this;
        return {[copy](const Vec3& p) { return copy(p); }, {}};
    }
};

// Random polynomial with all monomials of total degree <= deg.
inline PolyField random_poly_field(Rng& rng, int deg) {
    PolyField f;
    for (int k = 0; k < 4; ++k) {
        for (int px = 0; px <= deg; ++px) {
            for (int py = 0; py + px <= deg; ++py) {
                for (int pz = 0; pz + py + px <= deg; ++pz) {
                    f.comp[static_cast<std::size_t>(k)].push_back({px, py, pz, rng.cplx()});
                }
            }
        }
    }
    return f;
}

// Exact left Moisil-Theodoresco derivative Sum ik dk f of a polynomial
// field, assembled with the reference product.
inline CQuat poly_D(const PolyField& f, const Vec3& p) {
    static const CQuat basis[3] = {CQuat::i1(), CQuat::i2(), CQuat::i3()};
    CQuat out;
    for (int axis = 0; axis < 3; ++axis) {
        out += mul_reference(basis[axis], f.derivative(axis)(p));
    }
    return out;
}

inline CQuat poly_laplacian(const PolyField& f, const Vec3& p) {
    CQuat out;
    for (int axis = 0; axis < 3; ++axis) {
        out += f.derivative(axis).derivative(axis)(p);
    }
    return out;
}

} // namespace qdirac::testing
