#include "qdirac/gamma.hpp"

#include "qdirac/errors.hpp"

namespace qdirac {

namespace {
constexpr Cplx I = kImagUnit;
}

CMatrix4 CMatrix4::identity() {
    CMatrix4 e;
    for (int k = 0; k < 4; ++k) e(k, k) = 1.0;
    return e;
}

CMatrix4 CMatrix4::from_rows(const std::array<Cplx, 16>& entries) {
    CMatrix4 a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) a(r, c) = entries[static_cast<std::size_t>(4 * r + c)];
    return a;
}

CMatrix4 CMatrix4::operator*(const CMatrix4& b) const {
    CMatrix4 out;
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            Cplx acc = 0.0;
            for (int k = 0; k < 4; ++k) acc += (*this)(r, k) * b(k, c);
            out(r, c) = acc;
        }
    }
    return out;
}

CMatrix4 CMatrix4::operator+(const CMatrix4& b) const {
    CMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = (*this)(r, c) + b(r, c);
    return out;
}

CMatrix4 CMatrix4::operator-(const CMatrix4& b) const {
    CMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = (*this)(r, c) - b(r, c);
    return out;
}

CMatrix4 CMatrix4::operator*(Cplx s) const {
    CMatrix4 out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = (*this)(r, c) * s;
    return out;
}

Spinor4 CMatrix4::operator*(const Spinor4& v) const {
    Spinor4 out;
    for (int r = 0; r < 4; ++r) {
        Cplx acc = 0.0;
        for (int c = 0; c < 4; ++c) acc += (*this)(r, c) * v[c];
        out[r] = acc;
    }
    return out;
}

double max_abs_diff(const CMatrix4& a, const CMatrix4& b) {
    double worst = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
    return worst;
}

const CMatrix4& gamma(int k) {
    static const CMatrix4 g0 = CMatrix4::from_rows({1, 0, 0, 0,   //
                                                    0, 1, 0, 0,   //
                                                    0, 0, -1, 0,  //
                                                    0, 0, 0, -1});
    static const CMatrix4 g1 = CMatrix4::from_rows({0, 0, 0, -1,  //
                                                    0, 0, -1, 0,  //
                                                    0, 1, 0, 0,   //
                                                    1, 0, 0, 0});
    static const CMatrix4 g2 = CMatrix4::from_rows({0, 0, 0, I,   //
                                                    0, 0, -I, 0,  //
                                                    0, -I, 0, 0,  //
                                                    I, 0, 0, 0});
    static const CMatrix4 g3 = CMatrix4::from_rows({0, 0, -1, 0,  //
                                                    0, 0, 0, 1,   //
                                                    1, 0, 0, 0,   //
                                                    0, -1, 0, 0});
    static const CMatrix4 g5 = I * (g0 * g1 * g2 * g3);

    switch (k) {
        case 0: return g0;
        case 1: return g1;
        case 2: return g2;
        case 3: return g3;
        case 5: return g5;
        default: throw Error("gamma: index must be one of {0,1,2,3,5}");
    }
}

const CMatrix4& a_matrix() {
    static const CMatrix4 a = CMatrix4::from_rows({0, -1, 1, 0,  //
                                                   I, 0, 0, -I,  //
                                                   -1, 0, 0, -1, //
                                                   0, I, I, 0}) *
                              Cplx(0.5);
    return a;
}

const CMatrix4& a_inv_matrix() {
    static const CMatrix4 ainv = CMatrix4::from_rows({0, -I, -1, 0,  //
                                                      -1, 0, 0, -I,  //
                                                      1, 0, 0, -I,   //
                                                      0, I, -1, 0});
    return ainv;
}

const CMatrix4& gamma123() {
    static const CMatrix4 g = gamma(1) * gamma(2) * gamma(3);
    return g;
}

CQuat apply_A(const Spinor4& phi) {
    const Spinor4 r = a_matrix() * phi;
    return {r[0], r[1], r[2], r[3]};
}

Spinor4 apply_A_inv(const CQuat& rho) {
    return a_inv_matrix() * Spinor4{rho.a0, rho.a1, rho.a2, rho.a3};
}

CMatrix4 x_gamma(const Vec3& x) {
    return gamma(1) * Cplx(x.x) + gamma(2) * Cplx(x.y) + gamma(3) * Cplx(x.z);
}

} // namespace qdirac
