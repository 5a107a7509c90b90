#pragma once

#include <array>
#include <utility>

#include "octma/octonion.hpp"

namespace octma {

// A pair of octonions; the module O^2 that 2x2 matrices act on.
template <Scalar S>
struct OctVec2 {
    Octonion<S> x1, x2;

    friend OctVec2 operator+(const OctVec2& a, const OctVec2& b) {
        return {a.x1 + b.x1, a.x2 + b.x2};
    }
    friend OctVec2 operator-(const OctVec2& a, const OctVec2& b) {
        return {a.x1 - b.x1, a.x2 - b.x2};
    }
    friend OctVec2 operator*(const S& s, const OctVec2& v) { return {s * v.x1, s * v.x2}; }

    S norm_sq() const { return x1.norm_sq() + x2.norm_sq(); }
    bool is_zero() const { return x1.is_zero() && x2.is_zero(); }
};

// Real (R^16) inner product on O^2.
template <Scalar S>
S inner(const OctVec2<S>& a, const OctVec2<S>& b) {
    return inner(a.x1, b.x1) + inner(a.x2, b.x2);
}

// General 2x2 matrix with octonion entries.  Used as scratch space for
// identities; the Hermitian type below is the primary citizen.
template <Scalar S>
struct OctMatrix2 {
    Octonion<S> m00, m01, m10, m11;

    friend OctMatrix2 operator+(const OctMatrix2& a, const OctMatrix2& b) {
        return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
    }
    friend OctMatrix2 operator-(const OctMatrix2& a, const OctMatrix2& b) {
        return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
    }
    friend OctMatrix2 operator*(const S& s, const OctMatrix2& a) {
        return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
    }
    // Entrywise matrix product; octonion products are bracketed exactly as
    // written here, which matters in a nonassociative algebra.
    friend OctMatrix2 operator*(const OctMatrix2& a, const OctMatrix2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }

    OctMatrix2 conj_transpose() const {
        return {m00.conj(), m10.conj(), m01.conj(), m11.conj()};
    }

    // Re Tr, the canonical real trace form.
    S re_trace() const { return m00.re() + m11.re(); }

    OctVec2<S> apply(const OctVec2<S>& v) const {
        return {m00 * v.x1 + m01 * v.x2, m10 * v.x1 + m11 * v.x2};
    }

    friend bool operator==(const OctMatrix2& a, const OctMatrix2& b) {
        return a.m00 == b.m00 && a.m01 == b.m01 && a.m10 == b.m10 && a.m11 == b.m11;
    }
};

// Hermitian 2x2 octonionic matrix [[a, q], [conj(q), b]] with a, b real.
template <Scalar S>
struct HermMatrix2 {
    S a{0}, b{0};
    Octonion<S> q;

    static HermMatrix2 identity() { return {S(1), S(1), Octonion<S>()}; }

    friend HermMatrix2 operator+(const HermMatrix2& A, const HermMatrix2& B) {
        return {A.a + B.a, A.b + B.b, A.q + B.q};
    }
    friend HermMatrix2 operator-(const HermMatrix2& A, const HermMatrix2& B) {
        return {A.a - B.a, A.b - B.b, A.q - B.q};
    }
    friend HermMatrix2 operator*(const S& s, const HermMatrix2& A) {
        return {s * A.a, s * A.b, s * A.q};
    }
    friend bool operator==(const HermMatrix2& A, const HermMatrix2& B) {
        return A.a == B.a && A.b == B.b && A.q == B.q;
    }

    OctMatrix2<S> full() const {
        return {Octonion<S>(a), q, q.conj(), Octonion<S>(b)};
    }

    S trace() const { return a + b; }
    S det() const { return a * b - q.norm_sq(); }

    HermMatrix2 adj() const { return {b, a, -q}; }

    HermMatrix2 inverse() const {
        const S d = det();
        if (d == S(0)) throw SingularMatrix();
        return (S(1) / d) * adj();
    }

    // Leading-principal-minor positivity test (both orders agree for
    // Hermitian matrices with real diagonal).
    bool is_positive_definite() const { return a > S(0) && det() > S(0); }

    OctVec2<S> apply(const OctVec2<S>& v) const {
        return {a * v.x1 + q * v.x2, q.conj() * v.x1 + b * v.x2};
    }

    // The quadratic form Re(xi^* A xi); real-valued by hermiticity.
    S quad_form(const OctVec2<S>& xi) const {
        return a * xi.x1.norm_sq() + b * xi.x2.norm_sq() +
               S(2) * inner(q * xi.x2, xi.x1);
    }
};

// Polarization of det: mixed_det(A, A) == det(A), symmetric and bilinear.
template <Scalar S>
S mixed_det(const HermMatrix2<S>& A, const HermMatrix2<S>& B) {
    return (A.a * B.b + B.a * A.b - S(2) * inner(A.q, B.q)) / S(2);
}

// Rank-one Hermitian square xi xi^*.
template <Scalar S>
HermMatrix2<S> rank_one(const OctVec2<S>& xi) {
    return {xi.x1.norm_sq(), xi.x2.norm_sq(), xi.x1 * xi.x2.conj()};
}

// Symmetrized rank-one map t(xi, eta) = (xi eta^* + eta xi^*) / 2.
template <Scalar S>
HermMatrix2<S> t_map(const OctVec2<S>& xi, const OctVec2<S>& eta) {
    return {inner(xi.x1, eta.x1), inner(xi.x2, eta.x2),
            (xi.x1 * eta.x2.conj() + eta.x1 * xi.x2.conj()) / S(2)};
}

// Infinitesimal action of a traceless generator on Hermitian matrices:
// X -> -A^* X - X A.  The result is Hermitian again; it is extracted from the
// full octonionic product.
template <Scalar S>
HermMatrix2<S> act_generator(const OctMatrix2<S>& A, const HermMatrix2<S>& X) {
    if (!(A.m00 + A.m11).is_zero()) throw NotTraceless();
    const OctMatrix2<S> Xf = X.full();
    const OctMatrix2<S> M = S(-1) * (A.conj_transpose() * Xf + Xf * A);
    return {M.m00.re(), M.m11.re(), M.m01};
}

// Eigenvalues (descending) from the characteristic polynomial
// t^2 - tr(A) t + det(A).  Exact scalars throw InexactSqrt when the
// discriminant is not a perfect square.
template <Scalar S>
std::pair<S, S> spectrum(const HermMatrix2<S>& A) {
    const S tr = A.trace();
    const S disc = (A.a - A.b) * (A.a - A.b) + S(4) * A.q.norm_sq();
    const S root = scalar_sqrt(disc);
    return {(tr + root) / S(2), (tr - root) / S(2)};
}

} // namespace octma
