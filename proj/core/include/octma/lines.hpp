#pragma once

#include <optional>

#include "octma/herm2.hpp"

namespace octma {

template <Scalar S>
S scalar_abs(const S& x) {
    return x < S(0) ? -x : x;
}

// An octonionic line in O^2: the graph {(q, a q)} of a slope a, or the
// vertical line {(0, q)} at infinity.
template <Scalar S>
struct OctLine {
    std::optional<Octonion<S>> slope;  // empty = line at infinity

    static OctLine infinity() { return {}; }
    static OctLine with_slope(Octonion<S> a) { return {std::move(a)}; }

    friend bool operator==(const OctLine& l, const OctLine& m) {
        if (l.slope.has_value() != m.slope.has_value()) return false;
        return !l.slope || *l.slope == *m.slope;
    }
};

// The unique line through a nonzero vector.
template <Scalar S>
OctLine<S> line_spanned(const OctVec2<S>& xi) {
    if (xi.is_zero()) throw ZeroVector();
    if (xi.x1.is_zero()) return OctLine<S>::infinity();
    return OctLine<S>::with_slope(xi.x2 * xi.x1.inv());
}

// Unit vectors span the same line iff their rank-one squares coincide.
// `tol` is for the Float64 backend; exact backends use the default 0.
template <Scalar S>
bool same_line(const OctVec2<S>& xi, const OctVec2<S>& eta, const S& tol = S(0)) {
    if (scalar_abs(xi.norm_sq() - S(1)) > tol || scalar_abs(eta.norm_sq() - S(1)) > tol)
        throw NotUnit();
    const HermMatrix2<S> d = rank_one(xi) - rank_one(eta);
    if (scalar_abs(d.a) > tol || scalar_abs(d.b) > tol) return false;
    for (int p = 0; p < 8; ++p)
        if (scalar_abs(d.q[p]) > tol) return false;
    return true;
}

// Symmetric 16x16 quadratic form on O^2 = R^16 in the fixed coordinate order
// (x1^0..x1^7, x2^0..x2^7).
template <Scalar S>
struct QuadForm16 {
    // m[16*row + col], symmetric.
    std::array<S, 256> m{};

    S& at(int r, int c) { return m[16 * r + c]; }
    const S& at(int r, int c) const { return m[16 * r + c]; }

    // Coordinate index of x_i^p (i in {1,2}).
    static int idx(int i, int p) { return 8 * (i - 1) + p; }

    static std::array<S, 16> coords(const OctVec2<S>& xi) {
        std::array<S, 16> x;
        for (int p = 0; p < 8; ++p) {
            x[p] = xi.x1[p];
            x[8 + p] = xi.x2[p];
        }
        return x;
    }

    S eval(const OctVec2<S>& xi) const {
        const auto x = coords(xi);
        S r = S(0);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) r += x[i] * at(i, j) * x[j];
        return r;
    }

    // Polarized bilinear form x^T B y.
    S eval(const OctVec2<S>& xi, const OctVec2<S>& eta) const {
        const auto x = coords(xi);
        const auto y = coords(eta);
        S r = S(0);
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) r += x[i] * at(i, j) * y[j];
        return r;
    }

    friend QuadForm16 operator+(const QuadForm16& a, const QuadForm16& b) {
        QuadForm16 r;
        for (int i = 0; i < 256; ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend QuadForm16 operator-(const QuadForm16& a, const QuadForm16& b) {
        QuadForm16 r;
        for (int i = 0; i < 256; ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend QuadForm16 operator*(const S& s, const QuadForm16& a) {
        QuadForm16 r;
        for (int i = 0; i < 256; ++i) r.m[i] = s * a.m[i];
        return r;
    }
    friend bool operator==(const QuadForm16& a, const QuadForm16& b) { return a.m == b.m; }
};

// j: the quadratic form xi |-> Re(xi^* A xi) of a Hermitian matrix.
template <Scalar S>
QuadForm16<S> j_map(const HermMatrix2<S>& A) {
    QuadForm16<S> B;
    for (int p = 0; p < 8; ++p) {
        B.at(p, p) = A.a;
        B.at(8 + p, 8 + p) = A.b;
    }
    for (int b = 0; b < 8; ++b) {
        const Octonion<S> qe = A.q * Octonion<S>::unit(b);
        for (int a = 0; a < 8; ++a) {
            B.at(a, 8 + b) = qe[a];
            B.at(8 + b, a) = qe[a];
        }
    }
    return B;
}

// theta: one sixteenth of the octonionic Hessian of the form; the left
// inverse of j.  Diagonal entries are eighth-traces of the diagonal 8-blocks;
// the off-diagonal entry contracts the coupling block between the octonion
// units.
template <Scalar S>
HermMatrix2<S> theta_map(const QuadForm16<S>& B) {
    HermMatrix2<S> A;
    const S eighth = S(1) / S(8);
    for (int p = 0; p < 8; ++p) {
        A.a += B.at(p, p);
        A.b += B.at(8 + p, 8 + p);
    }
    A.a = eighth * A.a;
    A.b = eighth * A.b;
    Octonion<S> q;
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            // e_a * C_ab * conj(e_b), with C_ab the symmetrized coupling entry.
            const S c = (B.at(a, 8 + b) + B.at(8 + b, a)) / S(2);
            if (c == S(0)) continue;
            Octonion<S> t = Octonion<S>::unit(a) * Octonion<S>::unit(b).conj();
            q += c * t;
        }
    A.q = eighth * q;
    return A;
}

// Membership in the image of j: exactly the forms fixed by j o theta.
template <Scalar S>
bool is_in_H16_0(const QuadForm16<S>& B) {
    return j_map(theta_map(B)) == B;
}

// Exact mean of the form over the unit sphere of the line through xi:
// one-eighth of the trace of the restriction of B to the line.  The line
// with slope a has the orthogonal basis (e_p, a e_p), each vector of
// squared norm 1 + |a|^2; the line at infinity has basis (0, e_p).
template <Scalar S>
S line_average(const QuadForm16<S>& B, const OctVec2<S>& xi) {
    if (xi.is_zero()) throw ZeroVector();
    S sum = S(0);
    if (xi.x1.is_zero()) {
        for (int p = 0; p < 8; ++p) {
            const OctVec2<S> v{Octonion<S>{}, Octonion<S>::unit(p)};
            sum += B.eval(v);
        }
        return sum / S(8);
    }
    const Octonion<S> a = xi.x2 * xi.x1.inv();
    for (int p = 0; p < 8; ++p) {
        const Octonion<S> e = Octonion<S>::unit(p);
        const OctVec2<S> v{e, a * e};
        sum += B.eval(v);
    }
    return sum / (S(8) * (S(1) + a.norm_sq()));
}

} // namespace octma
