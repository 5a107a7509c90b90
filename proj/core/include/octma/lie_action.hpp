#pragma once

#include <array>
#include <utility>
#include <vector>

#include "octma/herm2.hpp"

namespace octma {

// Dense N x N matrix over an arbitrary scalar, row-major.  Small and simple
// on purpose: exact representation matrices are 16x16 or 10x10.
template <Scalar S, int N>
struct MatN {
    std::array<S, static_cast<std::size_t>(N) * N> m{};

    S& at(int r, int c) { return m[N * r + c]; }
    const S& at(int r, int c) const { return m[N * r + c]; }

    static MatN identity() {
        MatN r;
        for (int i = 0; i < N; ++i) r.at(i, i) = S(1);
        return r;
    }

    MatN transpose() const {
        MatN r;
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    friend MatN operator+(const MatN& a, const MatN& b) {
        MatN r;
        for (std::size_t i = 0; i < a.m.size(); ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    friend MatN operator-(const MatN& a, const MatN& b) {
        MatN r;
        for (std::size_t i = 0; i < a.m.size(); ++i) r.m[i] = a.m[i] - b.m[i];
        return r;
    }
    friend MatN operator*(const S& s, const MatN& a) {
        MatN r;
        for (std::size_t i = 0; i < a.m.size(); ++i) r.m[i] = s * a.m[i];
        return r;
    }
    friend MatN operator*(const MatN& a, const MatN& b) {
        MatN r;
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < N; ++k) {
                const S& aik = a.at(i, k);
                if (aik == S(0)) continue;
                for (int j = 0; j < N; ++j) r.at(i, j) += aik * b.at(k, j);
            }
        return r;
    }
    friend bool operator==(const MatN& a, const MatN& b) { return a.m == b.m; }

    std::array<S, N> apply(const std::array<S, N>& x) const {
        std::array<S, N> y;
        for (int i = 0; i < N; ++i) {
            S t = S(0);
            for (int j = 0; j < N; ++j) t += at(i, j) * x[j];
            y[i] = t;
        }
        return y;
    }
};

template <Scalar S>
using Rep16 = MatN<S, 16>;
template <Scalar S>
using Rep10 = MatN<S, 10>;

template <Scalar S>
void require_traceless(const OctMatrix2<S>& A) {
    if (!(A.m00 + A.m11).is_zero()) throw NotTraceless();
}

// Coordinates of a vector in O^2 in the fixed order (x1^0..x1^7, x2^0..x2^7).
template <Scalar S>
std::array<S, 16> vec_coords(const OctVec2<S>& v) {
    std::array<S, 16> x;
    for (int p = 0; p < 8; ++p) {
        x[p] = v.x1[p];
        x[8 + p] = v.x2[p];
    }
    return x;
}

template <Scalar S>
OctVec2<S> vec_from_coords(const std::array<S, 16>& x) {
    OctVec2<S> v;
    for (int p = 0; p < 8; ++p) {
        v.x1[p] = x[p];
        v.x2[p] = x[8 + p];
    }
    return v;
}

// The 16x16 matrix of xi -> A xi for a traceless generator.
template <Scalar S>
Rep16<S> hat(const OctMatrix2<S>& A) {
    require_traceless(A);
    Rep16<S> M;
    for (int col = 0; col < 16; ++col) {
        OctVec2<S> basis;
        if (col < 8)
            basis.x1 = Octonion<S>::unit(col);
        else
            basis.x2 = Octonion<S>::unit(col - 8);
        const auto y = vec_coords(A.apply(basis));
        for (int row = 0; row < 16; ++row) M.at(row, col) = y[row];
    }
    return M;
}

// Coordinates of a Hermitian matrix in the fixed basis (a, b, q^0..q^7).
template <Scalar S>
std::array<S, 10> herm_coords(const HermMatrix2<S>& X) {
    std::array<S, 10> v;
    v[0] = X.a;
    v[1] = X.b;
    for (int p = 0; p < 8; ++p) v[2 + p] = X.q[p];
    return v;
}

template <Scalar S>
HermMatrix2<S> herm_from_coords(const std::array<S, 10>& v) {
    HermMatrix2<S> X;
    X.a = v[0];
    X.b = v[1];
    for (int p = 0; p < 8; ++p) X.q[p] = v[2 + p];
    return X;
}

// The 10x10 matrix of X -> -A^* X - X A in the fixed Hermitian basis.
template <Scalar S>
Rep10<S> rho_matrix(const OctMatrix2<S>& A) {
    require_traceless(A);
    Rep10<S> M;
    for (int col = 0; col < 10; ++col) {
        std::array<S, 10> basis{};
        basis[col] = S(1);
        const auto y = herm_coords(act_generator(A, herm_from_coords(basis)));
        for (int row = 0; row < 10; ++row) M.at(row, col) = y[row];
    }
    return M;
}

// Duality pairing check: returns (<xi, A eta>, <A^* xi, eta>).
template <Scalar S>
std::pair<S, S> dual_check(const OctMatrix2<S>& A, const OctVec2<S>& xi, const OctVec2<S>& eta) {
    return {inner(xi, A.apply(eta)), inner(A.conj_transpose().apply(xi), eta)};
}

// --- Float64 group-level words ----------------------------------------------

using GeneratorD = OctMatrix2<double>;

// A group element exists only as an evaluated word of exponentials: the pair
// of its 16-dim and 10-dim representation matrices.
struct GroupElem {
    Rep16<double> m16 = Rep16<double>::identity();
    Rep10<double> m10 = Rep10<double>::identity();
};

// Product of exp(t * hat(A)) (and exp(t * rho(A))) over the word, left to
// right.  Exponentials use scaling-and-squaring with a fixed Pade order.
GroupElem exp_word(const std::vector<std::pair<GeneratorD, double>>& word);

// Inverse of the 16-dim part (needed for pullback checks).
Rep16<double> invert16(const Rep16<double>& M);

double det16(const Rep16<double>& M);

} // namespace octma
