#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "octma/herm2.hpp"

namespace octma {

// Float64-only spectral operations on HermMatrix2.  The off-diagonal entry
// q = u + v*s (s a unit imaginary octonion) generates a commutative subfield
// isomorphic to C, so the 2x2 eigenproblem reduces to a complex Hermitian one.

using HermMatrix2D = HermMatrix2<double>;
using OctMatrix2D = OctMatrix2<double>;

struct DiagResult {
    HermMatrix2D D;    // diagonal, eigenvalues descending
    OctMatrix2D g;     // unitary with entries in span{1, s}; D = herm((g A) g^*)
    bool swapped;      // true when the plain-diagonal case needed a sort
};

namespace detail {

// Octonion from a complex number under i -> s.
inline Octonion<double> embed(const std::complex<double>& z, const Octonion<double>& s) {
    Octonion<double> r = z.imag() * s;
    r[0] += z.real();
    return r;
}

// Hermitian part of (g X) g^*, with products bracketed as written.
inline HermMatrix2D conj_apply(const OctMatrix2D& g, const HermMatrix2D& X) {
    const OctMatrix2D M = (g * X.full()) * g.conj_transpose();
    return {M.m00.re(), M.m11.re(), 0.5 * (M.m01 + M.m10.conj())};
}

} // namespace detail

inline DiagResult diagonalize(const HermMatrix2D& A) {
    const Octonion<double> im = A.q.im();
    const double v = std::sqrt(im.norm_sq());

    if (v == 0.0 && A.q.re() == 0.0) {
        // Already diagonal: keep g = I, record the sort as a flag.
        const bool sw = A.a < A.b;
        DiagResult r;
        r.D = {std::max(A.a, A.b), std::min(A.a, A.b), Octonion<double>()};
        r.g = HermMatrix2D::identity().full();
        r.swapped = sw;
        return r;
    }

    // s spans the imaginary direction of q; for real q any unit works.
    const Octonion<double> s = v > 0 ? im / v : Octonion<double>::unit(1);
    const std::complex<double> z(A.q.re(), v);

    const auto [l1, l2] = spectrum(A);
    // Eigenvector for l1 of [[a, z],[conj(z), b]]: pick the better-conditioned
    // of the two column formulas.
    std::complex<double> a1, a2;
    if (std::abs(l1 - A.b) > std::abs(l1 - A.a)) {
        a1 = z;
        a2 = l1 - A.a;
    } else {
        a1 = l1 - A.b;
        a2 = std::conj(z);
    }
    const double n = std::sqrt(std::norm(a1) + std::norm(a2));
    a1 /= n;
    a2 /= n;
    // U = [v1 v2] unitary; g = U^* so that herm((g A) g^*) = diag(l1, l2).
    DiagResult r;
    r.g = {detail::embed(std::conj(a1), s), detail::embed(std::conj(a2), s),
           detail::embed(-a2, s), detail::embed(a1, s)};
    r.D = {l1, l2, Octonion<double>()};
    r.swapped = false;
    return r;
}

// A primitive move of the simultaneous reduction: either a unitary
// conjugation X -> herm((g X) g^*) or a real scaling diag(r, 1/r).
struct ReduceMove {
    enum class Kind { Conjugate, Scale } kind;
    OctMatrix2D g;  // Conjugate only
    double r = 1.0; // Scale only

    HermMatrix2D apply(const HermMatrix2D& X) const {
        if (kind == Kind::Conjugate) return detail::conj_apply(g, X);
        return {r * r * X.a, X.b / (r * r), X.q};
    }
};

struct ReduceResult {
    double c;                       // A ends up as c * I
    HermMatrix2D D;                 // B ends up diagonal
    std::vector<ReduceMove> moves;  // the recorded transform
};

inline HermMatrix2D apply_moves(const std::vector<ReduceMove>& moves, HermMatrix2D X) {
    for (const auto& mv : moves) X = mv.apply(X);
    return X;
}

// Reduce a positive definite A to a multiple of the identity and B to a
// diagonal matrix by a recorded sequence of primitive moves.
inline ReduceResult simultaneous_reduce(const HermMatrix2D& A, const HermMatrix2D& B) {
    if (!A.is_positive_definite()) throw NotPositiveDefinite();
    ReduceResult out;

    const DiagResult dA = diagonalize(A);
    out.moves.push_back({ReduceMove::Kind::Conjugate, dA.g, 1.0});

    const double l1 = dA.D.a, l2 = dA.D.b;
    const double r = std::pow(l2 / l1, 0.25);
    out.moves.push_back({ReduceMove::Kind::Scale, OctMatrix2D{}, r});
    out.c = std::sqrt(l1 * l2);

    const HermMatrix2D B2 = apply_moves(out.moves, B);
    const DiagResult dB = diagonalize(B2);
    out.moves.push_back({ReduceMove::Kind::Conjugate, dB.g, 1.0});
    out.D = dB.D;
    return out;
}

} // namespace octma
