#pragma once

#include <array>
#include <utility>

#include "octma/lie_action.hpp"
#include "octma/lines.hpp"
#include "octma/poly.hpp"

namespace octma {

// Hermitian matrix of polynomials: diagonal d1, d2 real, off-diagonal (1,2)
// entry q octonion-valued; the (2,1) entry is conj(q) implicitly.
struct HermPolyMatrix {
    Poly16 d1, d2;
    OctPoly q;

    bool is_zero() const { return d1.is_zero() && d2.is_zero() && q.is_zero(); }

    friend HermPolyMatrix operator+(const HermPolyMatrix& A, const HermPolyMatrix& B) {
        return {A.d1 + B.d1, A.d2 + B.d2, A.q + B.q};
    }
    friend HermPolyMatrix operator-(const HermPolyMatrix& A, const HermPolyMatrix& B) {
        return {A.d1 - B.d1, A.d2 - B.d2, A.q - B.q};
    }
    friend bool operator==(const HermPolyMatrix& A, const HermPolyMatrix& B) {
        return A.d1 == B.d1 && A.d2 == B.d2 && A.q == B.q;
    }

    template <class R>
    HermMatrix2<R> eval(const std::array<R, 16>& x) const {
        return {d1.eval(x), d2.eval(x), q.eval(x)};
    }
};

// The four first-order octonionic operators (i in {1,2}):
//   d_bar_left : F -> sum_p e_p dF/dx_i^p
//   d_left     : F -> sum_p conj(e_p) dF/dx_i^p
//   d_bar_right: F -> sum_p (dF/dx_i^p) e_p
//   d_right    : F -> sum_p (dF/dx_i^p) conj(e_p)
OctPoly d_bar_left(int i, const OctPoly& F);
OctPoly d_left(int i, const OctPoly& F);
OctPoly d_bar_right(int i, const OctPoly& F);
OctPoly d_right(int i, const OctPoly& F);

// Octonionic Hessian of a real polynomial; entry (i,j) is
// sum_{a,b} e_a (d^2 f / dx_i^a dx_j^b) conj(e_b).
HermPolyMatrix hess_oct(const Poly16& f);

// Flat Laplacian in the i-th octonionic coordinate block.
Poly16 laplacian(int i, const Poly16& f);

// Laplacian along the line spanned by a unit vector zeta with at least one
// real coordinate; computed two independent ways (trace form and
// second directional derivatives), which are asserted to agree.
Poly16 laplacian_line(const OctVec2<Rational>& zeta, const Poly16& f);

// Defects of the two first-order closed-current equations
//   (q d_bar_2-left-arrow) - (d_bar_1-right-arrow d2)   and its mirror.
std::pair<OctPoly, OctPoly> closed_current_residual(const HermPolyMatrix& T);

// The same system in scalar form: 16 first-order equations assembled from
// signed-derivative tables (an independent code path from OctPoly products).
std::array<Poly16, 16> closed_current_residual_scalar(const HermPolyMatrix& T);

// det and mixed determinant of octonionic Hessians, as polynomials.
Poly16 ma_det(const Poly16& u);
Poly16 ma_mixed(const Poly16& u, const Poly16& v);
Poly16 herm_poly_det(const HermPolyMatrix& U);
Poly16 herm_poly_mixed(const HermPolyMatrix& U, const HermPolyMatrix& V);

// Coefficient matrix a_mn of the operator
//   D h = det U tr(U^{-1} Hess h) = u22 D1 h + u11 D2 h - 2 sum Re(...) h_mn
// for U = hess_oct(u), as a symmetric 16x16 polynomial matrix.
std::array<std::array<Poly16, 16>, 16> divergence_coefficients(const Poly16& u);

// The 16 defects sum_m d_m a_mn of a coefficient matrix.
std::array<Poly16, 16> divergence_defect_of(const std::array<std::array<Poly16, 16>, 16>& a);

// Divergence defects of the operator built from u; all must be zero.
std::array<Poly16, 16> divergence_defect(const Poly16& u);

// Defect of Delta_k Psi = (Psi d_bar_k-left)(d_k-left) for octonion-valued
// Psi; order selects which of the two right-operator orderings is applied.
OctPoly psi_laplacian_defect(const OctPoly& Psi, int k, int order = 0);

// Quadratic polynomial <-> symmetric matrix conversions.
QuadForm16<Rational> quadratic_matrix(const Poly16& f);  // throws NotQuadratic
Poly16 quadform_poly(const QuadForm16<Rational>& B);

// Infinitesimal equivariance of theta on quadratic forms: the difference
// between d/dt|_0 theta(f o exp(-t hat A)) and rho(A) theta(f), as the 10
// coordinates of a Hermitian matrix.  Must vanish identically.
std::array<Rational, 10> hessian_equivariance_defect(const Poly16& f,
                                                     const OctMatrix2<Rational>& A);

// Directional derivative along a constant vector.
Poly16 dir_derivative(const Poly16& f, const std::array<Rational, 16>& v);

} // namespace octma
