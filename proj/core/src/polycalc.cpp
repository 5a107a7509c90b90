#include "octma/polycalc.hpp"

namespace octma {

namespace {

// Derivative of F in block i (1 or 2), coordinate p.
OctPoly block_derivative(const OctPoly& F, int i, int p) {
    return F.derivative(Monomial::var_index(i, p));
}

OctPoly first_order(int i, const OctPoly& F, bool left, bool conj_unit) {
    OctPoly r;
    for (int p = 0; p < 8; ++p) {
        const OctPoly dF = block_derivative(F, i, p);
        if (dF.is_zero()) continue;
        r = r + (left ? unit_mul_left(p, dF, conj_unit) : unit_mul_right(dF, p, conj_unit));
    }
    return r;
}

} // namespace

OctPoly d_bar_left(int i, const OctPoly& F) { return first_order(i, F, true, false); }
OctPoly d_left(int i, const OctPoly& F) { return first_order(i, F, true, true); }
OctPoly d_bar_right(int i, const OctPoly& F) { return first_order(i, F, false, false); }
OctPoly d_right(int i, const OctPoly& F) { return first_order(i, F, false, true); }

HermPolyMatrix hess_oct(const Poly16& f) {
    HermPolyMatrix H;
    H.d1 = laplacian(1, f);
    H.d2 = laplacian(2, f);
    // Off-diagonal (1,2): sum_{a,b} e_a f_{x1^a x2^b} conj(e_b).
    for (int a = 0; a < 8; ++a) {
        const Poly16 fa = f.derivative(1, a);
        if (fa.is_zero()) continue;
        for (int b = 0; b < 8; ++b) {
            Poly16 fab = fa.derivative(2, b);
            if (fab.is_zero()) continue;
            const int sgn = (b > 0 ? -1 : 1) * kMulSgn[a][b];
            if (sgn > 0)
                H.q.c[kMulIdx[a][b]] += fab;
            else
                H.q.c[kMulIdx[a][b]] -= fab;
        }
    }
    return H;
}

Poly16 laplacian(int i, const Poly16& f) {
    Poly16 r;
    for (int p = 0; p < 8; ++p) r += f.derivative(i, p).derivative(i, p);
    return r;
}

Poly16 dir_derivative(const Poly16& f, const std::array<Rational, 16>& v) {
    Poly16 r;
    for (int m = 0; m < 16; ++m) {
        if (v[m] == 0) continue;
        r += v[m] * f.derivative(m);
    }
    return r;
}

Poly16 laplacian_line(const OctVec2<Rational>& zeta, const Poly16& f) {
    if (zeta.norm_sq() != 1) throw NotUnit();
    if (!zeta.x1.im().is_zero() && !zeta.x2.im().is_zero()) throw NoRealCoordinate();

    // Trace form: Re(zeta^* Hess(f) zeta).
    const HermPolyMatrix H = hess_oct(f);
    const OctPoly z1 = OctPoly::constant(zeta.x1);
    const OctPoly z2 = OctPoly::constant(zeta.x2);
    const OctPoly h1 = H.q * z2;            // q * zeta2
    const OctPoly h2 = H.q.conj() * z1;     // conj(q) * zeta1
    // Re(conj(z1) (d1 z1 + q z2)) + Re(conj(z2) (conj(q) z1 + d2 z2))
    Poly16 trace_form;
    {
        OctPoly t1 = z1.conj() * h1 + z2.conj() * h2;
        trace_form = t1.c[0];
        trace_form += zeta.x1.norm_sq() * H.d1 + zeta.x2.norm_sq() * H.d2;
    }

    // Directional form: sum_p second derivative along v_p = (zeta1 e_p, zeta2 e_p).
    Poly16 direct;
    for (int p = 0; p < 8; ++p) {
        const Octonion<Rational> e = Octonion<Rational>::unit(p);
        const OctVec2<Rational> vp{zeta.x1 * e, zeta.x2 * e};
        std::array<Rational, 16> v;
        for (int a = 0; a < 8; ++a) {
            v[a] = vp.x1[a];
            v[8 + a] = vp.x2[a];
        }
        direct += dir_derivative(dir_derivative(f, v), v);
    }

    if (!(trace_form == direct))
        throw Error("line Laplacian: trace form and directional form disagree");
    return direct;
}

std::pair<OctPoly, OctPoly> closed_current_residual(const HermPolyMatrix& T) {
    const OctPoly t11 = OctPoly::from_scalar(T.d1);
    const OctPoly t22 = OctPoly::from_scalar(T.d2);
    OctPoly r1 = d_bar_right(2, T.q) - d_bar_left(1, t22);
    OctPoly r2 = d_bar_right(1, T.q.conj()) - d_bar_left(2, t11);
    return {r1, r2};
}

std::array<Poly16, 16> closed_current_residual_scalar(const HermPolyMatrix& T) {
    // Signed-derivative tables: equation c of the first system reads
    //   dT22/dx1^c = sum_j sgn1[c][j] * d q_j / dx2^{idx1[c][j]},
    // where idx/sgn come from the unique p with (e_j e_p) proportional to e_c.
    // The second system is the mirror with conj(q) expanded explicitly.
    static const auto tables = [] {
        struct Tables {
            std::array<std::array<int, 8>, 8> idx{}, sgn{};
        } t;
        for (int c = 0; c < 8; ++c)
            for (int j = 0; j < 8; ++j)
                for (int p = 0; p < 8; ++p)
                    if (kMulIdx[j][p] == c) {
                        t.idx[c][j] = p;
                        t.sgn[c][j] = kMulSgn[j][p];
                    }
        return t;
    }();

    std::array<Poly16, 16> out;
    for (int c = 0; c < 8; ++c) {
        // First system: component c of T12 dbar2<- minus dbar1-> T22.
        Poly16 rhs;
        for (int j = 0; j < 8; ++j) {
            if (T.q.c[j].is_zero()) continue;
            Poly16 d = T.q.c[j].derivative(2, tables.idx[c][j]);
            if (tables.sgn[c][j] > 0)
                rhs += d;
            else
                rhs -= d;
        }
        out[c] = rhs - T.d2.derivative(1, c);

        // Second system: component c of T21 dbar1<- minus dbar2-> T11,
        // with T21 = conj(T12): component j of conj(q) is q_0 for j=0, -q_j else.
        Poly16 rhs2;
        for (int j = 0; j < 8; ++j) {
            if (T.q.c[j].is_zero()) continue;
            Poly16 d = T.q.c[j].derivative(1, tables.idx[c][j]);
            const int sgn = (j > 0 ? -1 : 1) * tables.sgn[c][j];
            if (sgn > 0)
                rhs2 += d;
            else
                rhs2 -= d;
        }
        out[8 + c] = rhs2 - T.d1.derivative(2, c);
    }
    return out;
}

Poly16 herm_poly_det(const HermPolyMatrix& U) {
    Poly16 n;
    for (int k = 0; k < 8; ++k) n += U.q.c[k] * U.q.c[k];
    return U.d1 * U.d2 - n;
}

Poly16 herm_poly_mixed(const HermPolyMatrix& U, const HermPolyMatrix& V) {
    Poly16 n;
    for (int k = 0; k < 8; ++k) n += U.q.c[k] * V.q.c[k];
    return Rational(1, 2) * (U.d1 * V.d2 + V.d1 * U.d2) - n;
}

Poly16 ma_det(const Poly16& u) { return herm_poly_det(hess_oct(u)); }

Poly16 ma_mixed(const Poly16& u, const Poly16& v) {
    return herm_poly_mixed(hess_oct(u), hess_oct(v));
}

std::array<std::array<Poly16, 16>, 16> divergence_coefficients(const Poly16& u) {
    const HermPolyMatrix U = hess_oct(u);
    std::array<std::array<Poly16, 16>, 16> a;
    for (int r = 0; r < 8; ++r) {
        a[r][r] = U.d2;
        a[8 + r][8 + r] = U.d1;
    }
    // Cross block: -(Re(conj(e_r) u12 e_s)) = -sum_c q_c (e_c e_s)[r].
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s) {
            Poly16 cross;
            for (int c = 0; c < 8; ++c) {
                if (kMulIdx[c][s] != r || U.q.c[c].is_zero()) continue;
                if (kMulSgn[c][s] > 0)
                    cross -= U.q.c[c];
                else
                    cross += U.q.c[c];
            }
            a[r][8 + s] = cross;
            a[8 + s][r] = std::move(cross);
        }
    return a;
}

std::array<Poly16, 16> divergence_defect_of(const std::array<std::array<Poly16, 16>, 16>& a) {
    std::array<Poly16, 16> out;
    for (int n = 0; n < 16; ++n)
        for (int m = 0; m < 16; ++m) out[n] += a[m][n].derivative(m);
    return out;
}

std::array<Poly16, 16> divergence_defect(const Poly16& u) {
    return divergence_defect_of(divergence_coefficients(u));
}

OctPoly psi_laplacian_defect(const OctPoly& Psi, int k, int order) {
    OctPoly lap;
    for (int p = 0; p < 8; ++p) {
        const int m = Monomial::var_index(k, p);
        lap = lap + Psi.derivative(m).derivative(m);
    }
    const OctPoly composed = order == 0 ? d_right(k, d_bar_right(k, Psi))
                                        : d_bar_right(k, d_right(k, Psi));
    return lap - composed;
}

QuadForm16<Rational> quadratic_matrix(const Poly16& f) {
    QuadForm16<Rational> B;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.degree() != 2) throw NotQuadratic();
        int v1 = -1, v2 = -1;
        for (int v = 0; v < 16; ++v) {
            if (mono.e[v] == 2) v1 = v2 = v;
            else if (mono.e[v] == 1) (v1 < 0 ? v1 : v2) = v;
        }
        if (v1 == v2) {
            B.at(v1, v1) = c;
        } else {
            B.at(v1, v2) += c / 2;
            B.at(v2, v1) += c / 2;
        }
    }
    return B;
}

Poly16 quadform_poly(const QuadForm16<Rational>& B) {
    Poly16 f;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j)
            f.add_term(Monomial::var(i) * Monomial::var(j), B.at(i, j));
    return f;
}

std::array<Rational, 10> hessian_equivariance_defect(const Poly16& f,
                                                     const OctMatrix2<Rational>& A) {
    const QuadForm16<Rational> B = quadratic_matrix(f);
    const Rep16<Rational> Ah = hat(A);

    // d/dt|_0 of B pulled back by exp(-t hat A): -(hatA^T B + B hatA).
    QuadForm16<Rational> dB;
    for (int i = 0; i < 16; ++i)
        for (int j = 0; j < 16; ++j) {
            Rational s = 0;
            for (int k = 0; k < 16; ++k)
                s += Ah.at(k, i) * B.at(k, j) + B.at(i, k) * Ah.at(k, j);
            dB.at(i, j) = -s;
        }

    const auto lhs = herm_coords(theta_map(dB));
    const auto rhs = rho_matrix(A).apply(herm_coords(theta_map(B)));
    std::array<Rational, 10> defect;
    for (int i = 0; i < 10; ++i) defect[i] = lhs[i] - rhs[i];
    return defect;
}

} // namespace octma
