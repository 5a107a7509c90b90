#include "octma/poly.hpp"

namespace octma {

Poly16 operator*(const Poly16& a, const Poly16& b) {
    Poly16 r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

OctPoly unit_mul_left(int p, const OctPoly& F, bool conj_unit) {
    OctPoly r;
    const int us = (conj_unit && p > 0) ? -1 : 1;
    for (int k = 0; k < 8; ++k) {
        if (F.c[k].is_zero()) continue;
        const int sgn = us * kMulSgn[p][k];
        if (sgn > 0)
            r.c[kMulIdx[p][k]] += F.c[k];
        else
            r.c[kMulIdx[p][k]] -= F.c[k];
    }
    return r;
}

OctPoly unit_mul_right(const OctPoly& F, int p, bool conj_unit) {
    OctPoly r;
    const int us = (conj_unit && p > 0) ? -1 : 1;
    for (int k = 0; k < 8; ++k) {
        if (F.c[k].is_zero()) continue;
        const int sgn = us * kMulSgn[k][p];
        if (sgn > 0)
            r.c[kMulIdx[k][p]] += F.c[k];
        else
            r.c[kMulIdx[k][p]] -= F.c[k];
    }
    return r;
}

} // namespace octma
