#include "octma/suites.hpp"

#include <cmath>
#include <numbers>

#include "octma/errors.hpp"
#include "octma/herm2_numeric.hpp"
#include "octma/ma_solver.hpp"
#include "octma/polycalc.hpp"
#include "octma/syzygy.hpp"

namespace octma {

void SuiteResult::check(bool cond, const std::string& what) {
    if (cond) {
        ++passed;
    } else {
        ++failed;
        if (failures.size() < 5) failures.push_back(what);
    }
}

// --- random generators --------------------------------------------------------

OctonionQ random_octonion(Rng& rng) {
    OctonionQ o;
    for (int k = 0; k < 8; ++k) o[k] = rng.rational();
    return o;
}

OctVec2<Rational> random_vec2(Rng& rng) {
    while (true) {
        OctVec2<Rational> v{random_octonion(rng), random_octonion(rng)};
        if (!v.x1.is_zero() || !v.x2.is_zero()) return v;
    }
}

HermMatrix2<Rational> random_herm(Rng& rng) {
    return {rng.rational(), rng.rational(), random_octonion(rng)};
}

HermMatrix2<Rational> random_pd_herm(Rng& rng) {
    const OctonionQ q = random_octonion(rng);
    const Rational s = rng.rational(), t = rng.rational();
    const Rational a = Rational(1, 4) + s * s;  // > 0
    const Rational b = (q.norm_sq() + Rational(1, 4) + t * t) / a;
    return {a, b, q};
}

HermMatrix2<double> random_herm_d(Rng& rng) {
    OctonionD q;
    for (int k = 0; k < 8; ++k) q[k] = rng.uniform(-1.0, 1.0);
    return {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), q};
}

HermMatrix2<double> random_pd_herm_d(Rng& rng) {
    OctonionD q;
    for (int k = 0; k < 8; ++k) q[k] = rng.uniform(-1.0, 1.0);
    const double a = rng.uniform(0.5, 3.0);
    const double b = (q.norm_sq() + rng.uniform(0.25, 2.0)) / a;
    return {a, b, q};
}

OctMatrix2<Rational> random_traceless(Rng& rng) {
    const OctonionQ d = random_octonion(rng);
    return {d, random_octonion(rng), random_octonion(rng), Rational(-1) * d};
}

GeneratorD random_traceless_d(Rng& rng) {
    OctonionD d, u, l;
    for (int k = 0; k < 8; ++k) {
        d[k] = rng.uniform(-0.5, 0.5);
        u[k] = rng.uniform(-0.5, 0.5);
        l[k] = rng.uniform(-0.5, 0.5);
    }
    return {d, u, l, -1.0 * d};
}

Poly16 random_poly(Rng& rng, int max_deg, int max_terms) {
    Poly16 p;
    const long nterms = 1 + static_cast<long>(rng.below(static_cast<std::uint64_t>(max_terms)));
    for (long t = 0; t < nterms; ++t) {
        Monomial m;
        const int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg + 1)));
        for (int d = 0; d < deg; ++d) {
            Monomial f;
            f.e[rng.below(16)] += 1;
            m = m * f;
        }
        p.add_term(m, rng.rational(100, 100));
    }
    return p;
}

TrigPoly random_trig(Rng& rng, const std::vector<int>& coords, int max_freq, double amplitude) {
    TrigPoly p;
    std::size_t boxes = 1;
    for (std::size_t i = 0; i < coords.size(); ++i) boxes *= static_cast<std::size_t>(2 * max_freq + 1);
    for (std::size_t n = 0; n < boxes; ++n) {
        Freq k{};
        std::size_t rem = n;
        for (int c : coords) {
            k[static_cast<std::size_t>(c)] =
                static_cast<int>(rem % static_cast<std::size_t>(2 * max_freq + 1)) - max_freq;
            rem /= static_cast<std::size_t>(2 * max_freq + 1);
        }
        int first = 0;
        for (int v = 0; v < 16 && first == 0; ++v) first = k[v];
        if (first < 0) continue;
        p.add_cos(k, amplitude * rng.uniform(-1.0, 1.0));
        if (first > 0) p.add_sin(k, amplitude * rng.uniform(-1.0, 1.0));
    }
    return p;
}

// --- small local helpers --------------------------------------------------------

namespace {

template <Scalar S>
OctMatrix2<S> outer(const OctVec2<S>& u, const OctVec2<S>& v) {
    return {u.x1 * v.x1.conj(), u.x1 * v.x2.conj(), u.x2 * v.x1.conj(), u.x2 * v.x2.conj()};
}

// re Tr(A^{-1} H) for PD A via the adjugate: (b h11 + a h22 - 2<q_A, q_H>) / det A.
double tr_inv_times(const HermMatrix2<double>& A, const HermMatrix2<double>& H) {
    return (A.b * H.a + A.a * H.b - 2.0 * inner(A.q, H.q)) / A.det();
}

std::array<double, 16> random_point(Rng& rng, double scale) {
    std::array<double, 16> x;
    for (int v = 0; v < 16; ++v) x[v] = rng.uniform(-scale, scale);
    return x;
}

// Evaluates a Hermitian polynomial matrix at a double point.
HermMatrix2<double> eval_herm_poly(const HermPolyMatrix& H, const std::array<double, 16>& x) {
    return H.eval(x);
}

} // namespace

// --- octonion suites -----------------------------------------------------------

namespace {

SuiteResult suite_norm_mult(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "octonion.norm_multiplicativity");
    for (long n = 0; n < count; ++n) {
        const OctonionQ a = random_octonion(rng), b = random_octonion(rng);
        r.check((a * b).norm_sq() == a.norm_sq() * b.norm_sq(),
                "norm_sq(ab) != norm_sq(a) norm_sq(b)");
    }
    return r;
}

SuiteResult suite_anti_involution(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "octonion.anti_involution");
    for (long n = 0; n < count; ++n) {
        const OctonionQ a = random_octonion(rng), b = random_octonion(rng);
        r.check(a.conj().conj() == a, "conj is not an involution");
        r.check((a + b).conj() == a.conj() + b.conj(), "conj is not additive");
        r.check((a * b).conj() == b.conj() * a.conj(), "conj(ab) != conj(b) conj(a)");
    }
    return r;
}

SuiteResult suite_product_identities(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "octonion.product_identities");
    for (long n = 0; n < count; ++n) {
        const OctonionQ a = random_octonion(rng), b = random_octonion(rng),
                        c = random_octonion(rng);
        r.check(((a * b) * c).re() == (a * (b * c)).re(), "(i) re((ab)c) != re(a(bc))");
        r.check(a * (b * c) + b.conj() * (a.conj() * c) == (a * b + b.conj() * a.conj()) * c,
                "(ii) left-multiplication identity fails");
        r.check((c * a) * b + (c * b.conj()) * a.conj() == c * (a * b + b.conj() * a.conj()),
                "(iii) right-multiplication identity fails");
        r.check(((a.conj() * b) * (c * a)).re() == a.norm_sq() * (b * c).re(),
                "(v) re((conj(a)b)(ca)) != |a|^2 re(bc)");
    }
    return r;
}

SuiteResult suite_moufang(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "octonion.moufang");
    for (long n = 0; n < count; ++n) {
        const OctonionQ x = random_octonion(rng), y = random_octonion(rng),
                        z = random_octonion(rng), z1 = random_octonion(rng),
                        z2 = random_octonion(rng);
        const OctonionQ m = (z * x) * (y * z);
        r.check(m == z * ((x * y) * z) && m == (z * (x * y)) * z, "Moufang identity fails");
        const OctonionQ p = (z1 * x) * (y * z2) + (z2 * x) * (y * z1);
        r.check(p == z1 * ((x * y) * z2) + z2 * ((x * y) * z1) &&
                    p == (z1 * (x * y)) * z2 + (z2 * (x * y)) * z1,
                "polarized Moufang fails");
    }
    return r;
}

SuiteResult suite_associator(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "octonion.associator_alternating");
    for (long n = 0; n < count; ++n) {
        const OctonionQ a = random_octonion(rng), b = random_octonion(rng),
                        c = random_octonion(rng), d = random_octonion(rng);
        const OctonionQ s = associator(a, b, c);
        r.check(s == Rational(-1) * associator(b, a, c) &&
                    s == Rational(-1) * associator(a, c, b),
                "associator is not alternating");
        r.check(associator(a + d, b, c) == s + associator(d, b, c),
                "associator is not trilinear");
        r.check(associator(OctonionQ(rng.rational()), b, c).is_zero() &&
                    associator(a, OctonionQ(rng.rational()), c).is_zero() &&
                    associator(a, b, OctonionQ(rng.rational())).is_zero(),
                "associator with a real argument is nonzero");
    }
    return r;
}

SuiteResult suite_cayley_dickson(std::uint64_t seed, long) {
    (void)seed;
    SuiteResult r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const OctonionQ a = OctonionQ::unit(i), b = OctonionQ::unit(j);
            r.check(cayley_dickson_mul(a, b) == a * b,
                    "Cayley-Dickson product disagrees with the table at unit pair");
            const auto [x1, y1] = cayley_dickson_split(a);
            r.check(cayley_dickson_join(x1, y1) == a, "split/join round trip fails");
        }
    return r;
}

SuiteResult suite_fano(std::uint64_t, long) {
    SuiteResult r;
    for (const auto& line : kFanoLines) {
        const int a = line[0], b = line[1], c = line[2];
        r.check(kMulIdx[a][b] == c && kMulIdx[b][c] == a && kMulIdx[c][a] == b,
                "Fano line is not closed under the multiplication table");
        r.check(kMulSgn[a][b] == -kMulSgn[b][a], "Fano line orientation is not antisymmetric");
    }
    return r;
}

// --- herm2 suites ----------------------------------------------------------------

SuiteResult suite_mixed_det_trace(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "herm2.mixed_det_trace");
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<Rational> A = random_herm(rng), B = random_herm(rng);
        r.check(mixed_det(A, A) == A.det(), "mixed_det(A,A) != det A");
        const Rational tr = (A.adj().full() * B.full()).re_trace();
        r.check(mixed_det(A, B) == tr / 2, "mixed_det != (1/2) re Tr(adj(A) B)");
        r.check(A.adj() + B.adj() == (A + B).adj(), "adj is not additive");
        const OctMatrix2<Rational> prod = A.adj().full() * A.full();
        r.check(prod.m00 == OctonionQ(A.det()) && prod.m11 == OctonionQ(A.det()) &&
                    prod.m01.is_zero() && prod.m10.is_zero(),
                "adj(A) A != det(A) I");
    }
    return r;
}

SuiteResult suite_positivity(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "herm2.positivity");
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<Rational> A = random_pd_herm(rng), B = random_pd_herm(rng);
        r.check(mixed_det(A, B) > 0, "mixed_det of PD pair is not positive");
        r.check(A.is_positive_definite(), "PD generator produced a non-PD matrix");
        const OctVec2<Rational> xi = random_vec2(rng);
        r.check(A.quad_form(xi) > 0, "re(xi* A xi) <= 0 for PD A and nonzero xi");
        // Aleksandrov-type inequality (numeric remark, exact here on rationals).
        r.check(mixed_det(A, B) * mixed_det(A, B) >= A.det() * B.det(),
                "mixed_det(A,B)^2 < det A det B for PD pair");
        const HermMatrix2<Rational> C = random_herm(rng);
        r.check(C.is_positive_definite() == (C.a > 0 && C.det() > 0),
                "Sylvester test disagrees with definition");
    }
    return r;
}

SuiteResult suite_spectrum_diag(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "herm2.spectrum_diagonalize");
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<double> A = random_herm_d(rng);
        const auto [l1, l2] = spectrum(A);
        const DiagResult d = diagonalize(A);
        const auto [m1, m2] = spectrum(d.D);
        const double scale = std::max({1.0, std::abs(l1), std::abs(l2)});
        r.check(std::abs(l1 - m1) / scale < 1e-10 && std::abs(l2 - m2) / scale < 1e-10,
                "spectrum changed under diagonalization");
        // The recorded transform reproduces the diagonal matrix.
        const HermMatrix2<double> back = detail::conj_apply(d.g, A);
        r.check(std::abs(back.a - d.D.a) < 1e-9 && std::abs(back.b - d.D.b) < 1e-9 &&
                    back.q.norm_sq() < 1e-18,
                "diagonalize transform does not reproduce D");

        const HermMatrix2<double> P = random_pd_herm_d(rng), Q = random_herm_d(rng);
        const ReduceResult red = simultaneous_reduce(P, Q);
        const HermMatrix2<double> P2 = apply_moves(red.moves, P);
        const HermMatrix2<double> Q2 = apply_moves(red.moves, Q);
        r.check(std::abs(P2.a - red.c) < 1e-8 && std::abs(P2.b - red.c) < 1e-8 &&
                    P2.q.norm_sq() < 1e-16 && Q2.q.norm_sq() < 1e-16,
                "simultaneous_reduce does not reach (cI, diagonal)");
    }
    return r;
}

SuiteResult suite_trace_inequalities(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "herm2.trace_inequalities");
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<double> A = random_pd_herm_d(rng), B = random_pd_herm_d(rng);
        const HermMatrix2<double> AmB = A - B;
        const double lhs = tr_inv_times(A, AmB);
        const double rhs = (2.0 / std::sqrt(A.det())) * (std::sqrt(A.det()) - std::sqrt(B.det()));
        r.check(lhs <= rhs + 1e-9, "tr(A^{-1}(A-B)) bound fails");

        const HermMatrix2<double> H = random_herm_d(rng);
        const OctMatrix2<double> AinvH = A.inverse().full() * H.full();
        r.check((AinvH * AinvH).re_trace() >= -1e-9, "tr(A^{-1}B A^{-1}B) < 0");
    }
    return r;
}

SuiteResult suite_logdet_curve(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "herm2.logdet_curve");
    const double h = 1e-6;
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<double> X = random_pd_herm_d(rng), Y = random_herm_d(rng);
        auto U = [&](double t) { return X + t * Y; };
        if (!U(h).is_positive_definite() || !U(-h).is_positive_definite()) {
            r.check(true, "");
            continue;
        }
        const double fd = (std::log(U(h).det()) - std::log(U(-h).det())) / (2 * h);
        r.check(std::abs(fd - tr_inv_times(X, Y)) < 1e-6,
                "d/dt log det U != tr(U^{-1} U')");
        // (U^{-1})' = -U^{-1} U' U^{-1}, componentwise finite differences.
        const HermMatrix2<double> fdinv =
            (1.0 / (2 * h)) * (U(h).inverse() - U(-h).inverse());
        const OctMatrix2<double> an =
            -1.0 * ((X.inverse().full() * Y.full()) * X.inverse().full());
        r.check(std::abs(fdinv.a - an.m00.re()) < 1e-5 && std::abs(fdinv.b - an.m11.re()) < 1e-5 &&
                    (fdinv.q - an.m01).norm_sq() < 1e-10,
                "(U^{-1})' != -U^{-1} U' U^{-1}");
    }
    return r;
}

// --- lines suites ----------------------------------------------------------------

SuiteResult suite_theta_j(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lines.theta_j_identity");
    for (long n = 0; n < count; ++n) {
        const HermMatrix2<Rational> A = random_herm(rng);
        r.check(theta_map(j_map(A)) == A, "theta(j(A)) != A");
        QuadForm16<Rational> B;
        for (int i = 0; i < 16; ++i)
            for (int j = i; j < 16; ++j) B.at(i, j) = B.at(j, i) = rng.rational();
        const QuadForm16<Rational> P = j_map(theta_map(B));
        r.check(j_map(theta_map(P)) == P, "j(theta(.)) is not idempotent");
        r.check(is_in_H16_0(P), "projection image is not a fixed point");
    }
    return r;
}

SuiteResult suite_averaging(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lines.averaging");
    for (long n = 0; n < count; ++n) {
        QuadForm16<Rational> B;
        for (int i = 0; i < 16; ++i)
            for (int j = i; j < 16; ++j) B.at(i, j) = B.at(j, i) = rng.rational();
        const OctVec2<Rational> xi = random_vec2(rng);
        const Rational nsq = xi.x1.norm_sq() + xi.x2.norm_sq();
        r.check(j_map(theta_map(B)).eval(xi) == line_average(B, xi) * nsq,
                "averaging identity fails");
    }
    return r;
}

SuiteResult suite_same_line(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lines.same_line");
    auto normalize = [](OctVec2<double> v) {
        const double n = std::sqrt(v.x1.norm_sq() + v.x2.norm_sq());
        return (1.0 / n) * v;
    };
    for (long n = 0; n < count; ++n) {
        // Two points on the graph line of a common slope a.
        OctonionD a, q1, q2;
        for (int k = 0; k < 8; ++k) {
            a[k] = rng.uniform(-1.0, 1.0);
            q1[k] = rng.uniform(-1.0, 1.0);
            q2[k] = rng.uniform(-1.0, 1.0);
        }
        const OctVec2<double> xi = normalize(OctVec2<double>{q1, a * q1});
        const OctVec2<double> eta = normalize(OctVec2<double>{q2, a * q2});

        r.check(same_line(xi, xi, 1e-9), "same_line is not reflexive");
        r.check(same_line(xi, eta, 1e-9) && same_line(eta, xi, 1e-9),
                "two points of one graph line are not recognized as collinear");
        // Real first coordinate: right multiplication by a unit stays on the line.
        OctonionD u;
        for (int k = 0; k < 8; ++k) u[k] = rng.uniform(-1.0, 1.0);
        u = (1.0 / std::sqrt(u.norm_sq())) * u;
        const OctVec2<double> base = normalize(OctVec2<double>{OctonionD(1.0), a});
        const OctVec2<double> rot = normalize(OctVec2<double>{base.x1 * u, base.x2 * u});
        r.check(same_line(base, rot, 1e-9),
                "right unit multiple of a real-first-coordinate vector left the line");
        OctVec2<double> other;
        for (int k = 0; k < 8; ++k) {
            other.x1[k] = rng.uniform(-1.0, 1.0);
            other.x2[k] = rng.uniform(-1.0, 1.0);
        }
        other = normalize(other);
        if (same_line(xi, other, 1e-9))
            r.check(same_line(eta, other, 1e-9), "same_line is not transitive");
        else
            r.check(true, "");
    }
    return r;
}

SuiteResult suite_jjj(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lines.jjj_equivariance");
    for (long n = 0; n < count; ++n) {
        const OctMatrix2<Rational> A = random_traceless(rng);
        const HermMatrix2<Rational> X = random_herm(rng);
        const OctVec2<Rational> xi = random_vec2(rng);
        const Rational lhs = inner((X.full() * A).apply(xi), xi);
        const Rational rhs = inner(X.full().apply(A.apply(xi)), xi);
        r.check(lhs == rhs, "re(xi*(XA)xi) != re(xi* X(A xi))");
    }
    return r;
}

// --- lie_action suites -------------------------------------------------------------

SuiteResult suite_t_map_equivariance(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lie.t_map_equivariance");
    for (long n = 0; n < count; ++n) {
        const OctMatrix2<Rational> A = random_traceless(rng);
        const OctVec2<Rational> xi = random_vec2(rng);
        const OctMatrix2<Rational> As = A.conj_transpose();
        const OctVec2<Rational> Axi = As.apply(xi);
        const OctMatrix2<Rational> lhs = outer(Axi, xi) + outer(xi, Axi);
        const OctMatrix2<Rational> xixis = outer(xi, xi);
        const OctMatrix2<Rational> rhs = As * xixis + xixis * A;
        r.check(lhs == rhs, "(A*xi)xi* + xi(A*xi)* != A*(xi xi*) + (xi xi*)A");
    }
    return r;
}

SuiteResult suite_hat_transpose(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lie.hat_transpose");
    for (long n = 0; n < count; ++n) {
        const OctMatrix2<Rational> A = random_traceless(rng);
        r.check(hat(A).transpose() == hat(A.conj_transpose()),
                "transpose(hat(A)) != hat(A*)");
        const OctVec2<Rational> xi = random_vec2(rng), eta = random_vec2(rng);
        const auto [l, rr] = dual_check(A, xi, eta);
        r.check(l == rr, "<xi, A eta> != <A* xi, eta>");
    }
    return r;
}

GroupElem random_word(Rng& rng) {
    std::vector<std::pair<GeneratorD, double>> word;
    const int len = 1 + static_cast<int>(rng.below(3));
    for (int i = 0; i < len; ++i) word.push_back({random_traceless_d(rng), rng.uniform(-0.7, 0.7)});
    return exp_word(word);
}

SuiteResult suite_conformality(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lie.conformality");
    for (long n = 0; n < count; ++n) {
        const GroupElem g = random_word(rng);
        // Two unit vectors on the graph line of a common slope a.
        OctonionD a, q1, q2;
        for (int k = 0; k < 8; ++k) {
            a[k] = rng.uniform(-1.0, 1.0);
            q1[k] = rng.uniform(-1.0, 1.0);
            q2[k] = rng.uniform(-1.0, 1.0);
        }
        auto normalize = [](OctVec2<double> v) {
            return (1.0 / std::sqrt(v.x1.norm_sq() + v.x2.norm_sq())) * v;
        };
        const OctVec2<double> xi = normalize(OctVec2<double>{q1, a * q1});
        const OctVec2<double> eta = normalize(OctVec2<double>{q2, a * q2});

        const OctVec2<double> gx = vec_from_coords(g.m16.apply(vec_coords(xi)));
        const OctVec2<double> ge = vec_from_coords(g.m16.apply(vec_coords(eta)));
        const double nx = std::sqrt(gx.x1.norm_sq() + gx.x2.norm_sq());
        const double ne = std::sqrt(ge.x1.norm_sq() + ge.x2.norm_sq());
        r.check(std::abs(nx - ne) < 1e-8, "norms differ along one line after g");
        const HermMatrix2<double> r1 = rank_one((1.0 / nx) * gx);
        const HermMatrix2<double> r2 = rank_one((1.0 / ne) * ge);
        const HermMatrix2<double> d = r1 - r2;
        r.check(std::abs(d.a) < 1e-8 && std::abs(d.b) < 1e-8 && d.q.norm_sq() < 1e-16,
                "image vectors are not on one line");
    }
    return r;
}

SuiteResult suite_cone_preservation(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lie.cone_preservation");
    for (long n = 0; n < count; ++n) {
        const GroupElem g = random_word(rng);
        const HermMatrix2<double> X = random_pd_herm_d(rng);
        const HermMatrix2<double> Y = herm_from_coords(g.m10.apply(herm_coords(X)));
        r.check(Y.is_positive_definite(), "image of a PD matrix left the cone");
    }
    return r;
}

SuiteResult suite_rep_compatibility(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "lie.rep_compatibility");
    for (long n = 0; n < count; ++n) {
        const GroupElem g = random_word(rng);
        const HermMatrix2<double> X = random_herm_d(rng);
        const HermMatrix2<double> Y = herm_from_coords(g.m10.apply(herm_coords(X)));

        const QuadForm16<double> B = j_map(X);
        const Rep16<double> Minv = invert16(g.m16);
        QuadForm16<double> Bp;
        for (int i = 0; i < 16; ++i)
            for (int j = 0; j < 16; ++j) {
                double s = 0.0;
                for (int a = 0; a < 16; ++a)
                    for (int b = 0; b < 16; ++b)
                        s += Minv.at(a, i) * B.at(a, b) * Minv.at(b, j);
                Bp.at(i, j) = s;
            }
        const HermMatrix2<double> Z = theta_map(Bp);
        const HermMatrix2<double> d = Y - Z;
        r.check(std::abs(d.a) < 1e-7 && std::abs(d.b) < 1e-7 && d.q.norm_sq() < 1e-14,
                "Rep10 action disagrees with the pulled-back form");
    }
    return r;
}

// --- polycalc suites ------------------------------------------------------------------

SuiteResult suite_hess_orders(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.hess_orders");
    for (long n = 0; n < count; ++n) {
        const Poly16 f = random_poly(rng, 4, 12);
        const OctPoly F = OctPoly::from_scalar(f);
        const OctPoly q1 = d_bar_left(1, d_right(2, F));
        const OctPoly q2 = d_right(2, d_bar_left(1, F));
        r.check(q1 == q2, "operator orders disagree on a real function");
        r.check(q1 == hess_oct(f).q, "hess_oct off-diagonal disagrees with operator form");
    }
    return r;
}

SuiteResult suite_closed_current(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.closed_current");
    for (long n = 0; n < count; ++n) {
        const Poly16 u = random_poly(rng, 5, 40);
        const HermPolyMatrix T = hess_oct(u);
        const auto [r1, r2] = closed_current_residual(T);
        r.check(r1.is_zero() && r2.is_zero(), "octonionic closed-current residual is nonzero");
        bool all_zero = true;
        for (const Poly16& p : closed_current_residual_scalar(T)) all_zero &= p.is_zero();
        r.check(all_zero, "scalar closed-current system residual is nonzero");
    }
    return r;
}

SuiteResult suite_theta_compat(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.theta_compat");
    for (long n = 0; n < count; ++n) {
        // Random homogeneous quadratic.
        Poly16 b;
        for (int t = 0; t < 20; ++t) {
            Monomial m;
            m.e[rng.below(16)] += 1;
            m.e[rng.below(16)] += 1;
            b.add_term(m, rng.rational());
        }
        if (b.is_zero()) {
            r.check(true, "");
            continue;
        }
        const HermMatrix2<Rational> th = theta_map(quadratic_matrix(b));
        const HermPolyMatrix H = hess_oct(b);
        const std::array<Rational, 16> zero{};
        r.check(H.eval(zero) == Rational(16) * th, "hess_oct(b) != 16 theta(b) for quadratic b");
    }
    return r;
}

SuiteResult suite_psi_laplacian(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.psi_laplacian");
    for (long n = 0; n < count; ++n) {
        OctPoly Psi;
        for (int k = 0; k < 8; ++k) Psi.c[k] = random_poly(rng, 4, 6);
        const int comp = 1 + static_cast<int>(rng.below(2));
        r.check(psi_laplacian_defect(Psi, comp, 0).is_zero() &&
                    psi_laplacian_defect(Psi, comp, 1).is_zero(),
                "derivative-commutation identity fails");
    }
    return r;
}

SuiteResult suite_divergence(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.divergence");
    for (long n = 0; n < count; ++n) {
        const Poly16 u = random_poly(rng, 4, 25);
        bool all_zero = true;
        for (const Poly16& p : divergence_defect(u)) all_zero &= p.is_zero();
        r.check(all_zero, "divergence-form defect is nonzero");
    }
    return r;
}

SuiteResult suite_equivariance_defect(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.equivariance_defect");
    for (long n = 0; n < count; ++n) {
        Poly16 f;
        for (int t = 0; t < 12; ++t) {
            Monomial m;
            m.e[rng.below(16)] += 1;
            m.e[rng.below(16)] += 1;
            f.add_term(m, rng.rational());
        }
        if (f.is_zero()) f = Poly16::term(Monomial::var(0) * Monomial::var(0), 1);
        const OctMatrix2<Rational> A = random_traceless(rng);
        bool all_zero = true;
        for (const Rational& d : hessian_equivariance_defect(f, A)) all_zero &= (d == 0);
        r.check(all_zero, "infinitesimal Hessian equivariance fails");
    }
    return r;
}

SuiteResult suite_c49(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.c49");
    for (long n = 0; n < count; ++n) {
        // u = alpha |x1|^2 + beta |x2|^2 + random cubic/quartic terms; at 0 the
        // Hessian is diag(16 alpha, 16 beta), third derivatives are generic.
        const Rational sa = rng.rational(4, 2), sb = rng.rational(4, 2);
        const Rational alpha = Rational(1, 2) + sa * sa;
        const Rational beta = Rational(1, 2) + sb * sb;
        Poly16 u;
        for (int p = 0; p < 8; ++p) {
            u.add_term(Monomial::var(p) * Monomial::var(p), alpha);
            u.add_term(Monomial::var(8 + p) * Monomial::var(8 + p), beta);
        }
        for (int t = 0; t < 15; ++t) {
            Monomial m;
            const int deg = 3 + static_cast<int>(rng.below(2));
            for (int d = 0; d < deg; ++d) m.e[rng.below(16)] += 1;
            u.add_term(m, rng.rational());
        }

        const HermPolyMatrix H = hess_oct(u);
        const std::array<Rational, 16> zero{};
        const double l1 = to_double(H.d1.eval(zero)), l2 = to_double(H.d2.eval(zero));
        const double lam[3] = {0.0, l1, l2};

        double lhs = 0.0, rhs = 0.0;
        for (int l = 1; l <= 2; ++l)
            for (int p = 0; p < 8; ++p) {
                const int v = 8 * (l - 1) + p;
                const double d1v = to_double(H.d1.derivative(v).eval(zero));
                const double d2v = to_double(H.d2.derivative(v).eval(zero));
                double qv = 0.0;
                for (int k = 0; k < 8; ++k) {
                    const double c = to_double(H.q.c[k].derivative(v).eval(zero));
                    qv += c * c;
                }
                // LHS: |u_{kk x_i^p}|^2 / (lam_i lam_k), i.e. only diagonal entries.
                lhs += d1v * d1v / (lam[l] * lam[1]) + d2v * d2v / (lam[l] * lam[2]);
                // RHS: all entries (k,i), derivative in x_l^p.
                rhs += d1v * d1v / (lam[1] * lam[1]) + d2v * d2v / (lam[2] * lam[2]) +
                       2.0 * qv / (lam[1] * lam[2]);
            }
        r.check(lhs <= 4.0 * rhs + 1e-9, "elementary third-derivative inequality fails");
    }
    return r;
}

// Shifts u so that its octonionic Hessian is PD at the point x.
Poly16 make_opsh_at(Rng& rng, Poly16 u, const std::array<Rational, 16>& x) {
    std::array<double, 16> xd;
    for (int v = 0; v < 16; ++v) xd[v] = to_double(x[v]);
    const HermMatrix2<double> H = hess_oct(u).eval(xd);
    const auto [hi, lo] = spectrum(H);
    (void)hi;
    const double need = std::max(0.0, -lo) + 1.0;
    const Rational c(static_cast<long long>(std::ceil(need)), 16);
    for (int p = 0; p < 16; ++p) u.add_term(Monomial::var(p) * Monomial::var(p), c);
    (void)rng;
    return u;
}

SuiteResult suite_delta_l(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.delta_l");
    for (long n = 0; n < count; ++n) {
        std::array<Rational, 16> x;
        for (int v = 0; v < 16; ++v) x[v] = rng.rational(2, 4);
        const Poly16 u = make_opsh_at(rng, random_poly(rng, 4, 20), x);

        // Exact unit line direction with real second coordinate:
        // zeta = (2w, (1-|w|^2) e0) / (1 + |w|^2).
        const OctonionQ w = random_octonion(rng);
        const Rational s = w.norm_sq();
        const Rational inv = Rational(1) / (1 + s);
        const OctVec2<Rational> zeta{(2 * inv) * w, OctonionQ((1 - s) * inv)};

        const HermPolyMatrix H = hess_oct(u);
        std::array<double, 16> xd;
        for (int v = 0; v < 16; ++v) xd[v] = to_double(x[v]);
        const HermMatrix2<double> U = H.eval(xd);
        if (!U.is_positive_definite()) {
            r.check(false, "oPSH certification failed at the sample point");
            continue;
        }

        const HermMatrix2<double> LU{to_double(laplacian_line(zeta, H.d1).eval(xd)),
                                     to_double(laplacian_line(zeta, H.d2).eval(xd)),
                                     [&] {
                                         OctonionD o;
                                         for (int k = 0; k < 8; ++k)
                                             o[k] = to_double(
                                                 laplacian_line(zeta, H.q.c[k]).eval(xd));
                                         return o;
                                     }()};
        const double lhs = tr_inv_times(U, LU);

        // Delta_L log det U via chain rule along the 8 line directions.
        const Poly16 F = herm_poly_det(H);
        const double Fx = to_double(F.eval(xd));
        double rhs = 0.0;
        for (int p = 0; p < 8; ++p) {
            std::array<Rational, 16> dir{};
            const OctonionQ v1 = zeta.x1 * OctonionQ::unit(p);
            const OctonionQ v2 = zeta.x2 * OctonionQ::unit(p);
            for (int k = 0; k < 8; ++k) {
                dir[k] = v1[k];
                dir[8 + k] = v2[k];
            }
            const Poly16 dF = dir_derivative(F, dir);
            const double d1 = to_double(dF.eval(xd));
            const double d2 = to_double(dir_derivative(dF, dir).eval(xd));
            rhs += d2 / Fx - (d1 / Fx) * (d1 / Fx);
        }
        r.check(lhs >= rhs - 1e-8, "tr(U^{-1} Delta_L U) < Delta_L log det U");
    }
    return r;
}

SuiteResult suite_fourth_order(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "polycalc.fourth_order");
    for (long n = 0; n < count; ++n) {
        std::array<Rational, 16> x;
        for (int v = 0; v < 16; ++v) x[v] = rng.rational(2, 4);
        const Poly16 u = make_opsh_at(rng, random_poly(rng, 4, 20), x);
        std::array<double, 16> xd;
        for (int v = 0; v < 16; ++v) xd[v] = to_double(x[v]);

        const HermPolyMatrix H = hess_oct(u);
        const HermMatrix2<double> U = H.eval(xd);
        if (!U.is_positive_definite()) {
            r.check(false, "oPSH certification failed at the sample point");
            continue;
        }
        const OctMatrix2<double> Uinv = U.inverse().full();

        auto lap16 = [](const Poly16& p) {
            Poly16 s;
            for (int v = 0; v < 16; ++v) s = s + p.derivative(v).derivative(v);
            return s;
        };
        HermMatrix2<double> dU{to_double(lap16(H.d1).eval(xd)), to_double(lap16(H.d2).eval(xd)),
                               [&] {
                                   OctonionD o;
                                   for (int k = 0; k < 8; ++k)
                                       o[k] = to_double(lap16(H.q.c[k]).eval(xd));
                                   return o;
                               }()};
        double lhs = (Uinv * dU.full()).re_trace();
        for (int v = 0; v < 16; ++v) {
            HermMatrix2<double> Uv{to_double(H.d1.derivative(v).eval(xd)),
                                   to_double(H.d2.derivative(v).eval(xd)),
                                   [&] {
                                       OctonionD o;
                                       for (int k = 0; k < 8; ++k)
                                           o[k] = to_double(H.q.c[k].derivative(v).eval(xd));
                                       return o;
                                   }()};
            const OctMatrix2<double> M = Uinv * Uv.full();
            lhs -= (M * M).re_trace();
        }

        const Poly16 F = herm_poly_det(H);
        const double Fx = to_double(F.eval(xd));
        double rhs = 0.0;
        for (int v = 0; v < 16; ++v) {
            const double d1 = to_double(F.derivative(v).eval(xd));
            const double d2 = to_double(F.derivative(v).derivative(v).eval(xd));
            rhs += d2 / Fx - (d1 / Fx) * (d1 / Fx);
        }
        const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
        r.check(std::abs(lhs - rhs) / scale < 1e-8, "fourth-order identity fails");
    }
    return r;
}

// --- syzygy suites --------------------------------------------------------------------

SuiteResult suite_quadrics_relation(std::uint64_t, long) {
    SuiteResult r;
    const std::vector<Poly16> P = ten_quadrics();
    const std::vector<Poly16> L = ten_quadrics_literal();
    r.check(P.size() == 10 && L.size() == 10, "quadric count");
    for (int k = 0; k < 10; ++k)
        r.check(P[static_cast<std::size_t>(k)] == L[static_cast<std::size_t>(k)],
                "generated quadric differs from its transcription");
    for (const ModVec& col : appendix_matrix()) {
        Poly16 s;
        for (int j = 0; j < 10; ++j) s = s + col.e[static_cast<std::size_t>(j)] * P[static_cast<std::size_t>(j)];
        r.check(s.is_zero(), "transcribed generator is not a relation among the quadrics");
        int maxdeg = 0;
        for (const auto& e : col.e)
            for (const auto& [m, c] : e.terms()) maxdeg = std::max(maxdeg, m.degree());
        r.check(maxdeg <= 1, "transcribed generator has degree > 1");
    }
    return r;
}

SuiteResult suite_buchberger(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "syzygy.buchberger");
    for (long n = 0; n < count; ++n) {
        // Small random submodule of A^2 in 3 variables.
        std::vector<ModVec> gens;
        const int ngens = 2 + static_cast<int>(rng.below(2));
        for (int g = 0; g < ngens; ++g) {
            ModVec v(2);
            for (int c = 0; c < 2; ++c) {
                Poly16 p;
                for (int t = 0; t < 3; ++t) {
                    Monomial m;
                    const int deg = static_cast<int>(rng.below(3));
                    for (int d = 0; d < deg; ++d) m.e[rng.below(3)] += 1;
                    p.add_term(m, rng.rational(5, 3));
                }
                v.e[static_cast<std::size_t>(c)] = p;
            }
            if (!v.is_zero()) gens.push_back(v);
        }
        if (gens.empty()) {
            r.check(true, "");
            continue;
        }
        const ModuleGB gb(gens);
        const ModuleGB gb2(gens);
        r.check(gb.basis() == gb2.basis(), "Buchberger is not deterministic");
        bool members = true;
        for (const auto& g : gens) members &= gb.is_member(g);
        r.check(members, "input generator is not in its own module");

        // Every S-pair of the returned basis reduces to zero.
        bool spairs_ok = true;
        const auto& B = gb.basis();
        for (std::size_t i = 0; i < B.size(); ++i)
            for (std::size_t j = i + 1; j < B.size(); ++j) {
                const ModTerm li = leading_term(B[i]), lj = leading_term(B[j]);
                if (li.comp != lj.comp) continue;
                const Monomial l = Monomial::lcm(li.m, lj.m);
                ModVec s(B[i].rank());
                for (std::size_t c = 0; c < B[i].rank(); ++c) {
                    s.e[c] = Poly16::term(l / li.m, Rational(1) / li.c) * B[i].e[c] -
                             Poly16::term(l / lj.m, Rational(1) / lj.c) * B[j].e[c];
                }
                spairs_ok &= gb.normal_form(s).is_zero();
            }
        r.check(spairs_ok, "an S-pair of the reduced basis does not reduce to zero");

        // The Koszul relation between the two components is in the kernel of
        // the row map when the module is a syzygy kernel.
        const Poly16 p1 = random_poly(rng, 2, 3), p2 = random_poly(rng, 2, 3);
        if (!p1.is_zero() || !p2.is_zero()) {
            const SyzygyBasis ker = syzygy_kernel({p1, p2});
            ModVec koszul(2);
            koszul.e[0] = p2;
            koszul.e[1] = Rational(-1) * p1;
            r.check(ModuleGB(ker.gens).is_member(koszul), "Koszul syzygy is not in the kernel");
            bool rel = true;
            for (const auto& g : ker.gens) rel &= (g.e[0] * p1 + g.e[1] * p2).is_zero();
            r.check(rel, "kernel generator is not a relation");
        }
    }
    return r;
}

// --- ma_solver suites ---------------------------------------------------------------

Freq unit_freq(int coord, int value = 1) {
    Freq k{};
    k[static_cast<std::size_t>(coord)] = value;
    return k;
}

SuiteResult suite_hess_trig(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "ma.hess_trig");
    // Pinned examples.
    {
        const HermTrigMatrix h = hess_trig(TrigPoly::cosine(unit_freq(0)));
        std::array<double, 16> x{};
        x[0] = 0.3;
        const HermMatrix2<double> v = h.eval(x);
        const double expect = -4 * std::numbers::pi * std::numbers::pi * std::cos(2 * std::numbers::pi * 0.3);
        r.check(std::abs(v.a - expect) < 1e-12 && std::abs(v.b) < 1e-12 && v.q.norm_sq() < 1e-24,
                "Hessian of cos(2 pi x1_0) is wrong");

        const HermTrigMatrix hc = hess_trig(TrigPoly::constant(2.5));
        r.check(hc.d1.is_zero() && hc.d2.is_zero(), "Hessian of a constant is nonzero");

        Freq mixed{};
        mixed[0] = 1;
        mixed[8] = 1;
        const HermTrigMatrix hm = hess_trig(TrigPoly::cosine(mixed));
        const HermMatrix2<double> vm = hm.eval(x);
        const double c = -4 * std::numbers::pi * std::numbers::pi * std::cos(2 * std::numbers::pi * 0.3);
        r.check(std::abs(vm.a - c) < 1e-12 && std::abs(vm.b - c) < 1e-12 &&
                    std::abs(vm.q[0] - c) < 1e-12,
                "Hessian of the mixed mode is wrong");
    }
    // Random: trig Hessian agrees with finite differences of the potential.
    for (long n = 0; n < count; ++n) {
        const TrigPoly f = random_trig(rng, {0, 8}, 1, 0.5);
        const HermTrigMatrix h = hess_trig(f);
        std::array<double, 16> x{};
        x[0] = rng.uniform();
        x[8] = rng.uniform();
        const double eps = 1e-5;
        auto at = [&](int v, double dv) {
            auto y = x;
            y[static_cast<std::size_t>(v)] += dv;
            return f.eval(y);
        };
        const double fd11 = (at(0, eps) - 2 * f.eval(x) + at(0, -eps)) / (eps * eps);
        r.check(std::abs(h.d1.eval(x) - fd11) < 1e-3, "trig Hessian d1 vs finite differences");
    }
    // Integration examples.
    r.check(std::abs(integrate_torus(TrigPoly::cosine(unit_freq(0)), TrigPoly::cosine(unit_freq(0))) - 0.5) < 1e-15,
            "integral of cos^2 is not 1/2");
    r.check(integrate_torus(TrigPoly::cosine(unit_freq(0)), TrigPoly::cosine(unit_freq(8))) == 0.0,
            "orthogonal modes integrate to nonzero");
    r.check(integrate_torus(TrigPoly::constant(1.0)) == 1.0, "integral of 1 is not 1");
    return r;
}

SuiteResult suite_normalization(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "ma.normalization");
    SolverConfig cfg;
    cfg.active_coords = {0};
    cfg.max_freq = 2;
    const TorusHermField g0(HermMatrix2<double>::identity(),
                            TrigPoly::cosine(unit_freq(0), 0.002));
    r.check(normalization_constant(TrigPoly(), g0, cfg) == 1.0, "A != 1 for f = 0");
    for (long n = 0; n < count; ++n) {
        const double c = rng.uniform(-1.0, 1.0);
        const double A = normalization_constant(TrigPoly::constant(c), g0, cfg);
        r.check(std::abs(A - std::exp(-c)) < 1e-12, "A != e^{-c} for constant f");
    }
    return r;
}

SuiteResult suite_ibp(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "ma.ibp");
    for (long n = 0; n < count; ++n) {
        const std::vector<int> coords = {0, 8};
        const TrigPoly u = random_trig(rng, coords, 1, 0.002);
        const TrigPoly v = random_trig(rng, coords, 1, 1.0);
        const TrigPoly f = random_trig(rng, coords, 1, 1.0);
        const TorusHermField g0(HermMatrix2<double>::identity(),
                                TrigPoly::cosine(unit_freq(0), 0.01));
        const IbpResult res = ibp_defect(u, v, f, g0);
        const double scale = std::max({1.0, std::abs(res.lhs), std::abs(res.rhs)});
        r.check(std::abs(res.defect) / scale < 1e-10, "integration by parts is not symmetric");
    }
    return r;
}

SuiteResult suite_linearized(std::uint64_t seed, long count) {
    SuiteResult r;
    Rng rng(seed, "ma.linearized");
    SolverConfig cfg;
    cfg.active_coords = {0, 8};
    cfg.max_freq = 1;
    const TorusHermField g0(HermMatrix2<double>::identity());

    // No free term: the linearization kills constants.
    const std::vector<double> z =
        linearized_apply(TrigPoly::cosine(unit_freq(0), 0.01), TrigPoly::constant(3.0), g0, cfg);
    bool zero = true;
    for (double v : z) zero &= std::abs(v) < 1e-14;
    r.check(zero, "DM(constant) != 0");

    // Pinned value at phi = 0, G0 = I.
    {
        Grid grid(cfg);
        const std::vector<double> w =
            linearized_apply(TrigPoly(), TrigPoly::cosine(unit_freq(0)), g0, cfg);
        bool ok = true;
        for (std::size_t n = 0; n < grid.size(); ++n) {
            const double expect = -4 * std::numbers::pi * std::numbers::pi *
                                  std::cos(2 * std::numbers::pi * grid.point(n)[0]);
            ok &= std::abs(w[n] - expect) < 1e-10;
        }
        r.check(ok, "DM_0(cos) != -4 pi^2 cos for G0 = I");
    }

    // Self-adjointness: the weighted Galerkin pairing is symmetric.
    for (long n = 0; n < count; ++n) {
        const TrigPoly phi = random_trig(rng, {0, 8}, 1, 0.002);
        const HermTrigMatrix G = g0.matrix() + hess_trig(phi);
        const TrigPoly b1 = random_trig(rng, {0, 8}, 1, 1.0);
        const TrigPoly b2 = random_trig(rng, {0, 8}, 1, 1.0);
        const double s12 = integrate_torus(b1 * mixed_det(G, hess_trig(b2)));
        const double s21 = integrate_torus(b2 * mixed_det(G, hess_trig(b1)));
        const double scale = std::max({1.0, std::abs(s12), std::abs(s21)});
        r.check(std::abs(s12 - s21) / scale < 1e-9, "linearization pairing is not symmetric");
    }
    return r;
}

SuiteResult suite_manufactured(std::uint64_t seed, long) {
    SuiteResult r;
    Rng rng(seed, "ma.manufactured");
    const TorusHermField g0(HermMatrix2<double>::identity());

    // f = 0 -> phi = 0.
    {
        SolverConfig cfg;
        cfg.active_coords = {0};
        cfg.max_freq = 3;
        const SolveReport rep = newton_solve(TrigPoly(), g0, cfg);
        r.check(rep.sup_phi < 1e-12, "f = 0 does not give phi = 0");
    }

    auto recover = [&](const TrigPoly& phi_star, SolverConfig cfg) {
        const Manufactured man = manufacture(phi_star, g0, cfg);
        const SolveReport rep = newton_solve(man.f_projected, g0, cfg);
        SolverConfig fine = cfg;
        fine.nodes_per_dim = 4 * cfg.grid_size();
        Grid dense(fine);
        double err = 0.0;
        // Compare after aligning means: the solver normalizes its own mean.
        const TrigPoly det_g0 = det_trig(g0.matrix());
        const double mstar = integrate_torus(phi_star, det_g0) / integrate_torus(det_g0);
        const TrigPoly diff = rep.phi - (phi_star - TrigPoly::constant(mstar));
        for (std::size_t n = 0; n < dense.size(); ++n)
            err = std::max(err, std::abs(diff.eval(dense.point(n))));
        return std::pair<double, SolveReport>(err, rep);
    };

    {
        SolverConfig cfg;
        cfg.active_coords = {0};
        cfg.max_freq = 3;
        const auto [err, rep] = recover(TrigPoly::cosine(unit_freq(0), 0.01), cfg);
        r.check(err < 1e-8, "manufactured solution (single mode) not recovered");
        r.check(rep.iterations <= 10, "manufactured solution needed more than 10 iterations");

        // Quadratic terminal convergence (ratio test on the last residuals).
        const auto& h = rep.residual_history;
        if (h.size() >= 3) {
            const double r1 = h[h.size() - 2] / std::max(h[h.size() - 3], 1e-300);
            const double r2 = h[h.size() - 1] / std::max(h[h.size() - 2], 1e-300);
            r.check(r2 < r1 || h.back() < 1e-13, "terminal convergence is not superlinear");
        }

        // Uniqueness: a second initial guess lands on the same solution.
        const Manufactured man = manufacture(TrigPoly::cosine(unit_freq(0), 0.01), g0, cfg);
        TrigPoly guess = random_trig(rng, {0}, 2, 0.002);
        const SolveReport rep2 = newton_solve(man.f_projected, g0, cfg, guess);
        SolverConfig fine = cfg;
        fine.nodes_per_dim = 4 * cfg.grid_size();
        Grid dense(fine);
        double d = 0.0;
        const TrigPoly diff = rep.phi - rep2.phi;
        for (std::size_t n = 0; n < dense.size(); ++n)
            d = std::max(d, std::abs(diff.eval(dense.point(n))));
        r.check(d < 1e-8, "two initial guesses give different solutions");
    }
    {
        SolverConfig cfg;
        cfg.active_coords = {0, 8};
        cfg.max_freq = 2;
        Freq mixed{};
        mixed[0] = 1;
        mixed[8] = 1;
        const auto [err, rep] = recover(TrigPoly::cosine(mixed, 0.005), cfg);
        r.check(err < 1e-8, "manufactured solution (mixed mode) not recovered");
        r.check(rep.iterations <= 10, "mixed-mode solve needed more than 10 iterations");
    }
    return r;
}

SuiteResult suite_solver_guards(std::uint64_t seed, long) {
    SuiteResult r;
    (void)seed;
    const TorusHermField g0(HermMatrix2<double>::identity());
    SolverConfig cfg;
    cfg.active_coords = {0};
    cfg.max_freq = 3;

    // A too-large manufactured amplitude must be rejected, not silently used.
    bool threw = false;
    try {
        manufacture(TrigPoly::cosine(unit_freq(0), 0.1), g0, cfg);
    } catch (const NotPositiveDefinite&) {
        threw = true;
    }
    r.check(threw, "manufacture accepted a non-PD instance");

    // Normalization consistency after renormalizing f by log A.
    const Manufactured man = manufacture(TrigPoly::cosine(unit_freq(0), 0.01), g0, cfg);
    const double A = normalization_constant(man.f_projected, g0, cfg);
    r.check(std::abs(A - 1.0) < 1e-10, "manufactured f is not normalized (A != 1)");

    Grid grid(cfg);
    std::vector<double> weighted(grid.size());
    for (std::size_t n = 0; n < grid.size(); ++n) {
        const double det = g0.eval(grid.point(n)).det();
        weighted[n] = (A * std::exp(man.f_projected.eval(grid.point(n))) - 1.0) * det;
    }
    r.check(std::abs(pairwise_sum(weighted) / static_cast<double>(grid.size())) < 1e-10,
            "integral of (e^f - 1) det G0 does not vanish after renormalization");
    return r;
}

} // namespace

// --- registry -------------------------------------------------------------------------

const std::vector<Suite>& all_suites() {
    static const std::vector<Suite> suites = {
        {"octonion.norm_multiplicativity", 10000, false, suite_norm_mult, "exact"},
        {"octonion.anti_involution", 10000, false, suite_anti_involution, "exact"},
        {"octonion.product_identities", 10000, false, suite_product_identities, "exact"},
        {"octonion.moufang", 10000, false, suite_moufang, "exact"},
        {"octonion.associator_alternating", 10000, false, suite_associator, "exact"},
        {"octonion.cayley_dickson", 1, true, suite_cayley_dickson, "exact"},
        {"octonion.fano_consistency", 1, true, suite_fano, "exact"},
        {"herm2.mixed_det_trace", 1000, false, suite_mixed_det_trace, "exact"},
        {"herm2.positivity", 1000, false, suite_positivity, "exact"},
        {"herm2.spectrum_diagonalize", 1000, false, suite_spectrum_diag, "float"},
        {"herm2.trace_inequalities", 1000, false, suite_trace_inequalities, "float"},
        {"herm2.logdet_curve", 200, false, suite_logdet_curve, "float"},
        {"lines.theta_j_identity", 1000, false, suite_theta_j, "exact"},
        {"lines.averaging", 1000, false, suite_averaging, "exact"},
        {"lines.same_line", 200, false, suite_same_line, "float"},
        {"lines.jjj_equivariance", 1000, false, suite_jjj, "exact"},
        {"lie.t_map_equivariance", 1000, false, suite_t_map_equivariance, "exact"},
        {"lie.hat_transpose", 200, false, suite_hat_transpose, "exact"},
        {"lie.conformality", 100, false, suite_conformality, "float"},
        {"lie.cone_preservation", 100, false, suite_cone_preservation, "float"},
        {"lie.rep_compatibility", 100, false, suite_rep_compatibility, "float"},
        {"polycalc.hess_orders", 200, false, suite_hess_orders, "exact"},
        {"polycalc.closed_current", 500, false, suite_closed_current, "exact"},
        {"polycalc.theta_compat", 200, false, suite_theta_compat, "exact"},
        {"polycalc.psi_laplacian", 200, false, suite_psi_laplacian, "exact"},
        {"polycalc.divergence", 200, false, suite_divergence, "exact"},
        {"polycalc.equivariance_defect", 1000, false, suite_equivariance_defect, "exact"},
        {"polycalc.c49", 200, false, suite_c49, "float"},
        {"polycalc.delta_l", 200, false, suite_delta_l, "float"},
        {"polycalc.fourth_order", 200, false, suite_fourth_order, "float"},
        {"syzygy.quadrics_relation", 1, true, suite_quadrics_relation, "exact"},
        {"syzygy.buchberger", 25, false, suite_buchberger, "exact"},
        {"ma.hess_trig", 50, false, suite_hess_trig, "float"},
        {"ma.normalization", 50, false, suite_normalization, "float"},
        {"ma.ibp", 100, false, suite_ibp, "float"},
        {"ma.linearized", 20, false, suite_linearized, "float"},
        {"ma.manufactured", 1, true, suite_manufactured, "float"},
        {"ma.solver_guards", 1, true, suite_solver_guards, "float"},
    };
    return suites;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, long count) {
    for (const Suite& s : all_suites()) {
        if (s.name != name) continue;
        const long n = (count > 0 && !s.fixed_count) ? count : s.default_count;
        SuiteResult r = s.run(seed, n);
        r.name = name;
        return r;
    }
    throw Error("unknown suite: " + name);
}

} // namespace octma
