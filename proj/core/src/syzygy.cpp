#include "octma/syzygy.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>

namespace octma {

namespace {

// Position-over-term: lower component index dominates; grevlex breaks ties.
bool modterm_greater(int ca, const Monomial& ma, int cb, const Monomial& mb) {
    if (ca != cb) return ca < cb;
    return grevlex_greater(ma, mb);
}

ModVec mul_term(const ModVec& v, const Monomial& m, const Rational& c) {
    ModVec r(v.rank());
    for (std::size_t i = 0; i < v.e.size(); ++i) {
        if (v.e[i].is_zero()) continue;
        Poly16 p;
        for (const auto& [mono, coef] : v.e[i].terms()) p.add_term(mono * m, coef * c);
        r.e[i] = std::move(p);
    }
    return r;
}

// Scale to an integer-primitive vector with positive leading coefficient.
void normalize_content(ModVec& v) {
    using boost::multiprecision::gcd;
    using boost::multiprecision::lcm;
    Integer den = 1, num = 0;
    for (const auto& p : v.e)
        for (const auto& [m, c] : p.terms()) {
            den = lcm(den, Integer(boost::multiprecision::denominator(c)));
            num = gcd(num, Integer(boost::multiprecision::numerator(c)));
        }
    if (num == 0) return;
    Rational scale(den, num < 0 ? -num : num);
    const ModTerm lt = leading_term(v);
    if (lt.c * scale < 0) scale = -scale;
    for (auto& p : v.e) p = scale * p;
}

struct GBElem {
    ModVec v;
    int comp;
    Monomial lm;
    Rational lc;
};

GBElem make_elem(ModVec v) {
    ModTerm lt = leading_term(v);
    return {std::move(v), lt.comp, lt.m, lt.c};
}

ModVec reduce_full(const ModVec& input, const std::vector<GBElem>& G, long* reductions,
                   std::size_t skip = static_cast<std::size_t>(-1)) {
    ModVec rem(input.rank());
    ModVec p = input;
    while (!p.is_zero()) {
        const ModTerm lt = leading_term(p);
        bool reduced = false;
        for (std::size_t gi = 0; gi < G.size(); ++gi) {
            if (gi == skip) continue;
            const auto& g = G[gi];
            if (g.comp != lt.comp || !g.lm.divides(lt.m)) continue;
            p = p - mul_term(g.v, lt.m / g.lm, lt.c / g.lc);
            if (reductions) ++*reductions;
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.e[lt.comp].add_term(lt.m, lt.c);
            p.e[lt.comp].add_term(lt.m, -lt.c);
        }
    }
    return rem;
}

} // namespace

ModTerm leading_term(const ModVec& v) {
    for (std::size_t c = 0; c < v.e.size(); ++c)
        if (!v.e[c].is_zero())
            return {static_cast<int>(c), v.e[c].leading_monomial(), v.e[c].leading_coeff()};
    return {};
}

ModuleGB::ModuleGB(std::vector<ModVec> gens) {
    std::vector<GBElem> G;
    for (auto& g : gens) {
        if (g.is_zero()) continue;
        normalize_content(g);
        G.push_back(make_elem(std::move(g)));
    }

    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto push_pairs = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            if (G[i].comp == G[j].comp)
                pairs.push_back({i, j, Monomial::lcm(G[i].lm, G[j].lm)});
    };
    for (std::size_t j = 0; j < G.size(); ++j) push_pairs(j);

    // The lcm (chain) criterion: pair (i,j) is redundant when some other
    // basis element's lead divides lcm(i,j) strictly on both sides; the two
    // sub-pairs have strictly smaller lcms, so elimination is well-founded.
    auto chain_redundant = [&](const Pair& pr) {
        const int comp = G[pr.i].comp;
        for (std::size_t k = 0; k < G.size(); ++k) {
            if (k == pr.i || k == pr.j || G[k].comp != comp) continue;
            if (!G[k].lm.divides(pr.lcm)) continue;
            if (!(Monomial::lcm(G[k].lm, G[pr.i].lm) == pr.lcm) &&
                !(Monomial::lcm(G[k].lm, G[pr.j].lm) == pr.lcm))
                return true;
        }
        return false;
    };

    while (!pairs.empty()) {
        // Normal selection: smallest lcm first.
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k)
            if (grevlex_greater(pairs[best].lcm, pairs[k].lcm)) best = k;
        const Pair pr = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));
        ++stats_.pairs_considered;
        if (chain_redundant(pr)) continue;

        const GBElem& f = G[pr.i];
        const GBElem& g = G[pr.j];
        ModVec s = mul_term(f.v, pr.lcm / f.lm, Rational(1) / f.lc) -
                   mul_term(g.v, pr.lcm / g.lm, Rational(1) / g.lc);
        ModVec h = reduce_full(s, G, &stats_.reductions);
        if (h.is_zero()) continue;
        normalize_content(h);
        G.push_back(make_elem(std::move(h)));
        push_pairs(G.size() - 1);
    }

    // Minimalize: drop elements whose lead is divisible by another lead.
    std::vector<bool> keep(G.size(), true);
    for (std::size_t i = 0; i < G.size(); ++i)
        for (std::size_t j = 0; j < G.size() && keep[i]; ++j) {
            if (i == j || !keep[j] || G[j].comp != G[i].comp) continue;
            if (G[j].lm.divides(G[i].lm) && !(G[j].lm == G[i].lm && j > i)) keep[i] = false;
        }

    std::vector<GBElem> minimal;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (keep[i]) minimal.push_back(std::move(G[i]));

    // Tail-reduce each element against the others and make it monic.
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        ModVec r = reduce_full(minimal[i].v, minimal, nullptr, i);
        r = (Rational(1) / leading_term(r).c) * r;
        minimal[i] = make_elem(std::move(r));
    }

    std::sort(minimal.begin(), minimal.end(), [](const GBElem& a, const GBElem& b) {
        return modterm_greater(a.comp, a.lm, b.comp, b.lm);
    });
    for (auto& g : minimal) basis_.push_back(std::move(g.v));
    stats_.basis_size = basis_.size();
}

ModVec ModuleGB::normal_form(const ModVec& v) const {
    std::vector<GBElem> G;
    G.reserve(basis_.size());
    for (const auto& b : basis_) G.push_back(make_elem(ModVec(b)));
    return reduce_full(v, G, nullptr);
}

SyzygyBasis syzygy_kernel(const std::vector<Poly16>& row) {
    const std::size_t J = row.size();
    std::vector<ModVec> gens;
    for (std::size_t j = 0; j < J; ++j) {
        ModVec g(1 + J);
        g.e[0] = row[j];
        g.e[1 + j] = Poly16(Rational(1));
        gens.push_back(std::move(g));
    }
    ModuleGB gb(std::move(gens));

    std::vector<ModVec> projected;
    for (const auto& b : gb.basis()) {
        if (!b.e[0].is_zero()) continue;
        ModVec q(J);
        for (std::size_t j = 0; j < J; ++j) q.e[j] = b.e[1 + j];
        projected.push_back(std::move(q));
    }
    SyzygyBasis out;
    out.stats = gb.stats();
    // Inter-reduce the projected generators in A^J for a clean presentation.
    out.gens = ModuleGB(std::move(projected)).basis();
    return out;
}

bool modules_equal(const std::vector<ModVec>& A, const std::vector<ModVec>& B) {
    const ModuleGB ga{std::vector<ModVec>(A)};
    const ModuleGB gb{std::vector<ModVec>(B)};
    for (const auto& a : A)
        if (!gb.is_member(a)) return false;
    for (const auto& b : B)
        if (!ga.is_member(b)) return false;
    return true;
}

// --- quadric instance data ----------------------------------------------------

const std::array<std::array<int, 8>, 8> kXorSgn = {{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, -1, +1, -1, -1, +1},
    {+1, -1, -1, +1, +1, +1, -1, -1},
    {+1, +1, -1, -1, +1, -1, +1, -1},
    {+1, -1, -1, -1, -1, +1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, -1, +1, -1, -1},
    {+1, -1, +1, +1, -1, -1, +1, -1},
}};

namespace {

Monomial xy(int xi, int yj) {
    return Monomial::var(xi) * Monomial::var(8 + yj);
}

} // namespace

std::vector<Poly16> ten_quadrics() {
    std::vector<Poly16> P;
    Poly16 p1, p2;
    for (int i = 0; i < 8; ++i) {
        p1.add_term(Monomial::var(i) * Monomial::var(i), 1);
        p2.add_term(Monomial::var(8 + i) * Monomial::var(8 + i), 1);
    }
    P.push_back(p1);
    P.push_back(p2);
    // Component k of x * conj(y): x_k y_0 - sum_{j>=1} sgn(k^j, j) x_{k^j} y_j.
    for (int k = 0; k < 8; ++k) {
        Poly16 p;
        p.add_term(xy(k, 0), 1);
        for (int j = 1; j < 8; ++j) p.add_term(xy(k ^ j, j), -kXorSgn[k ^ j][j]);
        P.push_back(p);
    }
    return P;
}

std::vector<Poly16> ten_quadrics_literal() {
    // Signs of the x_{k^j} y_j term in P_{k+3}, transcribed row by row.
    static const int L[8][8] = {
        {+1, +1, +1, +1, +1, +1, +1, +1},
        {+1, -1, +1, -1, +1, -1, -1, +1},
        {+1, -1, -1, +1, +1, +1, -1, -1},
        {+1, +1, -1, -1, +1, -1, +1, -1},
        {+1, -1, -1, -1, -1, +1, +1, +1},
        {+1, +1, -1, +1, -1, -1, -1, +1},
        {+1, +1, +1, -1, -1, +1, -1, -1},
        {+1, -1, +1, +1, -1, -1, +1, -1},
    };
    std::vector<Poly16> P;
    Poly16 p1, p2;
    for (int i = 0; i < 8; ++i) {
        p1.add_term(Monomial::var(i) * Monomial::var(i), 1);
        p2.add_term(Monomial::var(8 + i) * Monomial::var(8 + i), 1);
    }
    P.push_back(p1);
    P.push_back(p2);
    for (int k = 0; k < 8; ++k) {
        Poly16 p;
        for (int j = 0; j < 8; ++j) p.add_term(xy(k ^ j, j), L[k][j]);
        P.push_back(p);
    }
    return P;
}

std::vector<ModVec> appendix_matrix() {
    // Sign patterns of rows 4..10 of the transcribed generator display
    // (y-block = generator columns 0..7, x-block = columns 8..15); the
    // variable index within a row follows the printed m-xor-j pattern.
    static const int YS[7][8] = {
        {+1, -1, +1, -1, +1, -1, -1, +1},
        {+1, -1, -1, +1, +1, +1, -1, -1},
        {+1, +1, -1, -1, +1, -1, +1, -1},
        {+1, -1, -1, -1, -1, +1, +1, +1},
        {+1, +1, -1, +1, -1, -1, -1, +1},
        {+1, +1, +1, -1, -1, +1, -1, -1},
        {+1, -1, +1, +1, -1, -1, +1, -1},
    };
    static const int XS[7][8] = {
        {+1, +1, -1, +1, -1, +1, +1, -1},
        {+1, +1, +1, -1, -1, -1, +1, +1},
        {+1, -1, +1, +1, -1, +1, -1, +1},
        {+1, +1, +1, +1, +1, -1, -1, -1},
        {+1, -1, +1, -1, +1, +1, +1, -1},
        {+1, -1, -1, +1, +1, -1, +1, +1},
        {+1, +1, -1, -1, +1, +1, -1, +1},
    };

    std::vector<ModVec> cols(16, ModVec(10));
    for (int j = 0; j < 8; ++j) {
        // Column j (y-block).
        cols[j].e[1] = Poly16::variable(j);                       // row 2: +x_j
        cols[j].e[2] = Rational(-1) * Poly16::variable(8 + j);    // row 3: -y_j
        for (int m = 1; m < 8; ++m)
            cols[j].e[2 + m] = Rational(YS[m - 1][j]) * Poly16::variable(8 + (m ^ j));

        // Column 8 + j (x-block).
        cols[8 + j].e[0] = Rational(j == 0 ? -1 : 1) * Poly16::variable(8 + j);  // row 1
        cols[8 + j].e[2] = Rational(j == 0 ? 1 : -1) * Poly16::variable(j);      // row 3
        for (int m = 1; m < 8; ++m)
            cols[8 + j].e[2 + m] = Rational(XS[m - 1][j]) * Poly16::variable(m ^ j);
    }
    return cols;
}

} // namespace octma
