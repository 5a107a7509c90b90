#pragma once

#include <array>
#include <cstdint>
#include <map>

#include "octma/octonion.hpp"
#include "octma/scalar.hpp"

namespace octma {

// Monomial in the 16 coordinates, fixed global order
// x1_0 > x1_1 > ... > x1_7 > x2_0 > ... > x2_7 (variable index 0..15).
struct Monomial {
    std::array<std::uint8_t, 16> e{};

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    static int var_index(int i, int p) { return 8 * (i - 1) + p; }

    static Monomial var(int m) {
        Monomial r;
        r.e[m] = 1;
        return r;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < 16; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
        return r;
    }

    bool divides(const Monomial& b) const {
        for (int i = 0; i < 16; ++i)
            if (e[i] > b.e[i]) return false;
        return true;
    }

    // Quotient; requires divides(b) == false for *this... callers check.
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < 16; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < 16; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
        return r;
    }

    bool coprime(const Monomial& b) const {
        for (int i = 0; i < 16; ++i)
            if (e[i] && b.e[i]) return false;
        return true;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

// Graded reverse lexicographic: higher total degree wins; on equal degree the
// monomial whose exponent is smaller at the last differing (least) variable
// is the larger one.
inline bool grevlex_greater(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = 15; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// Sparse exact-rational polynomial in the 16 coordinates.  Terms are stored
// in descending monomial order, so begin() is the leading term.
class Poly16 {
public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    Poly16() = default;
    explicit Poly16(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }

    static Poly16 variable(int m) {
        Poly16 p;
        p.terms_[Monomial::var(m)] = 1;
        return p;
    }
    static Poly16 variable(int i, int p) { return variable(Monomial::var_index(i, p)); }

    static Poly16 term(const Monomial& m, const Rational& c) {
        Poly16 p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const Rational& leading_coeff() const { return terms_.begin()->second; }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Poly16 operator+(const Poly16& a, const Poly16& b) {
        Poly16 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend Poly16 operator-(const Poly16& a, const Poly16& b) {
        Poly16 r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    Poly16 operator-() const {
        Poly16 r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }
    Poly16& operator+=(const Poly16& b) {
        for (const auto& [m, c] : b.terms_) add_term(m, c);
        return *this;
    }
    Poly16& operator-=(const Poly16& b) {
        for (const auto& [m, c] : b.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly16 operator*(const Poly16& a, const Poly16& b);

    friend Poly16 operator*(const Rational& s, const Poly16& a) {
        Poly16 r;
        if (s == 0) return r;
        for (const auto& [m, c] : a.terms_) r.terms_[m] = s * c;
        return r;
    }

    friend bool operator==(const Poly16& a, const Poly16& b) { return a.terms_ == b.terms_; }

    // Partial derivative with respect to coordinate m (0..15).
    Poly16 derivative(int m) const {
        Poly16 r;
        for (const auto& [mono, c] : terms_) {
            if (mono.e[m] == 0) continue;
            Monomial d = mono;
            d.e[m] -= 1;
            r.terms_[d] = c * mono.e[m];
        }
        return r;
    }

    Poly16 derivative(int i, int p) const { return derivative(Monomial::var_index(i, p)); }

    template <class R>
    R eval(const std::array<R, 16>& x) const {
        R total = R(0);
        for (const auto& [mono, c] : terms_) {
            R t = coeff_as<R>(c);
            for (int v = 0; v < 16; ++v)
                for (int k = 0; k < mono.e[v]; ++k) t = t * x[v];
            total = total + t;
        }
        return total;
    }

private:
    template <class R>
    static R coeff_as(const Rational& c) {
        if constexpr (std::is_same_v<R, double>)
            return to_double(c);
        else
            return R(c);
    }

    TermMap terms_;
};

// Octonion-valued polynomial: 8 scalar components in the fixed basis.
struct OctPoly {
    std::array<Poly16, 8> c;

    static OctPoly from_scalar(Poly16 p) {
        OctPoly r;
        r.c[0] = std::move(p);
        return r;
    }
    static OctPoly constant(const OctonionQ& o) {
        OctPoly r;
        for (int k = 0; k < 8; ++k) r.c[k] = Poly16(o[k]);
        return r;
    }

    bool is_zero() const {
        for (const auto& p : c)
            if (!p.is_zero()) return false;
        return true;
    }

    OctPoly conj() const {
        OctPoly r;
        r.c[0] = c[0];
        for (int k = 1; k < 8; ++k) r.c[k] = -c[k];
        return r;
    }

    friend OctPoly operator+(const OctPoly& a, const OctPoly& b) {
        OctPoly r;
        for (int k = 0; k < 8; ++k) r.c[k] = a.c[k] + b.c[k];
        return r;
    }
    friend OctPoly operator-(const OctPoly& a, const OctPoly& b) {
        OctPoly r;
        for (int k = 0; k < 8; ++k) r.c[k] = a.c[k] - b.c[k];
        return r;
    }
    friend OctPoly operator*(const OctPoly& a, const OctPoly& b) {
        OctPoly r;
        for (int i = 0; i < 8; ++i) {
            if (a.c[i].is_zero()) continue;
            for (int j = 0; j < 8; ++j) {
                if (b.c[j].is_zero()) continue;
                Poly16 prod = a.c[i] * b.c[j];
                if (kMulSgn[i][j] > 0)
                    r.c[kMulIdx[i][j]] += prod;
                else
                    r.c[kMulIdx[i][j]] -= prod;
            }
        }
        return r;
    }
    friend bool operator==(const OctPoly& a, const OctPoly& b) { return a.c == b.c; }

    OctPoly derivative(int m) const {
        OctPoly r;
        for (int k = 0; k < 8; ++k) r.c[k] = c[k].derivative(m);
        return r;
    }

    template <class R>
    Octonion<R> eval(const std::array<R, 16>& x) const {
        Octonion<R> o;
        for (int k = 0; k < 8; ++k) o[k] = c[k].eval(x);
        return o;
    }
};

// Left/right multiplication of an octonion-valued polynomial by basis units.
OctPoly unit_mul_left(int p, const OctPoly& F, bool conj_unit);
OctPoly unit_mul_right(const OctPoly& F, int p, bool conj_unit);

} // namespace octma
