#pragma once

#include <array>
#include <cstdint>

#include "octma/errors.hpp"
#include "octma/scalar.hpp"

namespace octma {

// Signed multiplication table of the basis units e0..e7, with e0 the unit.
// kMulIdx[i][j] is the index of the basis unit in e_i * e_j, kMulSgn[i][j]
// its sign.  Everything else in the library derives from these two arrays.
inline constexpr std::array<std::array<std::uint8_t, 8>, 8> kMulIdx = {{
    {0, 1, 2, 3, 4, 5, 6, 7},
    {1, 0, 4, 7, 2, 6, 5, 3},
    {2, 4, 0, 5, 1, 3, 7, 6},
    {3, 7, 5, 0, 6, 2, 4, 1},
    {4, 2, 1, 6, 0, 7, 3, 5},
    {5, 6, 3, 2, 7, 0, 1, 4},
    {6, 5, 7, 4, 3, 1, 0, 2},
    {7, 3, 6, 1, 5, 4, 2, 0},
}};

inline constexpr std::array<std::array<std::int8_t, 8>, 8> kMulSgn = {{
    {+1, +1, +1, +1, +1, +1, +1, +1},
    {+1, -1, +1, +1, -1, +1, -1, -1},
    {+1, -1, -1, +1, +1, -1, +1, -1},
    {+1, -1, -1, -1, +1, +1, -1, +1},
    {+1, +1, -1, -1, -1, +1, +1, -1},
    {+1, -1, +1, -1, -1, -1, +1, +1},
    {+1, +1, -1, +1, -1, -1, -1, +1},
    {+1, +1, +1, -1, +1, -1, -1, -1},
}};

// The seven oriented index triples (i,j,k) with e_i e_j = e_k.  They are
// redundant given the table above and exist for cross-checking it.
inline constexpr std::array<std::array<std::uint8_t, 3>, 7> kFanoLines = {{
    {1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7},
}};

template <Scalar S>
class Octonion {
public:
    Octonion() { c_.fill(S(0)); }
    explicit Octonion(const S& real) : Octonion() { c_[0] = real; }
    explicit Octonion(std::array<S, 8> c) : c_(std::move(c)) {}

    static Octonion unit(int i) {
        Octonion e;
        e.c_[i] = S(1);
        return e;
    }

    const S& operator[](int i) const { return c_[i]; }
    S& operator[](int i) { return c_[i]; }
    const std::array<S, 8>& components() const { return c_; }

    friend Octonion operator+(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Octonion operator-(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Octonion operator-() const {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend Octonion operator*(const S& s, const Octonion& a) {
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    friend Octonion operator*(const Octonion& a, const S& s) { return s * a; }
    friend Octonion operator/(const Octonion& a, const S& s) {
        if (s == S(0)) throw DivisionByZero();
        Octonion r;
        for (int i = 0; i < 8; ++i) r.c_[i] = a.c_[i] / s;
        return r;
    }

    friend Octonion operator*(const Octonion& a, const Octonion& b) {
        Octonion r;
        for (int i = 0; i < 8; ++i) {
            if (a.c_[i] == S(0)) continue;
            for (int j = 0; j < 8; ++j) {
                if (b.c_[j] == S(0)) continue;
                const S prod = a.c_[i] * b.c_[j];
                if (kMulSgn[i][j] > 0)
                    r.c_[kMulIdx[i][j]] += prod;
                else
                    r.c_[kMulIdx[i][j]] -= prod;
            }
        }
        return r;
    }

    Octonion& operator+=(const Octonion& b) { return *this = *this + b; }
    Octonion& operator-=(const Octonion& b) { return *this = *this - b; }

    friend bool operator==(const Octonion& a, const Octonion& b) { return a.c_ == b.c_; }

    S re() const { return c_[0]; }
    Octonion im() const {
        Octonion r = *this;
        r.c_[0] = S(0);
        return r;
    }
    Octonion conj() const {
        Octonion r = -*this;
        r.c_[0] = c_[0];
        return r;
    }

    S norm_sq() const {
        S n = S(0);
        for (const S& x : c_) n += x * x;
        return n;
    }

    Octonion inv() const {
        const S n = norm_sq();
        if (n == S(0)) throw DivisionByZero();
        return conj() / n;
    }

    bool is_zero() const {
        for (const S& x : c_)
            if (!(x == S(0))) return false;
        return true;
    }

private:
    std::array<S, 8> c_;
};

template <Scalar S>
S inner(const Octonion<S>& a, const Octonion<S>& b) {
    S r = S(0);
    for (int i = 0; i < 8; ++i) r += a[i] * b[i];
    return r;
}

template <Scalar S>
Octonion<S> commutator(const Octonion<S>& a, const Octonion<S>& b) {
    return a * b - b * a;
}

template <Scalar S>
Octonion<S> associator(const Octonion<S>& a, const Octonion<S>& b, const Octonion<S>& c) {
    return (a * b) * c - a * (b * c);
}

// --- Cayley-Dickson doubling over the quaternion subalgebra -----------------
//
// The quaternion subalgebra is span{e0, e1, e2, e4} (i = e1, j = e2, k = e4,
// consistent with e1*e2 = e4), and the doubling unit is l = e3.  With the
// products e1*e3 = e7, e2*e3 = e5, e4*e3 = -e6 this identifies every octonion
// with a pair of quaternions x + y*l.

template <Scalar S>
struct Quaternion {
    std::array<S, 4> c{};  // 1, i, j, k

    friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        Quaternion r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        Quaternion r;
        for (int i = 0; i < 4; ++i) r.c[i] = a.c[i] - b.c[i];
        return r;
    }
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return Quaternion{{a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
                           a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
                           a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
                           a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]}};
    }
    Quaternion conj() const { return Quaternion{{c[0], -c[1], -c[2], -c[3]}}; }
};

template <Scalar S>
std::pair<Quaternion<S>, Quaternion<S>> cayley_dickson_split(const Octonion<S>& o) {
    Quaternion<S> x{{o[0], o[1], o[2], o[4]}};
    Quaternion<S> y{{o[3], o[7], o[5], -o[6]}};
    return {x, y};
}

template <Scalar S>
Octonion<S> cayley_dickson_join(const Quaternion<S>& x, const Quaternion<S>& y) {
    Octonion<S> o;
    o[0] = x.c[0];
    o[1] = x.c[1];
    o[2] = x.c[2];
    o[4] = x.c[3];
    o[3] = y.c[0];
    o[7] = y.c[1];
    o[5] = y.c[2];
    o[6] = -y.c[3];
    return o;
}

// (x1 + y1 l)(x2 + y2 l) = (x1 x2 - conj(y2) y1) + (y2 x1 + y1 conj(x2)) l.
template <Scalar S>
Octonion<S> cayley_dickson_mul(const Octonion<S>& a, const Octonion<S>& b) {
    auto [x1, y1] = cayley_dickson_split(a);
    auto [x2, y2] = cayley_dickson_split(b);
    return cayley_dickson_join(x1 * x2 - y2.conj() * y1, y2 * x1 + y1 * x2.conj());
}

using OctonionQ = Octonion<Rational>;
using OctonionD = Octonion<double>;

} // namespace octma
