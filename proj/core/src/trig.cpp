#include "octma/trig.hpp"

#include <numbers>

namespace octma {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Returns true if k had to be negated to reach its canonical representative
// (first nonzero entry positive); sine coefficients flip sign with it.
bool canonicalize(Freq& k) {
    for (int v = 0; v < 16; ++v) {
        if (k[v] > 0) return false;
        if (k[v] < 0) {
            for (int w = 0; w < 16; ++w) k[w] = -k[w];
            return true;
        }
    }
    return false;  // k = 0
}

bool is_zero_freq(const Freq& k) {
    for (int v = 0; v < 16; ++v)
        if (k[v] != 0) return false;
    return true;
}

} // namespace

void TrigPoly::add_cos(Freq k, double a) {
    if (a == 0.0) return;
    canonicalize(k);
    Mode& m = modes_[k];
    m.c += a;
    if (m.c == 0.0 && m.s == 0.0) modes_.erase(k);
}

void TrigPoly::add_sin(Freq k, double a) {
    if (a == 0.0) return;
    if (canonicalize(k)) a = -a;
    if (is_zero_freq(k)) return;  // sin(0) = 0
    Mode& m = modes_[k];
    m.s += a;
    if (m.c == 0.0 && m.s == 0.0) modes_.erase(k);
}

double TrigPoly::mean() const {
    auto it = modes_.find(Freq{});
    return it == modes_.end() ? 0.0 : it->second.c;
}

void TrigPoly::trim(double eps) {
    for (auto it = modes_.begin(); it != modes_.end();) {
        if (std::abs(it->second.c) <= eps && std::abs(it->second.s) <= eps)
            it = modes_.erase(it);
        else
            ++it;
    }
}

double TrigPoly::eval(const std::array<double, 16>& x) const {
    double r = 0.0;
    for (const auto& [k, m] : modes_) {
        double th = 0.0;
        for (int v = 0; v < 16; ++v)
            if (k[v] != 0) th += k[v] * x[v];
        th *= kTwoPi;
        r += m.c * std::cos(th) + m.s * std::sin(th);
    }
    return r;
}

TrigPoly TrigPoly::derivative(int v) const {
    TrigPoly r;
    for (const auto& [k, m] : modes_) {
        if (k[v] == 0) continue;
        const double w = kTwoPi * k[v];
        r.add_sin(k, -w * m.c);
        r.add_cos(k, w * m.s);
    }
    return r;
}

TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r = a;
    for (const auto& [k, m] : b.modes_) {
        r.add_cos(k, m.c);
        r.add_sin(k, m.s);
    }
    return r;
}

TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r = a;
    for (const auto& [k, m] : b.modes_) {
        r.add_cos(k, -m.c);
        r.add_sin(k, -m.s);
    }
    return r;
}

TrigPoly operator*(double s, const TrigPoly& a) {
    TrigPoly r;
    if (s == 0.0) return r;
    for (const auto& [k, m] : a.modes_) {
        r.add_cos(k, s * m.c);
        r.add_sin(k, s * m.s);
    }
    return r;
}

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
    TrigPoly r;
    for (const auto& [ka, ma] : a.modes_) {
        for (const auto& [kb, mb] : b.modes_) {
            Freq kp, km;
            for (int v = 0; v < 16; ++v) {
                kp[v] = ka[v] + kb[v];
                km[v] = ka[v] - kb[v];
            }
            // Product-to-sum identities for cos/sin pairs.
            r.add_cos(km, 0.5 * ma.c * mb.c);
            r.add_cos(kp, 0.5 * ma.c * mb.c);
            r.add_cos(km, 0.5 * ma.s * mb.s);
            r.add_cos(kp, -0.5 * ma.s * mb.s);
            r.add_sin(kp, 0.5 * ma.c * mb.s);
            r.add_sin(km, -0.5 * ma.c * mb.s);
            r.add_sin(kp, 0.5 * ma.s * mb.c);
            r.add_sin(km, 0.5 * ma.s * mb.c);
        }
    }
    return r;
}

HermMatrix2<double> HermTrigMatrix::eval(const std::array<double, 16>& x) const {
    OctonionD qv;
    for (int k = 0; k < 8; ++k) qv[k] = q[k].eval(x);
    return HermMatrix2<double>{d1.eval(x), d2.eval(x), qv};
}

HermTrigMatrix operator+(const HermTrigMatrix& a, const HermTrigMatrix& b) {
    HermTrigMatrix r;
    r.d1 = a.d1 + b.d1;
    r.d2 = a.d2 + b.d2;
    for (int k = 0; k < 8; ++k) r.q[k] = a.q[k] + b.q[k];
    return r;
}

HermTrigMatrix hess_trig(const TrigPoly& f) {
    HermTrigMatrix h;
    std::array<TrigPoly, 16> d1;
    for (int v = 0; v < 16; ++v) d1[v] = f.derivative(v);
    for (int p = 0; p < 8; ++p) {
        h.d1 += d1[p].derivative(p);
        h.d2 += d1[8 + p].derivative(8 + p);
    }
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            TrigPoly m = d1[a].derivative(8 + b);
            if (m.is_zero()) continue;
            const double sgn = (b > 0 ? -1.0 : 1.0) * kMulSgn[a][b];  // e_a * conj(e_b)
            h.q[kMulIdx[a][b]] += sgn * m;
        }
    return h;
}

TrigPoly mixed_det(const HermTrigMatrix& a, const HermTrigMatrix& b) {
    TrigPoly r = a.d1 * b.d2 + b.d1 * a.d2;
    for (int k = 0; k < 8; ++k) r -= 2.0 * (a.q[k] * b.q[k]);
    return 0.5 * r;
}

TrigPoly det_trig(const HermTrigMatrix& a) {
    TrigPoly r = a.d1 * a.d2;
    for (int k = 0; k < 8; ++k) r -= a.q[k] * a.q[k];
    return r;
}

TorusHermField::TorusHermField(HermMatrix2<double> constant, std::optional<TrigPoly> potential)
    : constant_(std::move(constant)), potential_(std::move(potential)) {
    if (potential_) matrix_ = hess_trig(*potential_);
    matrix_.d1 += TrigPoly::constant(constant_.a);
    matrix_.d2 += TrigPoly::constant(constant_.b);
    for (int k = 0; k < 8; ++k) matrix_.q[k] += TrigPoly::constant(constant_.q[k]);
}

HermMatrix2<double> TorusHermField::eval(const std::array<double, 16>& x) const {
    return matrix_.eval(x);
}

} // namespace octma
