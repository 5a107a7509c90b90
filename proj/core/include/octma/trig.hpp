#pragma once

#include <array>
#include <cmath>
#include <map>
#include <optional>

#include "octma/herm2.hpp"

namespace octma {

// Frequency vector of a Fourier mode 2*pi*(k . x) on the unit-covolume torus.
using Freq = std::array<int, 16>;

// Real truncated Fourier series on R^16 / Z^16, stored sparsely as one
// (cosine, sine) coefficient pair per canonical frequency representative.
// Of each +-k pair only the vector whose first nonzero entry is positive is
// stored; the k = 0 sine slot is identically absent.
class TrigPoly {
public:
    struct Mode {
        double c = 0.0;  // cosine coefficient
        double s = 0.0;  // sine coefficient
    };
    using ModeMap = std::map<Freq, Mode>;

    TrigPoly() = default;

    static TrigPoly constant(double a) {
        TrigPoly p;
        p.add_cos(Freq{}, a);
        return p;
    }
    static TrigPoly cosine(const Freq& k, double a = 1.0) {
        TrigPoly p;
        p.add_cos(k, a);
        return p;
    }
    static TrigPoly sine(const Freq& k, double a = 1.0) {
        TrigPoly p;
        p.add_sin(k, a);
        return p;
    }

    void add_cos(Freq k, double a);
    void add_sin(Freq k, double a);

    const ModeMap& modes() const { return modes_; }
    bool is_zero() const { return modes_.empty(); }
    double mean() const;

    // Drop modes with both coefficients of magnitude <= eps.
    void trim(double eps = 0.0);

    double eval(const std::array<double, 16>& x) const;
    TrigPoly derivative(int v) const;

    friend TrigPoly operator+(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator-(const TrigPoly& a, const TrigPoly& b);
    friend TrigPoly operator*(double s, const TrigPoly& a);
    friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
    TrigPoly& operator+=(const TrigPoly& b) { return *this = *this + b; }
    TrigPoly& operator-=(const TrigPoly& b) { return *this = *this - b; }

private:
    ModeMap modes_;
};

// Exact integral over the torus (unit covolume): the mean value, i.e. the
// constant Fourier coefficient.  Overloads expand products symbolically.
inline double integrate_torus(const TrigPoly& p) { return p.mean(); }
inline double integrate_torus(const TrigPoly& a, const TrigPoly& b) { return (a * b).mean(); }
inline double integrate_torus(const TrigPoly& a, const TrigPoly& b, const TrigPoly& c) {
    return (a * b * c).mean();
}

// Octonion-Hermitian 2x2 matrix with trig-polynomial entries: real diagonal
// d1, d2 and off-diagonal octonion q (componentwise series).
struct HermTrigMatrix {
    TrigPoly d1, d2;
    std::array<TrigPoly, 8> q;

    HermMatrix2<double> eval(const std::array<double, 16>& x) const;
    friend HermTrigMatrix operator+(const HermTrigMatrix& a, const HermTrigMatrix& b);
};

// Octonionic Hessian of a series: entry (i,j) = sum_{p,q} e_p d2f/dx_i^p dx_j^q e_q-bar.
HermTrigMatrix hess_trig(const TrigPoly& f);

// Mixed determinant with trig-polynomial entries (exact in coefficients).
TrigPoly mixed_det(const HermTrigMatrix& a, const HermTrigMatrix& b);
// det = d1 d2 - |q|^2 as a series.
TrigPoly det_trig(const HermTrigMatrix& a);

// Constant positive part plus the octonionic Hessian of an optional
// potential; by construction the field is globally a Hessian.
class TorusHermField {
public:
    explicit TorusHermField(HermMatrix2<double> constant,
                            std::optional<TrigPoly> potential = std::nullopt);

    HermMatrix2<double> eval(const std::array<double, 16>& x) const;
    // The full field as a trig-matrix (constant folded in).
    const HermTrigMatrix& matrix() const { return matrix_; }
    const HermMatrix2<double>& constant() const { return constant_; }
    const std::optional<TrigPoly>& potential() const { return potential_; }

private:
    HermMatrix2<double> constant_;
    std::optional<TrigPoly> potential_;
    HermTrigMatrix matrix_;
};

} // namespace octma
