#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <concepts>
#include <string>

#include "octma/errors.hpp"

namespace octma {

// Exact scalar backend: arbitrary-precision rationals.  Kept behind an alias
// so every algebraic template names it the same way.
using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A scalar is any ordered field-ish type the algebra templates accept.
// In practice this is `double` or `Rational`; the concept just documents the
// operations the templates rely on.
template <class S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a < b } -> std::convertible_to<bool>;
    S(0);
    S(1);
};

template <Scalar S>
inline constexpr bool is_exact_scalar = false;
template <>
inline constexpr bool is_exact_scalar<Rational> = true;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

inline double scalar_sqrt(double x) { return std::sqrt(x); }

// Exact square root of a rational; throws InexactSqrt unless both numerator
// and denominator are perfect squares.
inline Rational scalar_sqrt(const Rational& x) {
    if (x < 0) throw InexactSqrt();
    Integer num = boost::multiprecision::numerator(x);
    Integer den = boost::multiprecision::denominator(x);
    Integer rn  = boost::multiprecision::sqrt(num);
    Integer rd  = boost::multiprecision::sqrt(den);
    if (rn * rn != num || rd * rd != den) throw InexactSqrt();
    return Rational(rn, rd);
}

inline std::string scalar_to_string(double x) { return std::to_string(x); }
inline std::string scalar_to_string(const Rational& x) { return x.str(); }

} // namespace octma
