#pragma once

#include <cmath>

namespace warpcurv {

/// Second-order forward-mode dual number: the value of a function of one
/// variable together with its first and second derivatives.
///
/// Elementary functions propagate by the second-order chain rule
///   (g o u)'' = g''(u) u'^2 + g'(u) u''
/// so the derivatives are exact up to floating point rounding.
struct Jet2 {
    double value = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
    static constexpr Jet2 variable(double t) { return {t, 1.0, 0.0}; }

    bool finite() const { return std::isfinite(value) && std::isfinite(d1) && std::isfinite(d2); }

    friend constexpr bool operator==(const Jet2&, const Jet2&) = default;
};

constexpr Jet2 operator+(Jet2 a, Jet2 b) { return {a.value + b.value, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet2 operator-(Jet2 a, Jet2 b) { return {a.value - b.value, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet2 operator-(Jet2 a) { return {-a.value, -a.d1, -a.d2}; }

constexpr Jet2 operator*(Jet2 a, Jet2 b) {
    return {a.value * b.value,
            a.d1 * b.value + a.value * b.d1,
            a.d2 * b.value + 2.0 * a.d1 * b.d1 + a.value * b.d2};
}

constexpr Jet2 operator/(Jet2 a, Jet2 b) {
    const double q = a.value / b.value;
    const double q1 = (a.d1 - q * b.d1) / b.value;
    const double q2 = (a.d2 - 2.0 * q1 * b.d1 - q * b.d2) / b.value;
    return {q, q1, q2};
}

// Apply a scalar function g with known g(u), g'(u), g''(u) to a jet u.
constexpr Jet2 compose(Jet2 u, double g, double dg, double ddg) {
    return {g, dg * u.d1, ddg * u.d1 * u.d1 + dg * u.d2};
}

Jet2 sin(Jet2 u);
Jet2 cos(Jet2 u);
Jet2 sinh(Jet2 u);
Jet2 cosh(Jet2 u);
Jet2 exp(Jet2 u);
Jet2 log(Jet2 u);
Jet2 sqrt(Jet2 u);
// u^c for a constant exponent; integer exponents are valid for negative u.
Jet2 pow(Jet2 u, double c);
// u^v for a variable exponent, computed as exp(v log u); requires u > 0.
Jet2 pow(Jet2 u, Jet2 v);

} // namespace warpcurv
