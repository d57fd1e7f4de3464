#include "warpcurv/jet.hpp"

namespace warpcurv {

Jet2 sin(Jet2 u) {
    const double s = std::sin(u.value), c = std::cos(u.value);
    return compose(u, s, c, -s);
}

Jet2 cos(Jet2 u) {
    const double s = std::sin(u.value), c = std::cos(u.value);
    return compose(u, c, -s, -c);
}

Jet2 sinh(Jet2 u) {
    const double s = std::sinh(u.value), c = std::cosh(u.value);
    return compose(u, s, c, s);
}

Jet2 cosh(Jet2 u) {
    const double s = std::sinh(u.value), c = std::cosh(u.value);
    return compose(u, c, s, c);
}

Jet2 exp(Jet2 u) {
    const double e = std::exp(u.value);
    return compose(u, e, e, e);
}

Jet2 log(Jet2 u) {
    const double inv = 1.0 / u.value;
    return compose(u, std::log(u.value), inv, -inv * inv);
}

Jet2 sqrt(Jet2 u) {
    return pow(u, 0.5);
}

Jet2 pow(Jet2 u, double c) {
    if (c == 0.0) {
        return Jet2::constant(1.0);
    }
    if (c == 1.0) {
        return u;
    }
    const double x = u.value;
    const double g = std::pow(x, c);
    const double dg = c * std::pow(x, c - 1.0);
    const double ddg = (c == 2.0) ? 2.0 : c * (c - 1.0) * std::pow(x, c - 2.0);
    return compose(u, g, dg, ddg);
}

Jet2 pow(Jet2 u, Jet2 v) {
    if (v.d1 == 0.0 && v.d2 == 0.0) {
        return pow(u, v.value);
    }
    return exp(v * log(u));
}

} // namespace warpcurv
