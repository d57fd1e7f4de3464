#pragma once

#include <cmath>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "warpcurv/geometry.hpp"

namespace warpcurv::testing {

// Fourth-order central differences of a scalar function; used as the
// independent derivative oracle for the AD path.
template <typename F>
double central_d1(F&& f, double t, double h = 1e-5) {
    return (f(t + h) - f(t - h)) / (2.0 * h);
}

template <typename F>
double central_d2(F&& f, double t, double h = 1e-4) {
    return (-f(t + 2 * h) + 16 * f(t + h) - 30 * f(t) + 16 * f(t - h) - f(t - 2 * h)) / (12 * h * h);
}

inline bool close_rel(double a, double b, double rel, double abs_floor = 0.0) {
    return std::abs(a - b) <= std::max(rel * std::max(std::abs(a), std::abs(b)), abs_floor);
}

struct FiberDef {
    int dim;
    double curvature;
    std::string warp;
    std::string label = "F";
};

inline MultiplyWarpedSpacetime make_spacetime(Interval base, const std::vector<FiberDef>& defs,
                                              std::optional<double> junction = std::nullopt) {
    std::vector<WarpedFiber> fibers;
    for (const auto& d : defs) {
        fibers.push_back({FiberSpec{d.dim, d.curvature, d.label}, WarpFunction::parse(d.warp, base)});
    }
    return MultiplyWarpedSpacetime(base, std::move(fibers), junction);
}

} // namespace warpcurv::testing
