#pragma once

#include <string>
#include <vector>

#include "warpcurv/geometry.hpp"

namespace warpcurv {

/// right * u(t - p) + left * u(p - t) + delta * delta_p(t).
struct DistributionalScalar {
    double left = 0.0;
    double right = 0.0;
    double delta = 0.0;

    static DistributionalScalar classical(double v) { return {v, v, 0.0}; }
    static DistributionalScalar heaviside(double left, double right) { return {left, right, 0.0}; }

    bool is_classical() const { return left == right && delta == 0.0; }
    // No jump across p (relative tolerance); deltas are allowed.
    bool is_continuous(double tolerance = 1e-12) const;
    double jump() const { return right - left; }

    friend bool operator==(const DistributionalScalar&, const DistributionalScalar&) = default;
};

DistributionalScalar operator+(const DistributionalScalar& a, const DistributionalScalar& b);
DistributionalScalar operator-(const DistributionalScalar& a, const DistributionalScalar& b);
DistributionalScalar operator-(const DistributionalScalar& a);
DistributionalScalar operator*(double s, const DistributionalScalar& a);

// Product of two distributional scalars. A delta may only multiply a factor
// that is continuous at p; anything else throws DistributionError naming
// `term`.
DistributionalScalar multiply(const DistributionalScalar& a, const DistributionalScalar& b, const std::string& term);
DistributionalScalar divide(const DistributionalScalar& a, const DistributionalScalar& b, const std::string& term);

// f_i'' split into its one-sided regular parts and the delta coefficient
// [f_i'] at the junction.
DistributionalScalar hessian_distributional(const MultiplyWarpedSpacetime& m, int fiber);

// Delta coefficient of Ric(d_t, d_t): -sum_i d_i [f_i'] / f_i(p).
double ricci_delta_tt(const MultiplyWarpedSpacetime& m);

struct FiberJunction {
    std::string label;
    int dim = 1;
    double warp_value = 0.0;
    double jump = 0.0;
    // Jump of the shape operator eigenvalue on this fiber: -[f_i'] / f_i(p),
    // with multiplicity dim.
    double shape_jump = 0.0;
    DistributionalScalar hessian;
};

struct DistributionalRicciEntry {
    FrameIndex index;
    DistributionalScalar value;
};

struct JunctionReport {
    double junction = 0.0;
    double theta = 0.0;
    std::vector<FiberJunction> fibers;
    // Diagonal coordinate Ricci components in coordinate order.
    std::vector<DistributionalRicciEntry> ricci;
    bool is_C1 = true;

    double ricci_delta(int coordinate) const { return ricci.at(static_cast<std::size_t>(coordinate)).value.delta; }
    bool all_deltas_vanish() const;
};

// Distributional diagonal Ricci at the junction.
std::vector<DistributionalRicciEntry> ricci_distributional(const MultiplyWarpedSpacetime& m,
                                                           const Angles& angles = {});

/// Classifies the junction hypersurface {p} x F1 x ... x Fn. The metric is C1
/// across it exactly when every fiber's shape-operator jump vanishes.
JunctionReport shape_operator_jump(const MultiplyWarpedSpacetime& m, const Angles& angles = {});

} // namespace warpcurv
