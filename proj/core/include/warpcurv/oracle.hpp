#pragma once

#include <vector>

#include "warpcurv/geometry.hpp"
#include "warpcurv/tensor.hpp"

namespace warpcurv::oracle {

/// Finite-difference curvature engine. It only ever asks a warp function for
/// its value, builds the full coordinate metric, differentiates it
/// numerically and applies the coordinate formulas for Christoffel symbols,
/// Riemann and Ricci.
struct Options {
    double step = 1e-3;
    bool richardson = true;
};

struct MetricAtPoint {
    std::vector<double> point;
    Matrix g;
    Matrix g_inv;
    // dg(c, a, b) = d_c g_ab
    Tensor3 dg;
    // ddg(c, d, a, b) = d_c d_d g_ab
    Tensor4 ddg;
};

// Chart point (t, fiber coordinates...) with curved fibers at polar angle
// theta and every other fiber coordinate at 0.
std::vector<double> chart_point(const MultiplyWarpedSpacetime& m, double t, const Angles& angles = {});

// Metric components at an arbitrary chart point.
Matrix metric(const MultiplyWarpedSpacetime& m, const std::vector<double>& point);

MetricAtPoint assemble_metric(const MultiplyWarpedSpacetime& m, const std::vector<double>& point,
                              const Options& options = {});

// christoffel(a, b, c) = Gamma^a_{bc}
Tensor3 christoffel(const MetricAtPoint& metric);

struct Curvature {
    Tensor3 christoffel;
    // riemann(a, b, c, d) = R_{abcd}, same convention as the analytic path.
    Tensor4 riemann;
    Matrix ricci;
    double scalar = 0.0;
};

Curvature riemann_ricci(const MetricAtPoint& metric);

Curvature curvature_at(const MultiplyWarpedSpacetime& m, double t, const Angles& angles = {},
                       const Options& options = {});

/// Agreement between the analytic and finite-difference pipelines. A
/// component passes when its relative error is below `relative`, or, if the
/// analytic value is smaller than `small` in magnitude, when its absolute
/// error is below `absolute`.
struct Tolerance {
    double relative = 1e-6;
    double absolute = 1e-8;
    double small = 1e-4;
};

struct Comparison {
    double max_riemann_abs_error = 0.0;
    double max_ricci_abs_error = 0.0;
    // Largest error as a fraction of its allowed bound; < 1 means pass.
    double worst_ratio = 0.0;
    // |analytic - oracle| per diagonal Ricci component.
    std::vector<double> ricci_diagonal_error;
    int failures = 0;

    bool pass() const { return failures == 0; }
};

Comparison compare(const MultiplyWarpedSpacetime& m, double t, const Angles& angles = {}, const Options& options = {},
                   const Tolerance& tolerance = {});

} // namespace warpcurv::oracle
