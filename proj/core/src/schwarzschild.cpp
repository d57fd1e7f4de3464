#include "warpcurv/schwarzschild.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "warpcurv/error.hpp"

namespace warpcurv::schwarzschild {

namespace {

constexpr double kPi = std::numbers::pi;

// mu_of_nu(2m - s) = m pi - horizon_time(s).
double horizon_time(double s, double m) {
    const double x = std::clamp(std::sqrt(s / (2.0 * m)), 0.0, 1.0);
    return 2.0 * m * std::asin(x) + std::sqrt(s * (2.0 * m - s));
}

double horizon_time_derivative(double s, double m) { return std::sqrt((2.0 * m - s) / s); }

// Solves g(x) = target for x in [0, m] with g increasing.
template <typename G, typename DG>
double solve_increasing(G g, DG dg, double target, double m) {
    double lo = 0.0, hi = m;
    while (hi - lo > 1e-3 * m) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) < target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 100; ++iter) {
        const double slope = dg(x);
        if (!(slope > 0.0) || !std::isfinite(slope)) break;
        const double step = (g(x) - target) / slope;
        double next = x - step;
        // Newton may overshoot near the infinite-slope end; stay in the bracket.
        if (!(next > lo && next < hi)) {
            next = 0.5 * (x + (step > 0.0 ? lo : hi));
        }
        if (g(next) < target) {
            lo = std::max(lo, next);
        } else {
            hi = std::min(hi, next);
        }
        const double moved = std::abs(next - x);
        x = next;
        if (moved <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(x, 1e-300)) break;
    }
    return x;
}

} // namespace

void Params::validate() const {
    if (!(m > 0.0) || !std::isfinite(m)) {
        throw ConstructionError("mass m must be positive");
    }
    if (samples < 1) {
        throw ConstructionError("samples must be positive");
    }
    if (!(tolerance > 0.0 && tolerance < 1e-6)) {
        throw ConstructionError("inversion tolerance must lie in (0, 1e-6)");
    }
}

double mu_of_nu(double nu, double m) {
    if (!(m > 0.0)) {
        throw EvaluationError("mass m must be positive");
    }
    if (!(nu >= 0.0 && nu <= 2.0 * m)) {
        throw EvaluationError("areal radius " + std::to_string(nu) + " outside [0, 2m]");
    }
    const double c = std::clamp(std::sqrt((2.0 * m - nu) / (2.0 * m)), 0.0, 1.0);
    return 2.0 * m * std::acos(c) - std::sqrt(nu * (2.0 * m - nu));
}

double dmu_dnu(double nu, double m) { return std::sqrt(nu / (2.0 * m - nu)); }

InteriorPoint interior_point(double mu, double m, double tolerance) {
    if (!(m > 0.0)) {
        throw EvaluationError("mass m must be positive");
    }
    if (!(mu > 0.0 && mu < m * kPi)) {
        throw EvaluationError("proper time " + std::to_string(mu) + " outside (0, m pi)");
    }
    InteriorPoint p;
    double residual = 0.0;
    if (mu <= mu_of_nu(m, m)) {
        p.nu = solve_increasing([m](double nu) { return mu_of_nu(nu, m); },
                                [m](double nu) { return dmu_dnu(nu, m); }, mu, m);
        p.horizon_gap = 2.0 * m - p.nu;
        residual = std::abs(mu_of_nu(p.nu, m) - mu);
    } else {
        const double target = m * kPi - mu;
        p.horizon_gap = solve_increasing([m](double s) { return horizon_time(s, m); },
                                         [m](double s) { return horizon_time_derivative(s, m); }, target, m);
        p.nu = 2.0 * m - p.horizon_gap;
        residual = std::abs(horizon_time(p.horizon_gap, m) - target);
    }
    if (!(residual < tolerance * std::max(1.0, m))) {
        throw EvaluationError("inversion of mu=" + std::to_string(mu) + " did not converge (residual " +
                              std::to_string(residual) + ")");
    }
    return p;
}

double nu_of_mu(double mu, double m, double tolerance) { return interior_point(mu, m, tolerance).nu; }

Jet2 f1_jet(double mu, double m, double tolerance) {
    const InteriorPoint p = interior_point(mu, m, tolerance);
    const double f1 = std::sqrt(p.horizon_gap / p.nu);
    const double nu3 = p.nu * p.nu * p.nu;
    return {f1, -m / (p.nu * p.nu), 2.0 * m * f1 / nu3};
}

Jet2 f2_jet(double mu, double m, double tolerance) {
    const InteriorPoint p = interior_point(mu, m, tolerance);
    return {p.nu, std::sqrt(p.horizon_gap / p.nu), -m / (p.nu * p.nu)};
}

WarpFunction f1_warp(const Params& params) {
    params.validate();
    const double m = params.m, tol = params.tolerance;
    return WarpFunction::numeric([m, tol](double mu) { return f1_jet(mu, m, tol); }, Interval{0.0, m * kPi},
                                 "schwarzschild_f1(m=" + std::to_string(m) + ")", [m, tol](double mu) {
                                     const InteriorPoint p = interior_point(mu, m, tol);
                                     return std::sqrt(p.horizon_gap / p.nu);
                                 });
}

WarpFunction f2_warp(const Params& params) {
    params.validate();
    const double m = params.m, tol = params.tolerance;
    return WarpFunction::numeric([m, tol](double mu) { return f2_jet(mu, m, tol); }, Interval{0.0, m * kPi},
                                 "schwarzschild_f2(m=" + std::to_string(m) + ")",
                                 [m, tol](double mu) { return nu_of_mu(mu, m, tol); });
}

MultiplyWarpedSpacetime build_interior(const Params& params) {
    params.validate();
    std::vector<WarpedFiber> fibers;
    fibers.push_back({FiberSpec{1, 0.0, "nu"}, f1_warp(params)});
    fibers.push_back({FiberSpec{2, 1.0, "S2"}, f2_warp(params)});
    return MultiplyWarpedSpacetime(Interval{0.0, params.m * kPi}, std::move(fibers));
}

FlatnessReport ricci_flatness(const MultiplyWarpedSpacetime& spacetime, double lo, double hi, int samples,
                              const Angles& angles) {
    if (spacetime.fiber_count() != 2 || spacetime.fiber(0).spec.dim != 1 || spacetime.fiber(1).spec.dim != 2) {
        throw EvaluationError("flatness check expects fibers (R^1, S^2)");
    }
    if (samples < 1) {
        throw EvaluationError("samples must be positive");
    }
    FlatnessReport report;
    report.conserved_min = std::numeric_limits<double>::infinity();
    report.conserved_max = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const double mu = samples == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * k / (samples - 1);
        FlatnessSample s;
        s.mu = mu;
        const Jet2 f1 = spacetime.fiber(0).warp.jet(mu);
        const Jet2 f2 = spacetime.fiber(1).warp.jet(mu);
        s.f1 = f1.value;
        s.f2 = f2.value;
        s.nu = f2.value;
        s.f2_prime = f2.d1;
        s.conserved = (f2.d1 * f2.d1 + 1.0) * f2.value;
        s.ricci_orthonormal = ricci_orthonormal(spacetime, mu, Side::Auto, angles);
        for (double v : s.ricci_orthonormal) s.max_abs_ricci = std::max(s.max_abs_ricci, std::abs(v));
        report.max_residual = std::max(report.max_residual, s.max_abs_ricci);
        report.conserved_min = std::min(report.conserved_min, s.conserved);
        report.conserved_max = std::max(report.conserved_max, s.conserved);
        report.samples.push_back(std::move(s));
    }
    return report;
}

FlatnessReport verify_ricci_flat(const Params& params) {
    const MultiplyWarpedSpacetime m = build_interior(params);
    return ricci_flatness(m, 0.05 * params.m * kPi, 0.95 * params.m * kPi, params.samples);
}

} // namespace warpcurv::schwarzschild
