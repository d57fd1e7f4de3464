#pragma once

#include <vector>

#include "warpcurv/geometry.hpp"
#include "warpcurv/jet.hpp"
#include "warpcurv/warp_function.hpp"

namespace warpcurv::schwarzschild {

// Geometric units. The interior region is 0 < r < 2m.
struct Params {
    double m = 1.0;
    int samples = 50;
    double tolerance = 1e-12;

    void validate() const;
};

/// Proper time along the interior as a function of the areal radius nu:
///   mu = 2m acos(sqrt((2m - nu) / 2m)) - sqrt(nu (2m - nu)),
/// strictly increasing on [0, 2m] from 0 to m*pi.
double mu_of_nu(double nu, double m);

// dmu/dnu = sqrt(nu / (2m - nu)).
double dmu_dnu(double nu, double m);

/// Inverse of mu_of_nu on (0, m*pi): bisection to 1e-3 m, then Newton.
/// Above mu_of_nu(m) the solve runs on the horizon gap s = 2m - nu so that
/// nu close to 2m keeps full relative precision in s.
struct InteriorPoint {
    double nu = 0.0;
    double horizon_gap = 0.0;
};

InteriorPoint interior_point(double mu, double m, double tolerance = 1e-12);
double nu_of_mu(double mu, double m, double tolerance = 1e-12);

// f1(mu) = sqrt(2m / nu - 1) and f2(mu) = nu with nu = nu_of_mu(mu). Derivatives
// follow from dnu/dmu = f1 in closed form; nothing is differentiated through
// the root finder.
Jet2 f1_jet(double mu, double m, double tolerance = 1e-12);
Jet2 f2_jet(double mu, double m, double tolerance = 1e-12);

WarpFunction f1_warp(const Params& params);
WarpFunction f2_warp(const Params& params);

// (0, m*pi) x_{f1} R^1 x_{f2} S^2.
MultiplyWarpedSpacetime build_interior(const Params& params);

struct FlatnessSample {
    double mu = 0.0;
    double nu = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double f2_prime = 0.0;
    // (f2'^2 + 1) f2; equals 2m on the interior solution.
    double conserved = 0.0;
    std::vector<double> ricci_orthonormal;
    double max_abs_ricci = 0.0;
};

struct FlatnessReport {
    std::vector<FlatnessSample> samples;
    double max_residual = 0.0;
    double conserved_min = 0.0;
    double conserved_max = 0.0;
};

/// Evaluates the frame-normalised Ricci diagonal of a (R^1, S^2) two-fiber
/// spacetime at `samples` evenly spaced points of [lo, hi].
FlatnessReport ricci_flatness(const MultiplyWarpedSpacetime& spacetime, double lo, double hi, int samples,
                              const Angles& angles = {});

// ricci_flatness of build_interior(params) over [0.05 m pi, 0.95 m pi].
FlatnessReport verify_ricci_flat(const Params& params);

} // namespace warpcurv::schwarzschild
