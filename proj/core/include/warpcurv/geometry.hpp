#pragma once

#include <array>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "warpcurv/jet.hpp"
#include "warpcurv/tensor.hpp"
#include "warpcurv/warp_function.hpp"

namespace warpcurv {

/// Riemannian fiber of constant sectional curvature.
///
/// Coordinate charts: Cartesian for curvature 0 (any dimension). A curved
/// fiber must be two-dimensional and uses (theta, phi) with metric
/// (dtheta^2 + sin^2(theta) dphi^2) / k for k > 0, or sinh^2 for k < 0.
struct FiberSpec {
    int dim = 1;
    double curvature = 0.0;
    std::string label;

    void validate() const;
    bool is_curved() const { return curvature != 0.0; }
};

// Diagonal entry of the fiber's own coordinate metric g_i along `axis`.
double fiber_metric_factor(const FiberSpec& spec, int axis, double theta);

struct WarpedFiber {
    FiberSpec spec;
    WarpFunction warp;
};

// Polar angle used by curved fibers. The default places every curved fiber on
// its equator.
struct Angles {
    double theta = std::numbers::pi / 2;
};

/// Coordinate direction: the base direction t, or axis `axis` of fiber `fiber`.
struct FrameIndex {
    enum class Kind { Base, Fiber };

    Kind kind = Kind::Base;
    int fiber = -1;
    int axis = -1;

    static constexpr FrameIndex base() { return {}; }
    static constexpr FrameIndex fiber_axis(int i, int a) { return {Kind::Fiber, i, a}; }

    bool is_base() const { return kind == Kind::Base; }
    friend bool operator==(const FrameIndex&, const FrameIndex&) = default;
};

/// B x_{f1} F1 x ... x_{fn} Fn with B an open interval carrying -dt^2 and
/// metric g = -dt^2 + sum_i f_i(t)^2 g_i.
///
/// Coordinates are ordered t first, then each fiber's axes in fiber order.
class MultiplyWarpedSpacetime {
public:
    MultiplyWarpedSpacetime(Interval base, std::vector<WarpedFiber> fibers,
                            std::optional<double> declared_junction = std::nullopt);

    const Interval& base() const { return base_; }
    const std::vector<WarpedFiber>& fibers() const { return fibers_; }
    const WarpedFiber& fiber(int i) const { return fibers_.at(static_cast<std::size_t>(i)); }
    int fiber_count() const { return static_cast<int>(fibers_.size()); }
    const std::optional<double>& junction() const { return junction_; }

    // Total dimension 1 + sum d_i.
    int dimension() const { return dimension_; }
    FrameIndex frame(int coordinate) const;
    int coordinate(const FrameIndex& index) const;

    std::vector<Jet2> jets(double t, Side side) const;
    // Diagonal metric entry g_aa at (t, theta).
    double metric_diagonal(int coordinate, double t, const Angles& angles, Side side) const;

private:
    Interval base_;
    std::vector<WarpedFiber> fibers_;
    std::optional<double> junction_;
    int dimension_ = 1;
    std::vector<FrameIndex> frames_;
};

// f_i'/f_i: nabla_X V_i = X^1 (f_i'/f_i) V_i.
double conn_base_fiber(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side = Side::Auto);

// Coefficient of <V_i, W_i> d/dt in the normal part of nabla_{V_i} W_i.
double second_fundamental_scalar(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side = Side::Auto);

// Regular part f_i'' of the base Hessian of f_i on the chosen side.
double hessian_coeff(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side = Side::Auto);

/// Coordinate-basis Riemann component R_{abcd} (all indices down) with
/// R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + ..., so that
/// Ric_{bd} = R^a_{bad}.
double riemann_component(const MultiplyWarpedSpacetime& m, const std::array<FrameIndex, 4>& indices, double t,
                         const Angles& angles = {}, Side side = Side::Auto);

Tensor4 riemann_tensor(const MultiplyWarpedSpacetime& m, double t, const Angles& angles = {},
                       Side side = Side::Auto);

struct RicciEntry {
    FrameIndex row;
    FrameIndex col;
    double value = 0.0;
};

// Diagonal coordinate Ricci components, one per coordinate, in coordinate
// order. Mixed-kind and off-diagonal components vanish identically and are
// never listed.
std::vector<RicciEntry> ricci_components(const MultiplyWarpedSpacetime& m, double t, Side side = Side::Auto,
                                         const Angles& angles = {});

// Full d x d coordinate Ricci matrix.
Matrix ricci_matrix(const MultiplyWarpedSpacetime& m, double t, Side side = Side::Auto, const Angles& angles = {});

// Frame-normalised diagonal Ricci: Ric_aa / g_aa, so the base entry is -Ric_tt.
std::vector<double> ricci_orthonormal(const MultiplyWarpedSpacetime& m, double t, Side side = Side::Auto,
                                      const Angles& angles = {});

double scalar_curvature(const MultiplyWarpedSpacetime& m, double t, Side side = Side::Auto,
                        const Angles& angles = {});

/// Closed-form Ricci diagonal (R_11, R_22, R_33, R_44) of
/// -dmu^2 + f1^2 dnu^2 + f2^2 (dtheta^2 + sin^2(theta) dphi^2).
std::array<double, 4> ricci_closed_form_r1_s2(const Jet2& f1, const Jet2& f2, double theta);

} // namespace warpcurv
