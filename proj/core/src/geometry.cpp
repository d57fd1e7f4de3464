#include "warpcurv/geometry.hpp"

#include <cmath>
#include <utility>

#include "warpcurv/error.hpp"

namespace warpcurv {

void FiberSpec::validate() const {
    if (dim < 1) {
        throw ConstructionError("fiber '" + label + "' must have dimension >= 1");
    }
    if (!std::isfinite(curvature)) {
        throw ConstructionError("fiber '" + label + "' has non-finite curvature");
    }
    if (dim == 1 && curvature != 0.0) {
        throw ConstructionError("one-dimensional fiber '" + label + "' must be flat");
    }
    if (curvature != 0.0 && dim != 2) {
        throw ConstructionError("curved fiber '" + label + "' must be two-dimensional; only flat fibers have a chart in dimension " +
                                std::to_string(dim));
    }
}

double fiber_metric_factor(const FiberSpec& spec, int axis, double theta) {
    if (spec.curvature == 0.0) return 1.0;
    const double radius2 = 1.0 / std::abs(spec.curvature);
    if (axis == 0) return radius2;
    const double s = spec.curvature > 0.0 ? std::sin(theta) : std::sinh(theta);
    return radius2 * s * s;
}

MultiplyWarpedSpacetime::MultiplyWarpedSpacetime(Interval base, std::vector<WarpedFiber> fibers,
                                                 std::optional<double> declared_junction)
    : base_(base), fibers_(std::move(fibers)) {
    if (!(std::isfinite(base_.a) && std::isfinite(base_.b) && base_.a < base_.b)) {
        throw ConstructionError("base must be a finite interval (a, b) with a < b");
    }
    if (fibers_.empty()) {
        throw ConstructionError("a multiply warped product needs at least one fiber");
    }
    frames_.push_back(FrameIndex::base());
    for (int i = 0; i < fiber_count(); ++i) {
        const WarpedFiber& f = fibers_[static_cast<std::size_t>(i)];
        f.spec.validate();
        if (!(f.warp.domain() == base_)) {
            throw ConstructionError("warp of fiber '" + f.spec.label + "' is defined on a different interval than the base");
        }
        if (const auto& p = f.warp.junction()) {
            if (junction_ && *junction_ != *p) {
                throw ConstructionError("all piecewise warps must share one junction");
            }
            junction_ = *p;
        }
        for (int axis = 0; axis < f.spec.dim; ++axis) {
            frames_.push_back(FrameIndex::fiber_axis(i, axis));
        }
        dimension_ += f.spec.dim;
    }
    if (declared_junction) {
        if (junction_ && *junction_ != *declared_junction) {
            throw ConstructionError("declared junction does not match the junction of the piecewise warps");
        }
        if (!base_.contains(*declared_junction)) {
            throw ConstructionError("declared junction lies outside the base interval");
        }
        junction_ = declared_junction;
    }
}

FrameIndex MultiplyWarpedSpacetime::frame(int coordinate) const {
    if (coordinate < 0 || coordinate >= dimension_) {
        throw EvaluationError("coordinate index " + std::to_string(coordinate) + " out of range");
    }
    return frames_[static_cast<std::size_t>(coordinate)];
}

int MultiplyWarpedSpacetime::coordinate(const FrameIndex& index) const {
    if (index.is_base()) return 0;
    if (index.fiber < 0 || index.fiber >= fiber_count() || index.axis < 0 ||
        index.axis >= fiber(index.fiber).spec.dim) {
        throw EvaluationError("invalid fiber index (" + std::to_string(index.fiber) + ", " +
                              std::to_string(index.axis) + ")");
    }
    int c = 1;
    for (int i = 0; i < index.fiber; ++i) c += fiber(i).spec.dim;
    return c + index.axis;
}

std::vector<Jet2> MultiplyWarpedSpacetime::jets(double t, Side side) const {
    std::vector<Jet2> out;
    out.reserve(fibers_.size());
    for (const auto& f : fibers_) out.push_back(f.warp.jet(t, side));
    return out;
}

double MultiplyWarpedSpacetime::metric_diagonal(int coordinate, double t, const Angles& angles, Side side) const {
    const FrameIndex idx = frame(coordinate);
    if (idx.is_base()) return -1.0;
    const WarpedFiber& f = fiber(idx.fiber);
    const double w = f.warp.value(t, side);
    return w * w * fiber_metric_factor(f.spec, idx.axis, angles.theta);
}

double conn_base_fiber(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side) {
    const Jet2 j = m.fiber(fiber).warp.jet(t, side);
    return j.d1 / j.value;
}

double second_fundamental_scalar(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side) {
    return conn_base_fiber(m, fiber, t, side);
}

double hessian_coeff(const MultiplyWarpedSpacetime& m, int fiber, double t, Side side) {
    return m.fiber(fiber).warp.jet(t, side).d2;
}

namespace {

// R_{abab} for a != b. Every other lowered component is zero or follows from
// the pair symmetries.
double sectional_lowered(const MultiplyWarpedSpacetime& m, const std::vector<Jet2>& jets, FrameIndex a,
                         FrameIndex b, double theta) {
    if (a.is_base() && b.is_base()) return 0.0;
    // Fixed operand order so that R_abab and R_baba round identically.
    if (m.coordinate(b) < m.coordinate(a)) std::swap(a, b);
    if (a.is_base() || b.is_base()) {
        const FrameIndex& u = a.is_base() ? b : a;
        const Jet2& f = jets[static_cast<std::size_t>(u.fiber)];
        const double h = fiber_metric_factor(m.fiber(u.fiber).spec, u.axis, theta);
        return -f.value * f.d2 * h;
    }
    const FiberSpec& sa = m.fiber(a.fiber).spec;
    const FiberSpec& sb = m.fiber(b.fiber).spec;
    const double ha = fiber_metric_factor(sa, a.axis, theta);
    const double hb = fiber_metric_factor(sb, b.axis, theta);
    const Jet2& fa = jets[static_cast<std::size_t>(a.fiber)];
    const Jet2& fb = jets[static_cast<std::size_t>(b.fiber)];
    if (a.fiber == b.fiber) {
        return fa.value * fa.value * (sa.curvature + fa.d1 * fa.d1) * ha * hb;
    }
    return fa.value * fb.value * fa.d1 * fb.d1 * ha * hb;
}

double riemann_from_jets(const MultiplyWarpedSpacetime& m, const std::vector<Jet2>& jets,
                         const std::array<FrameIndex, 4>& idx, double theta) {
    const auto& [a, b, c, d] = idx;
    if (a == b || c == d) return 0.0;
    double sign = 0.0;
    if (a == c && b == d) {
        sign = 1.0;
    } else if (a == d && b == c) {
        sign = -1.0;
    } else {
        return 0.0;
    }
    return sign * sectional_lowered(m, jets, a, b, theta);
}

double ricci_diagonal_from_jets(const MultiplyWarpedSpacetime& m, const std::vector<Jet2>& jets,
                                const FrameIndex& index, double theta) {
    if (index.is_base()) {
        double sum = 0.0;
        for (int i = 0; i < m.fiber_count(); ++i) {
            const Jet2& f = jets[static_cast<std::size_t>(i)];
            sum += m.fiber(i).spec.dim * f.d2 / f.value;
        }
        return -sum;
    }
    const int i = index.fiber;
    const FiberSpec& spec = m.fiber(i).spec;
    const Jet2& f = jets[static_cast<std::size_t>(i)];
    const double d = spec.dim;
    double cross = 0.0;
    for (int j = 0; j < m.fiber_count(); ++j) {
        if (j == i) continue;
        const Jet2& g = jets[static_cast<std::size_t>(j)];
        cross += m.fiber(j).spec.dim * g.d1 / g.value;
    }
    const double bracket =
        spec.curvature * (d - 1.0) + f.value * f.d2 + (d - 1.0) * f.d1 * f.d1 + f.value * f.d1 * cross;
    return bracket * fiber_metric_factor(spec, index.axis, theta);
}

} // namespace

double riemann_component(const MultiplyWarpedSpacetime& m, const std::array<FrameIndex, 4>& indices, double t,
                         const Angles& angles, Side side) {
    for (const auto& idx : indices) {
        (void)m.coordinate(idx);
    }
    return riemann_from_jets(m, m.jets(t, side), indices, angles.theta);
}

Tensor4 riemann_tensor(const MultiplyWarpedSpacetime& m, double t, const Angles& angles, Side side) {
    const int n = m.dimension();
    const std::vector<Jet2> jets = m.jets(t, side);
    Tensor4 r(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d)
                    r(a, b, c, d) = riemann_from_jets(m, jets, {m.frame(a), m.frame(b), m.frame(c), m.frame(d)},
                                                      angles.theta);
    return r;
}

std::vector<RicciEntry> ricci_components(const MultiplyWarpedSpacetime& m, double t, Side side,
                                         const Angles& angles) {
    const std::vector<Jet2> jets = m.jets(t, side);
    std::vector<RicciEntry> out;
    out.reserve(static_cast<std::size_t>(m.dimension()));
    for (int a = 0; a < m.dimension(); ++a) {
        const FrameIndex idx = m.frame(a);
        out.push_back({idx, idx, ricci_diagonal_from_jets(m, jets, idx, angles.theta)});
    }
    return out;
}

Matrix ricci_matrix(const MultiplyWarpedSpacetime& m, double t, Side side, const Angles& angles) {
    Matrix ric(m.dimension());
    for (const auto& e : ricci_components(m, t, side, angles)) {
        ric(m.coordinate(e.row), m.coordinate(e.col)) = e.value;
    }
    return ric;
}

std::vector<double> ricci_orthonormal(const MultiplyWarpedSpacetime& m, double t, Side side, const Angles& angles) {
    std::vector<double> out;
    for (const auto& e : ricci_components(m, t, side, angles)) {
        out.push_back(e.value / m.metric_diagonal(m.coordinate(e.row), t, angles, side));
    }
    return out;
}

double scalar_curvature(const MultiplyWarpedSpacetime& m, double t, Side side, const Angles& angles) {
    double r = 0.0;
    for (double v : ricci_orthonormal(m, t, side, angles)) r += v;
    return r;
}

std::array<double, 4> ricci_closed_form_r1_s2(const Jet2& f1, const Jet2& f2, double theta) {
    const double r11 = -f1.d2 / f1.value - 2.0 * f2.d2 / f2.value;
    const double r22 = f1.value * f1.d2 + 2.0 * f1.value * f1.d1 * f2.d1 / f2.value;
    const double r33 = f1.d1 * f2.value * f2.d1 / f1.value + f2.d1 * f2.d1 + f2.value * f2.d2 + 1.0;
    const double s = std::sin(theta);
    return {r11, r22, r33, r33 * s * s};
}

} // namespace warpcurv
