#include "warpcurv/junction.hpp"

#include <algorithm>
#include <cmath>

#include "warpcurv/error.hpp"

namespace warpcurv {

namespace {

double require_junction(const MultiplyWarpedSpacetime& m) {
    if (!m.junction()) {
        throw EvaluationError("spacetime has no junction");
    }
    return *m.junction();
}

// Continuous warp value at p.
DistributionalScalar warp_at_junction(const WarpFunction& f, double p) {
    const double l = f.value(p, Side::Left);
    const double r = f.value(p, Side::Right);
    const DistributionalScalar v{l, r, 0.0};
    if (!v.is_continuous()) {
        throw DistributionError("warp '" + f.describe() + "' is discontinuous at the junction");
    }
    return v;
}

DistributionalScalar first_derivative_at_junction(const WarpFunction& f, double p) {
    return DistributionalScalar::heaviside(f.jet(p, Side::Left).d1, f.jet(p, Side::Right).d1);
}

} // namespace

bool DistributionalScalar::is_continuous(double tolerance) const {
    const double scale = std::max({1.0, std::abs(left), std::abs(right)});
    return std::abs(right - left) <= tolerance * scale;
}

DistributionalScalar operator+(const DistributionalScalar& a, const DistributionalScalar& b) {
    return {a.left + b.left, a.right + b.right, a.delta + b.delta};
}

DistributionalScalar operator-(const DistributionalScalar& a, const DistributionalScalar& b) {
    return {a.left - b.left, a.right - b.right, a.delta - b.delta};
}

DistributionalScalar operator-(const DistributionalScalar& a) { return {-a.left, -a.right, -a.delta}; }

DistributionalScalar operator*(double s, const DistributionalScalar& a) {
    return {s * a.left, s * a.right, s * a.delta};
}

DistributionalScalar multiply(const DistributionalScalar& a, const DistributionalScalar& b, const std::string& term) {
    DistributionalScalar out{a.left * b.left, a.right * b.right, 0.0};
    if (a.delta != 0.0 && b.delta != 0.0) {
        throw DistributionError("term '" + term + "' multiplies two delta distributions");
    }
    if (a.delta != 0.0) {
        if (!b.is_continuous()) {
            throw DistributionError("term '" + term + "' multiplies a delta by a factor that jumps at the junction");
        }
        out.delta = a.delta * b.left;
    } else if (b.delta != 0.0) {
        if (!a.is_continuous()) {
            throw DistributionError("term '" + term + "' multiplies a delta by a factor that jumps at the junction");
        }
        out.delta = a.left * b.delta;
    }
    return out;
}

DistributionalScalar divide(const DistributionalScalar& a, const DistributionalScalar& b, const std::string& term) {
    if (b.delta != 0.0) {
        throw DistributionError("term '" + term + "' divides by a delta distribution");
    }
    DistributionalScalar out{a.left / b.left, a.right / b.right, 0.0};
    if (a.delta != 0.0) {
        if (!b.is_continuous()) {
            throw DistributionError("term '" + term + "' divides a delta by a factor that jumps at the junction");
        }
        out.delta = a.delta / b.left;
    }
    return out;
}

DistributionalScalar hessian_distributional(const MultiplyWarpedSpacetime& m, int fiber) {
    const double p = require_junction(m);
    const WarpFunction& f = m.fiber(fiber).warp;
    const Jet2 l = f.jet(p, Side::Left);
    const Jet2 r = f.jet(p, Side::Right);
    return {l.d2, r.d2, r.d1 - l.d1};
}

double ricci_delta_tt(const MultiplyWarpedSpacetime& m) {
    const double p = require_junction(m);
    double sum = 0.0;
    for (int i = 0; i < m.fiber_count(); ++i) {
        const WarpFunction& f = m.fiber(i).warp;
        const double jump = f.is_smooth() ? 0.0 : f.jump();
        sum += m.fiber(i).spec.dim * jump / f.value(p, Side::Left);
    }
    return -sum;
}

std::vector<DistributionalRicciEntry> ricci_distributional(const MultiplyWarpedSpacetime& m, const Angles& angles) {
    const double p = require_junction(m);
    const int n = m.fiber_count();
    std::vector<DistributionalScalar> value, slope, hessian;
    for (int i = 0; i < n; ++i) {
        const WarpFunction& f = m.fiber(i).warp;
        value.push_back(warp_at_junction(f, p));
        slope.push_back(first_derivative_at_junction(f, p));
        hessian.push_back(hessian_distributional(m, i));
    }

    std::vector<DistributionalRicciEntry> out;
    for (int a = 0; a < m.dimension(); ++a) {
        const FrameIndex idx = m.frame(a);
        if (idx.is_base()) {
            DistributionalScalar sum{};
            for (int i = 0; i < n; ++i) {
                const auto k = static_cast<std::size_t>(i);
                const double d = m.fiber(i).spec.dim;
                sum = sum + divide(d * hessian[k], value[k], "d_i f_i''/f_i");
            }
            out.push_back({idx, -sum});
            continue;
        }
        const auto i = static_cast<std::size_t>(idx.fiber);
        const FiberSpec& spec = m.fiber(idx.fiber).spec;
        const double d = spec.dim;
        DistributionalScalar cross{};
        for (int j = 0; j < n; ++j) {
            if (j == idx.fiber) continue;
            const auto k = static_cast<std::size_t>(j);
            cross = cross + divide(m.fiber(j).spec.dim * slope[k], value[k], "d_j f_j'/f_j");
        }
        const DistributionalScalar bracket =
            DistributionalScalar::classical(spec.curvature * (d - 1.0)) + multiply(value[i], hessian[i], "f_i f_i''") +
            multiply((d - 1.0) * slope[i], slope[i], "(d_i-1) f_i'^2") +
            multiply(multiply(value[i], slope[i], "f_i f_i'"), cross, "f_i f_i' sum_j d_j f_j'/f_j");
        out.push_back({idx, fiber_metric_factor(spec, idx.axis, angles.theta) * bracket});
    }
    return out;
}

bool JunctionReport::all_deltas_vanish() const {
    return std::all_of(ricci.begin(), ricci.end(), [](const auto& e) { return e.value.delta == 0.0; }) &&
           std::all_of(fibers.begin(), fibers.end(), [](const auto& f) { return f.hessian.delta == 0.0; });
}

JunctionReport shape_operator_jump(const MultiplyWarpedSpacetime& m, const Angles& angles) {
    JunctionReport report;
    report.junction = require_junction(m);
    report.theta = angles.theta;
    for (int i = 0; i < m.fiber_count(); ++i) {
        const WarpedFiber& f = m.fiber(i);
        FiberJunction fj;
        fj.label = f.spec.label;
        fj.dim = f.spec.dim;
        fj.warp_value = f.warp.value(report.junction, Side::Left);
        fj.jump = f.warp.is_smooth() ? 0.0 : f.warp.jump();
        fj.shape_jump = -fj.jump / fj.warp_value;
        fj.hessian = hessian_distributional(m, i);
        report.is_C1 = report.is_C1 && fj.shape_jump == 0.0;
        report.fibers.push_back(fj);
    }
    report.ricci = ricci_distributional(m, angles);
    return report;
}

} // namespace warpcurv
