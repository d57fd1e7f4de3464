#include "warpcurv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "warpcurv/error.hpp"

namespace warpcurv::oracle {

namespace {

// Chart metric of one fiber axis, kept separate from the analytic module.
double chart_factor(const FiberSpec& spec, int axis, double theta) {
    if (spec.curvature == 0.0) return 1.0;
    const double r2 = 1.0 / std::abs(spec.curvature);
    if (axis == 0) return r2;
    const double s = spec.curvature > 0.0 ? std::sin(theta) : std::sinh(theta);
    return r2 * s * s;
}

struct FiberLayout {
    int first = 0;
    int dim = 1;
};

std::vector<FiberLayout> layout(const MultiplyWarpedSpacetime& m) {
    std::vector<FiberLayout> out;
    int c = 1;
    for (const auto& f : m.fibers()) {
        out.push_back({c, f.spec.dim});
        c += f.spec.dim;
    }
    return out;
}

void check_point(const MultiplyWarpedSpacetime& m, const std::vector<double>& x, double reach) {
    if (static_cast<int>(x.size()) != m.dimension()) {
        throw EvaluationError("chart point has " + std::to_string(x.size()) + " coordinates, expected " +
                              std::to_string(m.dimension()));
    }
    const double t = x[0];
    if (!(m.base().a < t - reach && t + reach < m.base().b)) {
        throw EvaluationError("finite-difference stencil around t=" + std::to_string(t) + " leaves the base interval");
    }
    if (m.junction() && std::abs(t - *m.junction()) <= reach) {
        throw EvaluationError("finite-difference stencil around t=" + std::to_string(t) + " touches the junction");
    }
    const auto fibers = layout(m);
    for (int i = 0; i < m.fiber_count(); ++i) {
        const FiberSpec& spec = m.fiber(i).spec;
        if (!spec.is_curved()) continue;
        const double theta = x[static_cast<std::size_t>(fibers[static_cast<std::size_t>(i)].first)];
        if (spec.curvature > 0.0) {
            if (std::abs(std::sin(theta)) < 1e-6 + reach) {
                throw EvaluationError("theta within 1e-6 of a coordinate pole of fiber '" + spec.label + "'");
            }
        } else if (std::abs(theta) < 1e-6 + reach) {
            throw EvaluationError("theta within 1e-6 of the coordinate origin of fiber '" + spec.label + "'");
        }
    }
}

// Central difference of f along direction c with step h.
template <typename F>
Matrix first_difference(F&& f, std::vector<double> x, int c, double h) {
    const auto k = static_cast<std::size_t>(c);
    const double x0 = x[k];
    x[k] = x0 + h;
    const Matrix plus = f(x);
    x[k] = x0 - h;
    const Matrix minus = f(x);
    Matrix out(plus.dim());
    for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] = (plus.data()[n] - minus.data()[n]) / (2.0 * h);
    return out;
}

template <typename F>
Matrix second_difference(F&& f, std::vector<double> x, int c, int d, double h, const Matrix& centre) {
    const auto kc = static_cast<std::size_t>(c);
    const auto kd = static_cast<std::size_t>(d);
    Matrix out(centre.dim());
    if (c == d) {
        const double x0 = x[kc];
        x[kc] = x0 + h;
        const Matrix plus = f(x);
        x[kc] = x0 - h;
        const Matrix minus = f(x);
        for (std::size_t n = 0; n < out.size(); ++n) {
            out.data()[n] = (plus.data()[n] - 2.0 * centre.data()[n] + minus.data()[n]) / (h * h);
        }
        return out;
    }
    const double xc = x[kc], xd = x[kd];
    auto at = [&](double sc, double sd) {
        x[kc] = xc + sc * h;
        x[kd] = xd + sd * h;
        return f(x);
    };
    const Matrix pp = at(1, 1), pm = at(1, -1), mp = at(-1, 1), mm = at(-1, -1);
    for (std::size_t n = 0; n < out.size(); ++n) {
        out.data()[n] = (pp.data()[n] - pm.data()[n] - mp.data()[n] + mm.data()[n]) / (4.0 * h * h);
    }
    return out;
}

Matrix richardson(const Matrix& coarse, const Matrix& fine) {
    Matrix out(coarse.dim());
    for (std::size_t n = 0; n < out.size(); ++n) out.data()[n] = (4.0 * fine.data()[n] - coarse.data()[n]) / 3.0;
    return out;
}

} // namespace

std::vector<double> chart_point(const MultiplyWarpedSpacetime& m, double t, const Angles& angles) {
    std::vector<double> x(static_cast<std::size_t>(m.dimension()), 0.0);
    x[0] = t;
    const auto fibers = layout(m);
    for (int i = 0; i < m.fiber_count(); ++i) {
        if (m.fiber(i).spec.is_curved()) {
            x[static_cast<std::size_t>(fibers[static_cast<std::size_t>(i)].first)] = angles.theta;
        }
    }
    return x;
}

Matrix metric(const MultiplyWarpedSpacetime& m, const std::vector<double>& point) {
    Matrix g(m.dimension());
    g(0, 0) = -1.0;
    const auto fibers = layout(m);
    for (int i = 0; i < m.fiber_count(); ++i) {
        const WarpedFiber& f = m.fiber(i);
        const FiberLayout& l = fibers[static_cast<std::size_t>(i)];
        const double w = f.warp.value(point[0]);
        const double theta = f.spec.is_curved() ? point[static_cast<std::size_t>(l.first)] : 0.0;
        for (int a = 0; a < l.dim; ++a) {
            g(l.first + a, l.first + a) = w * w * chart_factor(f.spec, a, theta);
        }
    }
    return g;
}

MetricAtPoint assemble_metric(const MultiplyWarpedSpacetime& m, const std::vector<double>& point,
                              const Options& options) {
    const double h = options.step;
    if (!(h > 0.0)) {
        throw EvaluationError("finite-difference step must be positive");
    }
    check_point(m, point, h);
    const int n = m.dimension();
    auto g_of = [&m](const std::vector<double>& x) { return metric(m, x); };

    MetricAtPoint out;
    out.point = point;
    out.g = g_of(point);

    Eigen::MatrixXd g(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g(a, b) = out.g(a, b);
    if ((g - g.transpose()).cwiseAbs().maxCoeff() > 0.0) {
        throw EvaluationError("metric is not symmetric");
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g, Eigen::EigenvaluesOnly);
    const auto& ev = eig.eigenvalues();
    const double scale = ev.cwiseAbs().maxCoeff();
    if (!(ev(0) < 0.0) || (n > 1 && !(ev(1) > 1e-14 * scale))) {
        throw EvaluationError("metric is degenerate or not Lorentzian at this point");
    }
    const Eigen::MatrixXd g_inv = g.inverse();
    if (((g * g_inv) - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10) {
        throw EvaluationError("metric inverse is inaccurate (singular metric)");
    }
    out.g_inv = Matrix(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.g_inv(a, b) = g_inv(a, b);

    out.dg = Tensor3(n);
    out.ddg = Tensor4(n);
    for (int c = 0; c < n; ++c) {
        Matrix d = first_difference(g_of, point, c, h);
        if (options.richardson) d = richardson(d, first_difference(g_of, point, c, 0.5 * h));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) out.dg(c, a, b) = d(a, b);
    }
    for (int c = 0; c < n; ++c) {
        for (int e = c; e < n; ++e) {
            Matrix d = second_difference(g_of, point, c, e, h, out.g);
            if (options.richardson) d = richardson(d, second_difference(g_of, point, c, e, 0.5 * h, out.g));
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    out.ddg(c, e, a, b) = d(a, b);
                    out.ddg(e, c, a, b) = d(a, b);
                }
            }
        }
    }
    return out;
}

Tensor3 christoffel(const MetricAtPoint& mp) {
    const int n = mp.g.dim();
    Tensor3 gamma(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                double s = 0.0;
                for (int d = 0; d < n; ++d) {
                    s += mp.g_inv(a, d) * (mp.dg(b, d, c) + mp.dg(c, b, d) - mp.dg(d, b, c));
                }
                gamma(a, b, c) = 0.5 * s;
            }
    return gamma;
}

Curvature riemann_ricci(const MetricAtPoint& mp) {
    const int n = mp.g.dim();
    Curvature out;
    out.christoffel = christoffel(mp);
    const Tensor3& gamma = out.christoffel;

    // d_e g^{ad} = -g^{ap} d_e g_pq g^{qd}
    Tensor3 dg_inv(n);
    for (int e = 0; e < n; ++e)
        for (int a = 0; a < n; ++a)
            for (int d = 0; d < n; ++d) {
                double s = 0.0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) s += mp.g_inv(a, p) * mp.dg(e, p, q) * mp.g_inv(q, d);
                dg_inv(e, a, d) = -s;
            }

    // dgamma(e, a, b, c) = d_e Gamma^a_{bc}
    Tensor4 dgamma(n);
    for (int e = 0; e < n; ++e)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    double s = 0.0;
                    for (int d = 0; d < n; ++d) {
                        const double first = mp.dg(b, d, c) + mp.dg(c, b, d) - mp.dg(d, b, c);
                        const double second = mp.ddg(e, b, d, c) + mp.ddg(e, c, b, d) - mp.ddg(e, d, b, c);
                        s += dg_inv(e, a, d) * first + mp.g_inv(a, d) * second;
                    }
                    dgamma(e, a, b, c) = 0.5 * s;
                }

    // R^a_{bcd} = d_c Gamma^a_{db} - d_d Gamma^a_{cb} + Gamma^a_{ce} Gamma^e_{db} - Gamma^a_{de} Gamma^e_{cb}
    Tensor4 mixed(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    double s = dgamma(c, a, d, b) - dgamma(d, a, c, b);
                    for (int e = 0; e < n; ++e) s += gamma(a, c, e) * gamma(e, d, b) - gamma(a, d, e) * gamma(e, c, b);
                    mixed(a, b, c, d) = s;
                }

    out.riemann = Tensor4(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < n; ++d) {
                    double s = 0.0;
                    for (int e = 0; e < n; ++e) s += mp.g(a, e) * mixed(e, b, c, d);
                    out.riemann(a, b, c, d) = s;
                }

    out.ricci = Matrix(n);
    for (int b = 0; b < n; ++b)
        for (int d = 0; d < n; ++d) {
            double s = 0.0;
            for (int a = 0; a < n; ++a) s += mixed(a, b, a, d);
            out.ricci(b, d) = s;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) out.scalar += mp.g_inv(a, b) * out.ricci(a, b);
    return out;
}

Curvature curvature_at(const MultiplyWarpedSpacetime& m, double t, const Angles& angles, const Options& options) {
    return riemann_ricci(assemble_metric(m, chart_point(m, t, angles), options));
}

Comparison compare(const MultiplyWarpedSpacetime& m, double t, const Angles& angles, const Options& options,
                   const Tolerance& tolerance) {
    const Curvature numeric = curvature_at(m, t, angles, options);
    const Tensor4 analytic_riemann = riemann_tensor(m, t, angles);
    const Matrix analytic_ricci = ricci_matrix(m, t, Side::Auto, angles);
    const int n = m.dimension();

    Comparison out;
    auto judge = [&](double analytic, double oracle) {
        const double err = std::abs(analytic - oracle);
        const double ratio = std::abs(analytic) < tolerance.small ? err / tolerance.absolute
                                                                  : err / (std::abs(analytic) * tolerance.relative);
        out.worst_ratio = std::max(out.worst_ratio, ratio);
        if (!(ratio < 1.0)) ++out.failures;
        return err;
    };
    for (std::size_t k = 0; k < analytic_riemann.size(); ++k) {
        const double err = judge(analytic_riemann.data()[k], numeric.riemann.data()[k]);
        out.max_riemann_abs_error = std::max(out.max_riemann_abs_error, err);
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const double err = judge(analytic_ricci(a, b), numeric.ricci(a, b));
            out.max_ricci_abs_error = std::max(out.max_ricci_abs_error, err);
            if (a == b) out.ricci_diagonal_error.push_back(err);
        }
    return out;
}

} // namespace warpcurv::oracle
