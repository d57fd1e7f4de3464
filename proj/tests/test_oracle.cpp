#include "doctest.h"

#include <cmath>
#include <numbers>

#include "support.hpp"
#include "warpcurv/error.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/schwarzschild.hpp"

using namespace warpcurv;
using namespace warpcurv::oracle;
using testing::make_spacetime;

namespace {

const Interval kBase{-1.0, 1.0};

MultiplyWarpedSpacetime cosh_exp() { return make_spacetime(kBase, {{1, 0.0, "cosh(t)"}, {2, 1.0, "exp(t)"}}); }

double max_ricci_defect(const MultiplyWarpedSpacetime& m, double t, const Angles& angles, const Options& options) {
    const Curvature c = curvature_at(m, t, angles, options);
    const Matrix exact = ricci_matrix(m, t, Side::Auto, angles);
    double worst = 0.0;
    for (int a = 0; a < m.dimension(); ++a)
        for (int b = 0; b < m.dimension(); ++b) worst = std::max(worst, std::abs(c.ricci(a, b) - exact(a, b)));
    return worst;
}

} // namespace

TEST_CASE("chart_point and metric") {
    const auto m = make_spacetime(kBase, {{2, 0.0, "2"}, {2, 1.0, "1 + t^2"}});
    const auto x = chart_point(m, 0.5, {1.0});
    REQUIRE(x.size() == 5);
    CHECK(x[0] == 0.5);
    CHECK(x[1] == 0.0);
    CHECK(x[3] == 1.0);
    const Matrix g = metric(m, x);
    CHECK(g(0, 0) == -1.0);
    CHECK(g(1, 1) == 4.0);
    CHECK(g(2, 2) == 4.0);
    CHECK(g(3, 3) == doctest::Approx(1.5625));
    CHECK(g(4, 4) == doctest::Approx(1.5625 * std::sin(1.0) * std::sin(1.0)));
    CHECK(g(1, 2) == 0.0);
}

TEST_CASE("assemble_metric: constant warps have vanishing partials") {
    const auto m = make_spacetime(kBase, {{3, 0.0, "2.5"}, {2, 1.0, "0.7"}});
    const MetricAtPoint g = assemble_metric(m, chart_point(m, 0.1, {1.3}));
    const int n = m.dimension();
    for (int c = 0; c < n; ++c)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                // Only the S^2 polar angle moves g_{phi phi}.
                if (c == 4 && a == 5 && b == 5) continue;
                CHECK(std::abs(g.dg(c, a, b)) < 1e-10);
            }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            double s = 0.0;
            for (int k = 0; k < n; ++k) s += g.g(a, k) * g.g_inv(k, b);
            CHECK(std::abs(s - (a == b ? 1.0 : 0.0)) < 1e-10);
        }
}

TEST_CASE("assemble_metric: interior Schwarzschild at mu = F(1) is Minkowski") {
    const auto m = schwarzschild::build_interior({});
    const double mu = schwarzschild::mu_of_nu(1.0, 1.0);
    const MetricAtPoint g = assemble_metric(m, chart_point(m, mu));
    const double expected[] = {-1.0, 1.0, 1.0, 1.0};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(std::abs(g.g(a, b) - (a == b ? expected[a] : 0.0)) < 1e-10);
}

TEST_CASE("assemble_metric: rejected points") {
    const auto kink = make_spacetime(kBase, {{1, 0.0, "piecewise(0; 1-t; 1+t)"}});
    CHECK_THROWS_AS(assemble_metric(kink, chart_point(kink, 0.0)), EvaluationError);
    CHECK_THROWS_AS(assemble_metric(kink, chart_point(kink, 5e-4)), EvaluationError);
    CHECK_NOTHROW(assemble_metric(kink, chart_point(kink, 0.5)));

    const auto sphere = make_spacetime(kBase, {{2, 1.0, "1"}});
    CHECK_THROWS_AS(assemble_metric(sphere, chart_point(sphere, 0.0, {1e-7})), EvaluationError);
    CHECK_THROWS_AS(assemble_metric(sphere, chart_point(sphere, 0.0, {std::numbers::pi})), EvaluationError);
    CHECK_THROWS_AS(assemble_metric(sphere, chart_point(sphere, 0.9999)), EvaluationError);
    CHECK_THROWS_AS(assemble_metric(sphere, chart_point(sphere, 0.0), {0.0}), EvaluationError);
}

TEST_CASE("christoffel: known symbols") {
    SUBCASE("flat") {
        const auto m = make_spacetime(kBase, {{3, 0.0, "1"}});
        const Tensor3 gamma = christoffel(assemble_metric(m, chart_point(m, 0.2)));
        for (double v : gamma.data()) CHECK(std::abs(v) < 1e-12);
    }
    SUBCASE("single warped line") {
        const auto m = make_spacetime(kBase, {{1, 0.0, "cosh(t)"}});
        for (double t : {-0.6, 0.0, 0.4}) {
            const Tensor3 gamma = christoffel(assemble_metric(m, chart_point(m, t)));
            const double f = std::cosh(t), df = std::sinh(t);
            CHECK(testing::close_rel(gamma(0, 1, 1), f * df, 1e-8, 1e-10));
            CHECK(testing::close_rel(gamma(1, 0, 1), df / f, 1e-8, 1e-10));
            CHECK(testing::close_rel(gamma(1, 0, 1), conn_base_fiber(m, 0, t, Side::Auto), 1e-8, 1e-10));
        }
    }
    SUBCASE("unit sphere") {
        const auto m = make_spacetime(kBase, {{2, 1.0, "1"}});
        const double theta = std::numbers::pi / 3;
        const Tensor3 gamma = christoffel(assemble_metric(m, chart_point(m, 0.0, {theta})));
        CHECK(gamma(1, 2, 2) == doctest::Approx(-std::sqrt(3.0) / 4).epsilon(1e-9));
        CHECK(gamma(2, 1, 2) == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-9));
    }
    SUBCASE("symmetric in the lower indices") {
        const auto m = cosh_exp();
        const Tensor3 gamma = christoffel(assemble_metric(m, chart_point(m, 0.3, {0.9})));
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) CHECK(gamma(a, b, c) == gamma(a, c, b));
    }
}

TEST_CASE("riemann_ricci: flat space, cylinder, and symmetries") {
    const auto minkowski = make_spacetime(kBase, {{3, 0.0, "1"}});
    const Curvature flat = curvature_at(minkowski, 0.1);
    for (double v : flat.riemann.data()) CHECK(std::abs(v) < 1e-10);
    CHECK(std::abs(flat.scalar) < 1e-10);

    const auto cylinder = make_spacetime(kBase, {{1, 0.0, "1"}, {2, 1.0, "1"}});
    const double theta = 0.7;
    const Curvature cyl = curvature_at(cylinder, 0.0, {theta});
    const double expected[] = {0.0, 0.0, 1.0, std::sin(theta) * std::sin(theta)};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(std::abs(cyl.ricci(a, b) - (a == b ? expected[a] : 0.0)) < 1e-8);

    for (double t : {-0.5, 0.2, 0.6}) {
        const Curvature c = curvature_at(cosh_exp(), t, {1.1});
        const Tensor4& r = c.riemann;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                CHECK(std::abs(c.ricci(a, b) - c.ricci(b, a)) < 1e-10);
                for (int p = 0; p < 4; ++p)
                    for (int q = 0; q < 4; ++q) {
                        CHECK(std::abs(r(a, b, p, q) + r(b, a, p, q)) < 1e-8);
                        CHECK(std::abs(r(a, b, p, q) + r(a, b, q, p)) < 1e-8);
                        CHECK(std::abs(r(a, b, p, q) - r(p, q, a, b)) < 1e-8);
                        CHECK(std::abs(r(a, b, p, q) + r(a, p, q, b) + r(a, q, b, p)) < 1e-8);
                    }
            }
    }
}

TEST_CASE("second-order convergence without extrapolation") {
    const auto m = cosh_exp();
    const Options coarse{2e-2, false}, fine{1e-2, false};
    for (double t : {-0.4, 0.1, 0.5}) {
        const double ratio = max_ricci_defect(m, t, {1.0}, coarse) / max_ricci_defect(m, t, {1.0}, fine);
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
    }
    // Extrapolation beats the plain stencil at the same step.
    CHECK(max_ricci_defect(m, 0.1, {1.0}, {1e-2, true}) < 0.1 * max_ricci_defect(m, 0.1, {1.0}, fine));
}

TEST_CASE("compare: tolerance rule") {
    const auto m = cosh_exp();
    const Comparison ok = compare(m, 0.3, {1.0});
    CHECK(ok.pass());
    CHECK(ok.worst_ratio < 1.0);
    CHECK(ok.ricci_diagonal_error.size() == 4);

    // A coarse, unextrapolated stencil cannot meet 1e-6.
    const Comparison rough = compare(m, 0.3, {1.0}, {5e-2, false});
    CHECK_FALSE(rough.pass());
    CHECK(rough.worst_ratio > 1.0);
    CHECK(rough.failures > 0);
}
