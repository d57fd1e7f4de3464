// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "warpcurv/geometry.hpp"
#include "warpcurv/junction.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/schwarzschild.hpp"

using namespace warpcurv;
using std::numbers::pi;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", x);
    return buf;
}

MultiplyWarpedSpacetime spacetime(Interval base, const std::vector<std::tuple<int, double, std::string>>& defs) {
    std::vector<WarpedFiber> fibers;
    for (const auto& [dim, k, warp] : defs) {
        fibers.push_back({FiberSpec{dim, k, "F"}, WarpFunction::parse(warp, base)});
    }
    return MultiplyWarpedSpacetime(base, std::move(fibers));
}

std::string literal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return std::string("(") + buf + ")";
}

Outcome ricci_flatness() {
    const auto start = std::chrono::steady_clock::now();
    double analytic = 0.0, numeric = 0.0;
    for (double m : {1.0, 2.0}) {
        const auto report = schwarzschild::verify_ricci_flat({m, 50});
        analytic = std::max(analytic, report.max_residual);
        const auto interior = schwarzschild::build_interior({m, 50});
        for (const auto& s : report.samples) {
            const oracle::Curvature c = oracle::curvature_at(interior, s.mu);
            for (int a = 0; a < 4; ++a) {
                const double g = interior.metric_diagonal(a, s.mu, Angles{}, Side::Auto);
                numeric = std::max(numeric, std::abs(c.ricci(a, a) / g));
                for (int b = 0; b < 4; ++b) {
                    if (a != b) numeric = std::max(numeric, std::abs(c.ricci(a, b)));
                }
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {analytic < 1e-8 && numeric < 1e-6 && seconds < 5.0,
            "analytic max " + num(analytic) + " (< 1e-8), oracle max " + num(numeric) + " (< 1e-6), " +
                num(seconds) + " s (< 5)"};
}

Outcome f_limits() {
    bool ok = true;
    double worst_low = 0.0, worst_high = 0.0, worst_mid = 0.0;
    for (double m : {1.0, 2.0, 5.0}) {
        const double low = schwarzschild::mu_of_nu(1e-8 * 2 * m, m);
        const double high = std::abs(schwarzschild::mu_of_nu(2 * m - 1e-8 * 2 * m, m) - m * pi);
        const double mid = std::abs(schwarzschild::mu_of_nu(m, m) / (m * (pi / 2 - 1)) - 1.0);
        ok = ok && low < 1e-3 * m && high < 1e-3 * m && mid <= 1e-12;
        worst_low = std::max(worst_low, low / m);
        worst_high = std::max(worst_high, high / m);
        worst_mid = std::max(worst_mid, mid);
    }
    return {ok, "F(0+)/m " + num(worst_low) + ", |F(2m-)-m pi|/m " + num(worst_high) + " (< 1e-3), midpoint rel " +
                    num(worst_mid) + " (<= 1e-12)"};
}

Outcome conserved_quantity() {
    double worst = 0.0;
    for (double m : {1.0, 2.0, 3.0}) {
        const auto r = schwarzschild::verify_ricci_flat({m, 50});
        worst = std::max({worst, std::abs(r.conserved_min - 2 * m), std::abs(r.conserved_max - 2 * m)});
    }
    return {worst < 1e-8, "max |(f2'^2+1) f2 - 2m| = " + num(worst) + " (< 1e-8)"};
}

Outcome oracle_equivalence() {
    const Interval base{-1.0, 1.0};
    const std::vector<std::pair<std::string, MultiplyWarpedSpacetime>> cases = {
        {"constant", spacetime(base, {{1, 0.0, "2"}, {2, 1.0, "1.5"}})},
        {"cosh", spacetime(base, {{3, 0.0, "cosh(t)"}})},
        {"exp", spacetime(base, {{1, 0.0, "exp(t)"}, {2, 1.0, "exp(t)"}})},
        {"cosh/exp", spacetime(base, {{1, 0.0, "cosh(t)"}, {2, 1.0, "exp(t)"}})},
        {"1+t^2", spacetime(base, {{2, 0.0, "1 + t^2"}})},
    };
    double worst = 0.0;
    int failures = 0;
    for (const auto& [name, m] : cases) {
        for (int k = 0; k < 10; ++k) {
            const double t = -0.9 + 1.8 * k / 9;
            const oracle::Comparison c = oracle::compare(m, t, {1.1});
            worst = std::max(worst, c.worst_ratio);
            failures += c.failures;
        }
    }
    return {failures == 0, "50 points, " + std::to_string(failures) + " failing components, worst error/bound " +
                               num(worst) + " (< 1)"};
}

Outcome closed_forms() {
    std::mt19937_64 rng(20260515);
    std::uniform_real_distribution<double> coeff(0.2, 1.0), time(-0.9, 0.9), angle(0.2, 2.9);
    const std::vector<std::function<std::string()>> templates = {
        [&] { return literal(1.5 + coeff(rng)) + " + sin(" + literal(coeff(rng)) + "*t)"; },
        [&] { return "cosh(" + literal(coeff(rng)) + "*t + " + literal(coeff(rng)) + ")"; },
        [&] { return "exp(" + literal(coeff(rng)) + "*t)"; },
        [&] { return literal(1.0 + coeff(rng)) + " + " + literal(coeff(rng)) + "*t^2"; },
        [&] { return "sqrt(" + literal(2.0 + coeff(rng)) + " + t)"; },
    };
    double worst = 0.0;
    for (int k = 0; k < 100; ++k) {
        const std::string w1 = templates[rng() % templates.size()]();
        const std::string w2 = templates[rng() % templates.size()]();
        const auto m = spacetime({-1.0, 1.0}, {{1, 0.0, w1}, {2, 1.0, w2}});
        const double t = time(rng);
        const Angles angles{angle(rng)};
        const auto general = ricci_components(m, t, Side::Auto, angles);
        const auto closed = ricci_closed_form_r1_s2(m.fiber(0).warp.jet(t), m.fiber(1).warp.jet(t), angles.theta);
        for (std::size_t a = 0; a < 4; ++a) {
            worst = std::max(worst, std::abs(general[a].value - closed[a]) / std::max(1.0, std::abs(closed[a])));
        }
    }
    return {worst <= 1e-12, "100 samples, max deviation " + num(worst) + " (<= 1e-12)"};
}

Outcome c1_equivalence() {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> junction(-0.5, 0.5), value(1.5, 3.0), slope(-0.5, 0.5), curve(-0.3, 0.3);
    int counterexamples = 0, genuine = 0;
    const int trials = 200;
    for (int n = 0; n < trials; ++n) {
        const double p = junction(rng);
        const std::string x = "(t - " + literal(p) + ")";
        const int count = 1 + static_cast<int>(rng() % 3);
        std::vector<std::tuple<int, double, std::string>> defs;
        for (int i = 0; i < count; ++i) {
            const double v = value(rng), a = slope(rng), b = rng() % 2 == 0 ? a : slope(rng);
            const bool sphere = rng() % 3 == 0;
            defs.emplace_back(sphere ? 2 : 1 + static_cast<int>(rng() % 3), sphere ? 1.0 : 0.0,
                              "piecewise(" + literal(p) + "; " + literal(v) + " + " + literal(a) + "*" + x + " + " +
                                  literal(curve(rng)) + "*" + x + "^2; " + literal(v) + " + " + literal(b) + "*" +
                                  x + " + " + literal(curve(rng)) + "*" + x + "^2)");
        }
        const auto m = spacetime({-1.0, 1.0}, defs);
        const JunctionReport r = shape_operator_jump(m);
        bool slopes_match = true;
        for (int i = 0; i < m.fiber_count(); ++i) slopes_match = slopes_match && m.fiber(i).warp.jump() == 0.0;
        const bool deltas_vanish = r.all_deltas_vanish();
        if (r.is_C1 != slopes_match || r.is_C1 != deltas_vanish) ++counterexamples;
        genuine += r.is_C1 ? 0 : 1;
    }
    return {counterexamples == 0 && genuine > 0 && genuine < trials,
            std::to_string(trials) + " spacetimes (" + std::to_string(genuine) + " with a kink), " +
                std::to_string(counterexamples) + " counterexamples"};
}

Outcome static_cylinder() {
    const auto m = spacetime({-1.0, 1.0}, {{1, 0.0, "1"}, {2, 1.0, "1"}});
    bool exact = true;
    double numeric = 0.0;
    for (double theta : {pi / 2, 0.7, 2.2}) {
        const double s2 = std::sin(theta) * std::sin(theta);
        const double expected[] = {0.0, 0.0, 1.0, s2};
        for (double t : {-0.5, 0.0, 0.5}) {
            const Matrix ric = ricci_matrix(m, t, Side::Auto, {theta});
            const oracle::Curvature c = oracle::curvature_at(m, t, {theta});
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b) {
                    const double e = a == b ? expected[a] : 0.0;
                    exact = exact && ric(a, b) == e;
                    numeric = std::max(numeric, std::abs(c.ricci(a, b) - e));
                }
        }
    }
    return {exact && numeric < 1e-8,
            std::string("analytic ") + (exact ? "exact" : "inexact") + ", oracle max error " + num(numeric) +
                " (< 1e-8)"};
}

Outcome negative_control() {
    const double m = 1.0;
    const schwarzschild::Params params{m};
    std::vector<WarpedFiber> fibers;
    fibers.push_back({FiberSpec{1, 0.0, "nu"}, schwarzschild::f1_warp(params)});
    fibers.push_back({FiberSpec{2, 1.0, "S2"}, WarpFunction::numeric(
                                                    [m](double mu) {
                                                        Jet2 j = schwarzschild::f2_jet(mu, m);
                                                        j.value += 0.01 * mu;
                                                        j.d1 += 0.01;
                                                        return j;
                                                    },
                                                    Interval{0.0, m * pi}, "perturbed f2")});
    const MultiplyWarpedSpacetime bent(Interval{0.0, m * pi}, std::move(fibers));
    const double residual = schwarzschild::ricci_flatness(bent, 0.05 * pi, 0.95 * pi, 50).max_residual;
    return {residual > 1e-3, "perturbed max residual " + num(residual) + " (> 1e-3)"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Schwarzschild interior is Ricci flat", ricci_flatness},
        {"F endpoint limits and midpoint", f_limits},
        {"conserved quantity equals 2m", conserved_quantity},
        {"analytic curvature matches the oracle", oracle_equivalence},
        {"(R^1, S^2) closed forms match the general assembly", closed_forms},
        {"C1 iff matching slopes iff no curvature deltas", c1_equivalence},
        {"static cylinder Ricci", static_cylinder},
        {"perturbed warps are detected", negative_control},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s criterion %zu: %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
