#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/config.hpp"
#include "cli/report.hpp"
#include "warpcurv/junction.hpp"
#include "warpcurv/oracle.hpp"
#include "warpcurv/schwarzschild.hpp"

namespace warpcurv::cli {

namespace {

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    file << text;
    if (!file) throw ConfigError("cannot write '" + path + "'");
}

std::string index_name(const char* prefix, int a) {
    const std::string i = std::to_string(a + 1);
    return std::string(prefix) + "_" + (a < 9 ? i + i : i + "_" + i);
}

// Which branch each grid point reads. A point exactly at the junction reports
// the limit from the left; the delta row carries the singular part.
std::pair<Side, const char*> side_for(const MultiplyWarpedSpacetime& m, double t) {
    if (!m.junction()) return {Side::Auto, "smooth"};
    if (t > *m.junction()) return {Side::Auto, "right"};
    if (t < *m.junction()) return {Side::Auto, "left"};
    return {Side::Left, "left"};
}

struct TableOptions {
    bool oracle = false;
    oracle::Options fd;
    oracle::Tolerance tolerance;
    unsigned threads = 1;
};

struct GridRow {
    double t = 0.0;
    const char* side = "smooth";
    std::vector<double> coordinate;
    std::vector<double> orthonormal;
    double scalar = 0.0;
    std::optional<oracle::Comparison> comparison;
};

struct Table {
    std::string csv;
    std::size_t rows = 0;
    bool has_junction = false;
    double max_abs_ricci = 0.0;
    int compared = 0;
    int skipped = 0;
    int failures = 0;
    double max_residual = 0.0;
    double worst_ratio = 0.0;
};

Table ricci_table(const SpacetimeConfig& config, const MultiplyWarpedSpacetime& m, const TableOptions& options) {
    const Angles angles{config.theta};
    const std::vector<double> ts = grid_points(config.grid);
    std::vector<GridRow> rows(ts.size());
    parallel_for(ts.size(), options.threads, [&](std::size_t k) {
        GridRow& row = rows[k];
        row.t = ts[k];
        const auto [side, label] = side_for(m, row.t);
        row.side = label;
        try {
            for (const auto& e : ricci_components(m, row.t, side, angles)) row.coordinate.push_back(e.value);
            row.orthonormal = ricci_orthonormal(m, row.t, side, angles);
        } catch (const Error& e) {
            throw EvaluationError("t=" + format_real(row.t) + ": " + e.what());
        }
        for (double v : row.orthonormal) row.scalar += v;
        if (options.oracle) {
            try {
                row.comparison = oracle::compare(m, row.t, angles, options.fd, options.tolerance);
            } catch (const EvaluationError&) {
                // Stencil leaves the chart or crosses the junction.
            }
        }
    });

    const int n = m.dimension();
    std::vector<std::string> header{"t", "side"};
    for (int a = 0; a < n; ++a) header.push_back(index_name("R", a));
    for (int a = 0; a < n; ++a) header.push_back(index_name("Rhat", a));
    header.push_back("scalar");
    if (options.oracle) {
        for (int a = 0; a < n; ++a) header.push_back(index_name("res", a));
        header.push_back("res_max");
        header.push_back("res_ratio");
    }

    Table table;
    std::ostringstream csv;
    write_csv_row(csv, header);
    for (const GridRow& row : rows) {
        std::vector<std::string> cells{format_real(row.t), row.side};
        for (double v : row.coordinate) cells.push_back(format_real(v));
        for (double v : row.orthonormal) {
            cells.push_back(format_real(v));
            table.max_abs_ricci = std::max(table.max_abs_ricci, std::abs(v));
        }
        cells.push_back(format_real(row.scalar));
        if (options.oracle) {
            if (row.comparison) {
                const oracle::Comparison& c = *row.comparison;
                for (double e : c.ricci_diagonal_error) cells.push_back(format_real(e));
                const double residual = std::max(c.max_riemann_abs_error, c.max_ricci_abs_error);
                cells.push_back(format_real(residual));
                cells.push_back(format_real(c.worst_ratio));
                ++table.compared;
                table.failures += c.pass() ? 0 : 1;
                table.max_residual = std::max(table.max_residual, residual);
                table.worst_ratio = std::max(table.worst_ratio, c.worst_ratio);
            } else {
                cells.insert(cells.end(), static_cast<std::size_t>(n) + 2, "nan");
                ++table.skipped;
            }
        }
        write_csv_row(csv, cells);
        ++table.rows;
    }

    if (const auto& p = m.junction()) {
        table.has_junction = true;
        std::vector<DistributionalRicciEntry> deltas;
        try {
            deltas = ricci_distributional(m, angles);
        } catch (const Error& e) {
            throw EvaluationError(std::string("junction: ") + e.what());
        }
        std::vector<std::string> cells{format_real(*p), "delta"};
        double scalar = 0.0;
        for (const auto& d : deltas) cells.push_back(format_real(d.value.delta));
        for (int a = 0; a < n; ++a) {
            const double v = deltas[static_cast<std::size_t>(a)].value.delta / m.metric_diagonal(a, *p, angles, Side::Left);
            cells.push_back(format_real(v));
            scalar += v;
        }
        cells.push_back(format_real(scalar));
        if (options.oracle) cells.insert(cells.end(), static_cast<std::size_t>(n) + 2, "nan");
        write_csv_row(csv, cells);
    }
    table.csv = csv.str();
    return table;
}

std::string oracle_summary(const Table& t, const oracle::Tolerance& tol) {
    std::ostringstream os;
    os << "oracle: compared " << t.compared << " points, skipped " << t.skipped << ", max residual "
       << format_real(t.max_residual) << ", worst error/bound " << format_real(t.worst_ratio) << " (relative "
       << format_real(tol.relative) << ", absolute " << format_real(tol.absolute) << "): "
       << (t.compared > 0 && t.failures == 0 ? "PASS" : "FAIL") << '\n';
    return os.str();
}

struct CurvatureFlags {
    std::string config;
    std::string out;
    bool oracle = false;
    double tolerance = 1e-6;
    // Set when --fd-step was given; it then wins over the config.
    std::optional<double> fd_step;
};

TableOptions table_options(const CurvatureFlags& f, const SpacetimeConfig& config, bool oracle) {
    TableOptions o;
    o.oracle = oracle;
    o.fd.step = f.fd_step.value_or(config.oracle_step.value_or(oracle::Options{}.step));
    o.tolerance.relative = f.tolerance;
    o.tolerance.absolute = f.tolerance * 1e-2;
    o.threads = thread_count();
    return o;
}

int cmd_ricci(const CurvatureFlags& f, std::ostream& out, std::ostream& err) {
    const SpacetimeConfig config = load_config(f.config);
    const MultiplyWarpedSpacetime m = build_spacetime(config);
    const TableOptions options = table_options(f, config, f.oracle);
    const Table table = ricci_table(config, m, options);
    emit(table.csv, f.out, out);
    err << "ricci: " << table.rows << " grid rows" << (table.has_junction ? " plus a junction delta row" : "")
        << ", max |Rhat| " << format_real(table.max_abs_ricci) << '\n';
    if (f.oracle) err << oracle_summary(table, options.tolerance);
    return kOk;
}

int cmd_verify(const CurvatureFlags& f, std::ostream& out, std::ostream&) {
    const SpacetimeConfig config = load_config(f.config);
    const MultiplyWarpedSpacetime m = build_spacetime(config);
    const TableOptions options = table_options(f, config, true);
    const Table table = ricci_table(config, m, options);
    if (!f.out.empty()) emit(table.csv, f.out, out);
    out << oracle_summary(table, options.tolerance);
    return table.compared > 0 && table.failures == 0 ? kOk : kCheckFailed;
}

int cmd_classify(const CurvatureFlags& f, std::ostream& out, std::ostream& err) {
    const SpacetimeConfig config = load_config(f.config);
    const MultiplyWarpedSpacetime m = build_spacetime(config);
    if (!m.junction()) {
        err << "classify: config declares no junction and has no piecewise warp\n";
        return kConfigError;
    }
    JunctionReport r;
    try {
        r = shape_operator_jump(m, {config.theta});
    } catch (const Error& e) {
        throw EvaluationError(std::string("junction: ") + e.what());
    }
    std::ostringstream os;
    os << "junction " << format_real(r.junction) << '\n';
    os << "theta " << format_real(r.theta) << '\n';
    write_csv_row(os, {"fiber", "dim", "f(p)", "jump_f'", "shape_jump", "hessian_delta"});
    for (const auto& fj : r.fibers) {
        write_csv_row(os, {fj.label, std::to_string(fj.dim), format_real(fj.warp_value), format_real(fj.jump),
                           format_real(fj.shape_jump), format_real(fj.hessian.delta)});
    }
    os << "ricci_delta";
    for (std::size_t a = 0; a < r.ricci.size(); ++a) {
        os << ' ' << index_name("R", static_cast<int>(a)) << '=' << format_real(r.ricci[a].value.delta);
    }
    os << '\n' << "is_C1 " << (r.is_C1 ? "true" : "false") << '\n';
    emit(os.str(), f.out, out);
    return r.is_C1 ? kOk : kCheckFailed;
}

struct SchwarzschildFlags {
    double m = 1.0;
    int samples = 50;
    double tolerance = 1e-8;
    double window_lo = 0.05;
    double window_hi = 0.95;
    bool oracle = false;
    std::string out;
    std::string emit_config;
};

SpacetimeConfig interior_config(const SchwarzschildFlags& f) {
    SpacetimeConfig c;
    c.base = {0.0, f.m * std::numbers::pi};
    c.fibers.push_back({"nu", 1, 0.0, {"", Builtin::SchwarzschildF1, f.m}});
    c.fibers.push_back({"S2", 2, 1.0, {"", Builtin::SchwarzschildF2, f.m}});
    c.grid = {f.samples, f.window_lo * c.base.b, f.window_hi * c.base.b};
    // The interior scales with m, and so does the step at which finite
    // differences of the numerically inverted warps balance truncation and
    // inversion noise.
    c.oracle_step = 1e-3 * f.m;
    if (f.samples == 1) c.grid.t_max = c.grid.t_min;
    return c;
}

int cmd_schwarzschild(const SchwarzschildFlags& f, std::ostream& out, std::ostream& err) {
    if (!(f.m > 0.0) || !std::isfinite(f.m)) throw ConfigError("--m must be a positive number");
    if (f.samples < 1) throw ConfigError("--samples must be positive");
    if (!(0.0 < f.window_lo && f.window_lo <= f.window_hi && f.window_hi < 1.0)) {
        throw ConfigError("window fractions must satisfy 0 < lo <= hi < 1");
    }
    if (!(f.tolerance > 0.0)) throw ConfigError("--tolerance must be positive");

    const SpacetimeConfig config = interior_config(f);
    if (!f.emit_config.empty()) emit(to_json(config), f.emit_config, out);
    const MultiplyWarpedSpacetime m = build_spacetime(config);
    const double lo = config.grid.t_min, hi = config.grid.t_max;
    schwarzschild::FlatnessReport report;
    try {
        report = schwarzschild::ricci_flatness(m, lo, hi, f.samples);
    } catch (const Error& e) {
        throw EvaluationError(e.what());
    }

    std::vector<double> oracle_max(report.samples.size(), 0.0);
    if (f.oracle) {
        parallel_for(report.samples.size(), thread_count(), [&](std::size_t k) {
            const double mu = report.samples[k].mu;
            const oracle::Curvature c = oracle::curvature_at(m, mu, {}, {*config.oracle_step});
            for (int a = 0; a < 4; ++a) {
                for (int b = 0; b < 4; ++b) {
                    const double v = a == b ? c.ricci(a, a) / m.metric_diagonal(a, mu, {}, Side::Auto) : c.ricci(a, b);
                    oracle_max[k] = std::max(oracle_max[k], std::abs(v));
                }
            }
        });
    }

    std::ostringstream csv;
    std::vector<std::string> header{"mu", "nu", "f1", "f2", "f2_prime", "conserved"};
    for (int a = 0; a < 4; ++a) header.push_back(index_name("Rhat", a));
    header.push_back("max_abs_ricci");
    if (f.oracle) header.push_back("oracle_max_ricci");
    write_csv_row(csv, header);

    double conserved_error = 0.0, identity_error = 0.0, worst_oracle = 0.0;
    for (std::size_t k = 0; k < report.samples.size(); ++k) {
        const auto& s = report.samples[k];
        std::vector<std::string> cells{format_real(s.mu),       format_real(s.nu), format_real(s.f1),
                                       format_real(s.f2),       format_real(s.f2_prime),
                                       format_real(s.conserved)};
        for (double v : s.ricci_orthonormal) cells.push_back(format_real(v));
        cells.push_back(format_real(s.max_abs_ricci));
        if (f.oracle) cells.push_back(format_real(oracle_max[k]));
        write_csv_row(csv, cells);
        conserved_error = std::max(conserved_error, std::abs(s.conserved - 2.0 * f.m));
        identity_error = std::max(identity_error, std::abs(s.f1 - s.f2_prime));
        worst_oracle = std::max(worst_oracle, oracle_max[k]);
    }
    emit(csv.str(), f.out, out);

    const bool flat = report.max_residual < f.tolerance;
    const bool conserved = conserved_error < f.tolerance;
    const bool identity = identity_error < f.tolerance;
    const bool oracle_ok = !f.oracle || worst_oracle < 1e-6;
    err << "schwarzschild m=" << format_real(f.m) << ", " << f.samples << " samples on ["
        << format_real(lo) << ", " << format_real(hi) << "]\n"
        << "  max |Rhat|            " << format_real(report.max_residual) << (flat ? " PASS" : " FAIL") << '\n'
        << "  max |conserved - 2m|  " << format_real(conserved_error) << (conserved ? " PASS" : " FAIL") << '\n'
        << "  max |f1 - f2'|        " << format_real(identity_error) << (identity ? " PASS" : " FAIL") << '\n';
    if (f.oracle) {
        err << "  oracle max |Ricci|    " << format_real(worst_oracle) << (oracle_ok ? " PASS" : " FAIL") << '\n';
    }
    return flat && conserved && identity && oracle_ok ? kOk : kCheckFailed;
}

void add_curvature_options(CLI::App* cmd, CurvatureFlags& f, bool oracle_flag) {
    cmd->add_option("--config", f.config, "Spacetime config (JSON, see docs/config.md)")->required();
    cmd->add_option("--out", f.out, "Write the report here instead of stdout");
    if (oracle_flag) cmd->add_flag("--oracle", f.oracle, "Add finite-difference residual columns");
    cmd->add_option("--tolerance", f.tolerance, "Relative oracle tolerance; the absolute floor is 1/100 of it")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--fd-step", f.fd_step, "Finite-difference step of the oracle (default 1e-3)")
        ->check(CLI::PositiveNumber);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curvature of multiply warped product spacetimes", "warpcurv"};
    app.require_subcommand(1);

    CurvatureFlags ricci_flags, classify_flags, verify_flags;
    SchwarzschildFlags sch;

    auto* ricci = app.add_subcommand("ricci", "Tabulate the Ricci diagonal on the config grid as CSV");
    add_curvature_options(ricci, ricci_flags, true);

    auto* classify = app.add_subcommand("classify", "Classify the junction (exit 0 if C1, 1 if only C0)");
    classify->add_option("--config", classify_flags.config, "Spacetime config")->required();
    classify->add_option("--out", classify_flags.out, "Write the report here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Compare analytic curvature with the finite-difference oracle");
    add_curvature_options(verify, verify_flags, false);

    auto* schw = app.add_subcommand("schwarzschild", "Tabulate and check the interior Schwarzschild warps");
    schw->add_option("--m", sch.m, "Mass in geometric units");
    schw->add_option("--samples", sch.samples, "Number of grid points");
    schw->add_option("--tolerance", sch.tolerance, "Bound for Ricci, conserved quantity and f1 = f2'");
    schw->add_option("--window-lo", sch.window_lo, "Lower grid end as a fraction of m pi");
    schw->add_option("--window-hi", sch.window_hi, "Upper grid end as a fraction of m pi");
    schw->add_flag("--oracle", sch.oracle, "Also check the finite-difference Ricci (bound 1e-6)");
    schw->add_option("--out", sch.out, "Write the table here instead of stdout");
    schw->add_option("--emit-config", sch.emit_config, "Write an equivalent spacetime config");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*ricci) return cmd_ricci(ricci_flags, out, err);
        if (*classify) return cmd_classify(classify_flags, out, err);
        if (*verify) return cmd_verify(verify_flags, out, err);
        return cmd_schwarzschild(sch, out, err);
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const Error& e) {
        err << "evaluation error: " << e.what() << '\n';
        return kEvaluationError;
    }
}

} // namespace warpcurv::cli
