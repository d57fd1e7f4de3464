#include "cli/config.hpp"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"
#include "warpcurv/schwarzschild.hpp"

namespace warpcurv::cli {

namespace {

using nlohmann::json;

void require_object(const json& j, const std::string& where) {
    if (!j.is_object()) throw ConfigError(where + " must be an object");
}

void reject_unknown(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw ConfigError("unknown key '" + key + "' in " + where);
    }
}

const json& required(const json& j, const char* key, const std::string& where) {
    const auto it = j.find(key);
    if (it == j.end()) throw ConfigError(where + " is missing required key '" + key + "'");
    return *it;
}

double real(const json& j, const std::string& where) {
    if (!j.is_number()) throw ConfigError(where + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(where + " must be finite");
    return v;
}

int integer(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ConfigError(where + " must be an integer");
    const auto v = j.get<long long>();
    if (v < 1 || v > 1'000'000) throw ConfigError(where + " must lie in [1, 1000000]");
    return static_cast<int>(v);
}

const char* builtin_name(Builtin b) {
    switch (b) {
    case Builtin::SchwarzschildF1: return "schwarzschild_f1";
    case Builtin::SchwarzschildF2: return "schwarzschild_f2";
    case Builtin::None: break;
    }
    return "";
}

WarpSource parse_warp(const json& j, const std::string& where) {
    WarpSource w;
    if (j.is_string()) {
        w.expression = j.get<std::string>();
        return w;
    }
    if (!j.is_object()) throw ConfigError(where + " must be an expression string or a builtin object");
    reject_unknown(j, where, {"builtin", "m"});
    const json& name = required(j, "builtin", where);
    if (!name.is_string()) throw ConfigError(where + ".builtin must be a string");
    const std::string n = name.get<std::string>();
    if (n == "schwarzschild_f1") {
        w.builtin = Builtin::SchwarzschildF1;
    } else if (n == "schwarzschild_f2") {
        w.builtin = Builtin::SchwarzschildF2;
    } else {
        throw ConfigError(where + ".builtin '" + n + "' is not one of schwarzschild_f1, schwarzschild_f2");
    }
    w.m = real(required(j, "m", where), where + ".m");
    if (!(w.m > 0.0)) throw ConfigError(where + ".m must be positive");
    return w;
}

FiberConfig parse_fiber(const json& j, std::size_t index) {
    const std::string where = "fibers[" + std::to_string(index) + "]";
    require_object(j, where);
    reject_unknown(j, where, {"label", "dim", "curvature", "warp"});
    FiberConfig f;
    f.label = "F" + std::to_string(index + 1);
    if (const auto it = j.find("label"); it != j.end()) {
        if (!it->is_string()) throw ConfigError(where + ".label must be a string");
        f.label = it->get<std::string>();
    }
    f.dim = integer(required(j, "dim", where), where + ".dim");
    if (const auto it = j.find("curvature"); it != j.end()) f.curvature = real(*it, where + ".curvature");
    f.warp = parse_warp(required(j, "warp", where), where + ".warp");
    return f;
}

} // namespace

SpacetimeConfig parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    require_object(root, "config");
    reject_unknown(root, "config", {"base", "fibers", "junction", "grid", "angles", "oracle"});

    SpacetimeConfig c;
    const json& base = required(root, "base", "config");
    require_object(base, "base");
    reject_unknown(base, "base", {"a", "b"});
    c.base = {real(required(base, "a", "base"), "base.a"), real(required(base, "b", "base"), "base.b")};
    if (!(c.base.a < c.base.b)) throw ConfigError("base.a must be less than base.b");

    const json& fibers = required(root, "fibers", "config");
    if (!fibers.is_array() || fibers.empty()) throw ConfigError("fibers must be a non-empty array");
    for (std::size_t i = 0; i < fibers.size(); ++i) c.fibers.push_back(parse_fiber(fibers[i], i));

    if (const auto it = root.find("junction"); it != root.end() && !it->is_null()) {
        c.junction = real(*it, "junction");
        if (!c.base.contains(*c.junction)) throw ConfigError("junction must lie inside the base interval");
    }

    const json& grid = required(root, "grid", "config");
    require_object(grid, "grid");
    reject_unknown(grid, "grid", {"points", "t_min", "t_max"});
    c.grid.points = integer(required(grid, "points", "grid"), "grid.points");
    c.grid.t_min = real(required(grid, "t_min", "grid"), "grid.t_min");
    c.grid.t_max = real(required(grid, "t_max", "grid"), "grid.t_max");
    if (c.grid.t_min > c.grid.t_max) throw ConfigError("grid.t_min must not exceed grid.t_max");
    if (!c.base.contains(c.grid.t_min) || !c.base.contains(c.grid.t_max)) {
        throw ConfigError("grid must lie strictly inside the base interval");
    }

    if (const auto it = root.find("angles"); it != root.end()) {
        require_object(*it, "angles");
        reject_unknown(*it, "angles", {"theta"});
        c.theta = real(required(*it, "theta", "angles"), "angles.theta");
    }

    if (const auto it = root.find("oracle"); it != root.end()) {
        require_object(*it, "oracle");
        reject_unknown(*it, "oracle", {"step"});
        c.oracle_step = real(required(*it, "step", "oracle"), "oracle.step");
        if (!(*c.oracle_step > 0.0)) throw ConfigError("oracle.step must be positive");
    }
    return c;
}

SpacetimeConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string to_json(const SpacetimeConfig& config) {
    json root = json::object();
    root["base"] = {{"a", config.base.a}, {"b", config.base.b}};
    json fibers = json::array();
    for (const auto& f : config.fibers) {
        json warp = f.warp.builtin == Builtin::None ? json(f.warp.expression)
                                                    : json{{"builtin", builtin_name(f.warp.builtin)}, {"m", f.warp.m}};
        fibers.push_back({{"label", f.label}, {"dim", f.dim}, {"curvature", f.curvature}, {"warp", warp}});
    }
    root["fibers"] = fibers;
    if (config.junction) root["junction"] = *config.junction;
    root["grid"] = {{"points", config.grid.points}, {"t_min", config.grid.t_min}, {"t_max", config.grid.t_max}};
    root["angles"] = {{"theta", config.theta}};
    if (config.oracle_step) root["oracle"] = {{"step", *config.oracle_step}};
    return root.dump(2) + "\n";
}

MultiplyWarpedSpacetime build_spacetime(const SpacetimeConfig& config) {
    try {
        std::vector<WarpedFiber> fibers;
        for (const auto& f : config.fibers) {
            const FiberSpec spec{f.dim, f.curvature, f.label};
            switch (f.warp.builtin) {
            case Builtin::None:
                fibers.push_back({spec, WarpFunction::parse(f.warp.expression, config.base)});
                break;
            case Builtin::SchwarzschildF1:
                fibers.push_back({spec, schwarzschild::f1_warp({f.warp.m})});
                break;
            case Builtin::SchwarzschildF2:
                fibers.push_back({spec, schwarzschild::f2_warp({f.warp.m})});
                break;
            }
        }
        return MultiplyWarpedSpacetime(config.base, std::move(fibers), config.junction);
    } catch (const ParseError& e) {
        throw ConfigError(std::string("warp expression: ") + e.what());
    } catch (const ConstructionError& e) {
        throw ConfigError(e.what());
    }
}

std::vector<double> grid_points(const GridConfig& grid) {
    std::vector<double> t;
    if (grid.points == 1) return {grid.t_min};
    for (int k = 0; k < grid.points; ++k) {
        t.push_back(grid.t_min + (grid.t_max - grid.t_min) * k / (grid.points - 1));
    }
    t.back() = grid.t_max;
    return t;
}

} // namespace warpcurv::cli
