#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "warpcurv/error.hpp"
#include "warpcurv/geometry.hpp"

namespace warpcurv::cli {

// Malformed or inconsistent configuration file.
class ConfigError : public Error {
public:
    using Error::Error;
};

enum class Builtin { None, SchwarzschildF1, SchwarzschildF2 };

struct WarpSource {
    // Expression text when builtin == None.
    std::string expression;
    Builtin builtin = Builtin::None;
    double m = 1.0;
};

struct FiberConfig {
    std::string label;
    int dim = 1;
    double curvature = 0.0;
    WarpSource warp;
};

struct GridConfig {
    int points = 1;
    double t_min = 0.0;
    double t_max = 0.0;
};

/// Declarative description of a spacetime plus the grid to evaluate it on.
/// The on-disk grammar is documented in docs/config.md.
struct SpacetimeConfig {
    Interval base;
    std::vector<FiberConfig> fibers;
    std::optional<double> junction;
    GridConfig grid;
    double theta = std::numbers::pi / 2;
    // Finite-difference step for the oracle, when the config fixes one.
    std::optional<double> oracle_step;
};

SpacetimeConfig parse_config(std::string_view text);
SpacetimeConfig load_config(const std::string& path);

// Pretty-printed JSON that parse_config reads back to an equal config.
std::string to_json(const SpacetimeConfig& config);

// Throws ConfigError for anything the core rejects at construction time.
MultiplyWarpedSpacetime build_spacetime(const SpacetimeConfig& config);

// Evenly spaced, t_min and t_max included.
std::vector<double> grid_points(const GridConfig& grid);

} // namespace warpcurv::cli
