#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "cournot/fpk_solver.hpp"
#include "cournot/grid.hpp"
#include "cournot/model.hpp"
#include "cournot/spi.hpp"

namespace cournot {

enum class PriceVariant { Linear, Ces };

enum class TerminalKind { Zero, Ramp };

/// Terminal value profile. Zero is the default; Ramp is the cubic smoothstep
/// amplitude * (3 (x/L)^2 - 2 (x/L)^3), which vanishes at 0, is nondecreasing,
/// and has zero slope at L.
struct TerminalSpec {
    TerminalKind kind = TerminalKind::Zero;
    double amplitude = 0.0;

    bool operator==(const TerminalSpec&) const = default;
};

/// Complete description of one solver run. Round-trips losslessly through the
/// JSON config format; unknown keys in a config file are hard errors.
struct RunConfig {
    // grid
    double L = 1.0;
    double T = 1.0;
    int n_space = 2;
    int n_time = 1;
    // model
    double lambda = 0.0;
    double gamma = 1.0;
    double kappa = 1.0;
    DiffusionVariant diffusion_variant = DiffusionVariant::Constant;
    double sigma = 0.0;
    PriceVariant price_variant = PriceVariant::Ces;
    double E = 1.0;
    double rho = 0.0;
    double pi_sub = 0.0;  ///< linear variant only; 0 otherwise
    double eta = 0.0;     ///< CES variant only; 0 otherwise
    double delta = 0.0;   ///< CES variant only; 0 otherwise
    BumpSpec bump;
    TerminalSpec terminal;
    SpiConfig spi;
    // output
    std::string out_dir = "out";
    bool export_fields = true;
    bool export_series = true;
    bool export_convergence = true;
    bool plots = false;
    std::uint64_t seed = 0;  ///< reserved for randomized self-checks

    bool operator==(const RunConfig& other) const;
};

/// Paper experiment presets plus scaled-down CI variants:
/// test1-bm, test1-gbm, oil, test1-bm-ci, test1-gbm-ci, oil-ci.
/// Throws UsageError for an unknown name.
RunConfig preset(const std::string& name);

/// Names accepted by preset(), in listing order.
std::vector<std::string> preset_names();

nlohmann::json to_json(const RunConfig& config);

/// Parses a config document. Unknown keys anywhere are UsageErrors; value
/// constraints are checked when the run constructs its domain objects.
RunConfig parse_config(const nlohmann::json& doc);

// Domain-object builders shared by the runner and tests.
GridSpec make_grid(const RunConfig& config);
ModelParams make_model(const RunConfig& config);
std::vector<double> terminal_values(const TerminalSpec& spec, const GridSpec& grid);

} // namespace cournot
