#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "cournot/runner.hpp"

namespace {

cournot::RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw cournot::UsageError("cannot open config file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw cournot::UsageError("config file '" + path + "': " + e.what());
    }
    return cournot::parse_config(doc);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical solver for Cournot mean field games of controls"};
    app.require_subcommand(1);

    CLI::App* presets_cmd = app.add_subcommand("presets", "List available presets");

    CLI::App* solve_cmd = app.add_subcommand("solve", "Run the policy iteration solver");
    std::string preset_name;
    std::string config_path;
    std::string out_dir;
    int beta = -1;
    double epsilon = -1.0;
    int max_iters = -1;
    int exploitability_every = -1;
    bool plots = false;
    auto* preset_opt = solve_cmd->add_option("--preset", preset_name, "Named preset");
    auto* config_opt = solve_cmd->add_option("--config", config_path, "Config file (JSON)");
    preset_opt->excludes(config_opt);
    solve_cmd->add_option("--out", out_dir, "Output directory");
    solve_cmd->add_option("--beta", beta, "Smoothing schedule beta");
    solve_cmd->add_option("--epsilon", epsilon, "Stopping tolerance");
    solve_cmd->add_option("--max-iters", max_iters, "Iteration cap");
    solve_cmd->add_option("--exploitability-every", exploitability_every,
                          "Best-response diagnostic period (0 disables)");
    solve_cmd->add_flag("--plots", plots, "Emit SVG plots");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (presets_cmd->parsed()) {
        for (const auto& name : cournot::preset_names()) {
            std::cout << name << '\n';
        }
        return 0;
    }

    try {
        cournot::RunConfig config;
        if (!preset_name.empty()) {
            config = cournot::preset(preset_name);
        } else if (!config_path.empty()) {
            config = load_config_file(config_path);
        } else {
            throw cournot::UsageError("solve needs either --preset or --config");
        }
        if (!out_dir.empty()) {
            config.out_dir = out_dir;
        }
        if (beta >= 0) {
            config.spi.schedule.beta = beta;
        }
        if (epsilon >= 0.0) {
            config.spi.epsilon = epsilon;
        }
        if (max_iters >= 0) {
            config.spi.max_iters = max_iters;
        }
        if (exploitability_every >= 0) {
            config.spi.exploitability_every = exploitability_every;
        }
        if (plots) {
            config.plots = true;
        }

        const cournot::RunResult result = cournot::run(config);
        std::cout << (result.manifest.converged ? "converged" : "not converged") << " after "
                  << result.manifest.iterations << " iterations (final residual "
                  << result.manifest.final_residual << ") in "
                  << result.manifest.wall_clock_seconds << " s\n"
                  << "artifacts in " << config.out_dir << '\n';
        return 0;
    } catch (const cournot::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const cournot::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
