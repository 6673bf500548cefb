#include "cournot/runner.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>

#include "cournot/export.hpp"
#include "cournot/plots.hpp"

namespace cournot {

namespace {

std::vector<int> snapshot_times(int last) {
    std::vector<int> taus = {0, last / 4, last / 2, 3 * last / 4, last};
    taus.erase(std::unique(taus.begin(), taus.end()), taus.end());
    return taus;
}

void write_manifest(const RunManifest& manifest, const std::filesystem::path& path) {
    nlohmann::json doc;
    doc["config"] = to_json(manifest.config);
    doc["converged"] = manifest.converged;
    doc["iterations"] = manifest.iterations;
    doc["final_residual"] = manifest.final_residual;
    doc["wall_clock_seconds"] = manifest.wall_clock_seconds;
    doc["artifacts"] = nlohmann::json::array();
    for (const ArtifactRecord& a : manifest.artifacts) {
        doc["artifacts"].push_back({{"path", a.path}, {"fnv1a64", a.hash}});
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << doc.dump(2) << '\n';
}

} // namespace

RunResult run(const RunConfig& config) {
    const auto t_start = std::chrono::steady_clock::now();

    const GridSpec grid = make_grid(config);
    const ModelParams params = make_model(config);
    const std::vector<double> m0 = initial_density(config.bump, grid);
    const std::vector<double> u_terminal = terminal_values(config.terminal, grid);
    const SpaceTimeField q0(grid, FieldKind::Policy);

    RunResult result{spi_solve(params, grid, m0, u_terminal, q0, config.spi), RunManifest{}};
    const EquilibriumSolution& sol = result.solution;

    const std::filesystem::path out_dir(config.out_dir);
    std::filesystem::create_directories(out_dir);

    std::vector<std::filesystem::path> files;
    if (config.export_series) {
        export_series(sol, SeriesKind::Price, out_dir / "price.csv");
        export_series(sol, SeriesKind::Production, out_dir / "production.csv");
        export_series(sol, SeriesKind::Mass, out_dir / "mass.csv");
        files.insert(files.end(),
                     {out_dir / "price.csv", out_dir / "production.csv", out_dir / "mass.csv"});
    }
    if (config.export_convergence) {
        export_series(sol, SeriesKind::Convergence, out_dir / "convergence.csv");
        files.push_back(out_dir / "convergence.csv");
    }
    if (config.export_fields) {
        const std::vector<int> node_taus = snapshot_times(grid.n_time);
        const std::vector<int> transition_taus = snapshot_times(grid.n_time - 1);
        export_field(sol, FieldChoice::Value, node_taus, out_dir / "u.csv");
        export_field(sol, FieldChoice::Density, node_taus, out_dir / "m.csv");
        export_field(sol, FieldChoice::Policy, transition_taus, out_dir / "q.csv");
        files.insert(files.end(), {out_dir / "u.csv", out_dir / "m.csv", out_dir / "q.csv"});
    }
    if (config.plots) {
        const auto plotted = emit_plots(sol, out_dir);
        files.insert(files.end(), plotted.begin(), plotted.end());
    }

    RunManifest& manifest = result.manifest;
    manifest.config = config;
    manifest.converged = sol.converged;
    manifest.iterations = static_cast<int>(sol.history.size());
    manifest.final_residual = sol.history.empty() ? 0.0 : sol.history.back().residual;
    for (const auto& f : files) {
        manifest.artifacts.push_back(
            ArtifactRecord{f.lexically_relative(out_dir).generic_string(), fnv1a64_file(f)});
    }
    manifest.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    write_manifest(manifest, out_dir / "manifest.json");
    return result;
}

} // namespace cournot
