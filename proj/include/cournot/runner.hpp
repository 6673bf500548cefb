#pragma once

#include <string>
#include <vector>

#include "cournot/config.hpp"
#include "cournot/spi.hpp"

namespace cournot {

struct ArtifactRecord {
    std::string path;  ///< relative to the output directory
    std::string hash;  ///< FNV-1a 64 content hash, hex
};

struct RunManifest {
    RunConfig config;
    bool converged = false;
    int iterations = 0;
    double final_residual = 0.0;
    double wall_clock_seconds = 0.0;
    std::vector<ArtifactRecord> artifacts;
};

struct RunResult {
    EquilibriumSolution solution;
    RunManifest manifest;
};

/// Executes the full pipeline: grid/model construction, the policy iteration
/// loop, CSV/plot export per the config flags, and manifest.json in the
/// output directory.
RunResult run(const RunConfig& config);

} // namespace cournot
