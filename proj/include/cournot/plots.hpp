#pragma once

#include <filesystem>
#include <vector>

#include "cournot/spi.hpp"

namespace cournot {

/// Emits standalone SVG line charts (price, production, mass, convergence on a
/// log scale) next to the CSV artifacts. Returns the files written. Plotting
/// problems degrade to a warning on stderr instead of failing the run.
std::vector<std::filesystem::path> emit_plots(const EquilibriumSolution& sol,
                                              const std::filesystem::path& dir);

} // namespace cournot
