#pragma once

#include <span>
#include <vector>

#include "cournot/grid.hpp"
#include "cournot/model.hpp"

namespace cournot {

/// Truncated-Gaussian initial density (e^{-rate (x-center)^2} - floor)_+,
/// normalized to discrete mass one.
struct BumpSpec {
    double center = 0.0;
    double rate = 1.0;
    double floor_level = 0.0;
};

/// Evaluates the bump at the grid nodes, forces node 0 to zero, and normalizes
/// so that h * sum_{i=0}^{N_L} row_i = 1. The returned row has N_L + 2 entries.
/// Throws ConfigError when the bump has no mass on the grid.
std::vector<double> initial_density(const BumpSpec& spec, const GridSpec& grid);

/// Writes the flux-weighted ghost entry sigma^2_{N_L} m_{N_L} = sigma^2_{N_L+1} m_{N_L+1}.
/// Falls back to a plain copy when sigma^2 vanishes at the ghost node.
void apply_density_closure(std::span<double> row, const ModelParams& params,
                           const GridSpec& grid);

/// One implicit forward step of the density march. Input rows need entries
/// 0..N_L; the result has N_L + 2 entries with the ghost closure applied.
std::vector<double> fpk_step(std::span<const double> m_row, std::span<const double> q_bar_row,
                             const ModelParams& params, const GridSpec& grid);

struct DensityEvolution {
    SpaceTimeField density;  ///< density kind, >= -1e-14 everywhere
    TimeSeries mass;         ///< h sum_i M_{tau,i}, nonincreasing in tau
};

/// Forward march of the density under a fixed transition-aligned policy field.
DensityEvolution solve_forward(std::span<const double> m0, const SpaceTimeField& q_bar,
                               const ModelParams& params, const GridSpec& grid);

} // namespace cournot
