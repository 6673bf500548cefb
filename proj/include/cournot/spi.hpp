#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cournot/fpk_solver.hpp"
#include "cournot/grid.hpp"
#include "cournot/hjb_solver.hpp"
#include "cournot/model.hpp"

namespace cournot {

/// Smoothing rates zeta_n = beta / (n + beta). At the first smoothing (n = 0)
/// zeta is 1, so the first averaged policy equals the first greedy policy.
struct LearningSchedule {
    int beta = 2;

    double zeta(int n) const { return static_cast<double>(beta) / (n + beta); }
};

struct SpiConfig {
    double epsilon = 1e-4;           ///< stopping tolerance on the weighted l2 residual
    int max_iters = 2000;
    int exploitability_every = 10;   ///< 0 disables the best-response diagnostic
    LearningSchedule schedule{};
};

struct IterationDiagnostics {
    int n = 0;
    double residual = 0.0;     ///< l2 of Q^{n+1} - Qbar^n
    double weighted_an = 0.0;  ///< l2 of sqrt(M^{n+1}) (Q^{n+1} - Qbar^n)
    std::optional<double> exploitability;
    double j_value = 0.0;      ///< potential objective at (Qbar^n, M^n)
    double terminal_mass = 0.0;
};

struct EquilibriumSolution {
    SpaceTimeField value;            ///< U
    SpaceTimeField density;          ///< M
    SpaceTimeField policy;           ///< greedy Q of the final iteration
    SpaceTimeField smoothed_policy;  ///< Qbar that generated density and price
    TimeSeries price;                ///< transition aligned
    TimeSeries production;           ///< psi_tau = h sum_i M_{tau+1,i} Qbar_{tau,i}
    std::vector<IterationDiagnostics> history;
    bool converged = false;
};

/// Aggregate production and price series for a density/policy pair. The
/// density row tau+1 is paired with the policy row tau.
std::pair<TimeSeries, TimeSeries> price_update(const SpaceTimeField& density,
                                               const SpaceTimeField& q_bar, const PriceModel& pm,
                                               const GridSpec& grid);

/// Greedy policy update from a value field and price series (the clamped
/// pointwise maximizer of the running reward).
SpaceTimeField policy_update(const SpaceTimeField& value, const TimeSeries& price,
                             const ModelParams& params, const GridSpec& grid);

/// Convex combination (1 - zeta_n) Qbar + zeta_n Q with zeta_n = beta/(n+beta).
SpaceTimeField policy_smoothing(const SpaceTimeField& q_bar, const SpaceTimeField& q_next, int n,
                                const LearningSchedule& schedule);

/// Density-weighted squared policy gap
///   sum_{tau,i} M_{tau+1,i} (Q_{tau,i} - Qbar_{tau,i})^2 h dt.
/// Its square root is the weighted convergence metric.
double compute_an(const SpaceTimeField& density_next, const SpaceTimeField& q_next,
                  const SpaceTimeField& q_bar, const GridSpec& grid);

/// Best-response gain h sum_i (V_{0,i} - U_{0,i}) m0_i; nonnegative up to
/// discretization error, zero exactly at the equilibrium.
double compute_exploitability(const SpaceTimeField& value, const SpaceTimeField& best_response,
                              std::span<const double> m0, const GridSpec& grid);

/// Smoothed policy iteration: loops mean-field update, price update, policy
/// evaluation, greedy update, and smoothing until the residual drops below
/// cfg.epsilon or cfg.max_iters is reached. Diagnostics are recorded every
/// iteration; exploitability every cfg.exploitability_every iterations and at
/// the final one.
EquilibriumSolution spi_solve(const ModelParams& params, const GridSpec& grid,
                              std::span<const double> m0, std::span<const double> terminal,
                              const SpaceTimeField& q0, const SpiConfig& cfg);

} // namespace cournot
