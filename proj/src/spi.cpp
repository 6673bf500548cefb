#include "cournot/spi.hpp"

#include <algorithm>
#include <cmath>

namespace cournot {

std::pair<TimeSeries, TimeSeries> price_update(const SpaceTimeField& density,
                                               const SpaceTimeField& q_bar, const PriceModel& pm,
                                               const GridSpec& grid) {
    TimeSeries price(grid, TimeAlignment::Transition);
    TimeSeries production(grid, TimeAlignment::Transition);
    for (int tau = 0; tau < grid.n_time; ++tau) {
        double psi = 0.0;
        for (int i = 0; i <= grid.n_space; ++i) {
            psi += density(tau + 1, i) * q_bar(tau, i);
        }
        psi *= grid.h;
        production[tau] = psi;
        // The density may carry -1e-14 noise from the linear solve; the price
        // function needs a nonnegative argument.
        price[tau] = pm.price(grid.t(tau), std::max(psi, 0.0));
    }
    return {std::move(price), std::move(production)};
}

SpaceTimeField policy_update(const SpaceTimeField& value, const TimeSeries& price,
                             const ModelParams& params, const GridSpec& grid) {
    return greedy_policy(value, price, params, grid);
}

SpaceTimeField policy_smoothing(const SpaceTimeField& q_bar, const SpaceTimeField& q_next, int n,
                                const LearningSchedule& schedule) {
    const double zeta = schedule.zeta(n);
    const GridSpec& grid = q_bar.grid();
    SpaceTimeField out(grid, FieldKind::Policy);
    for (int tau = 0; tau <= grid.n_time; ++tau) {
        for (int i = 0; i <= grid.ghost_index(); ++i) {
            out(tau, i) = (1.0 - zeta) * q_bar(tau, i) + zeta * q_next(tau, i);
        }
    }
    return out;
}

double compute_an(const SpaceTimeField& density_next, const SpaceTimeField& q_next,
                  const SpaceTimeField& q_bar, const GridSpec& grid) {
    double acc = 0.0;
    for (int tau = 0; tau < grid.n_time; ++tau) {
        for (int i = 0; i <= grid.n_space; ++i) {
            const double dq = q_next(tau, i) - q_bar(tau, i);
            acc += density_next(tau + 1, i) * dq * dq;
        }
    }
    return acc * grid.h * grid.dt;
}

double compute_exploitability(const SpaceTimeField& value, const SpaceTimeField& best_response,
                              std::span<const double> m0, const GridSpec& grid) {
    double acc = 0.0;
    for (int i = 0; i <= grid.n_space; ++i) {
        const auto k = static_cast<std::size_t>(i);
        acc += (best_response(0, i) - value(0, i)) * m0[k];
    }
    return acc * grid.h;
}

EquilibriumSolution spi_solve(const ModelParams& params, const GridSpec& grid,
                              std::span<const double> m0, std::span<const double> terminal,
                              const SpaceTimeField& q0, const SpiConfig& cfg) {
    double terminal_sup = 0.0;
    for (int i = 0; i <= grid.n_space; ++i) {
        terminal_sup = std::max(terminal_sup, std::abs(terminal[static_cast<std::size_t>(i)]));
    }
    const double br_tol = 1e-9 * std::max(1.0, terminal_sup);
    const int br_max_inner = 200;

    EquilibriumSolution out{SpaceTimeField(grid, FieldKind::ValueFunction),
                            SpaceTimeField(grid, FieldKind::Density),
                            SpaceTimeField(grid, FieldKind::Policy),
                            SpaceTimeField(grid, FieldKind::Policy),
                            TimeSeries(grid, TimeAlignment::Transition),
                            TimeSeries(grid, TimeAlignment::Transition),
                            {},
                            false};
    out.history.reserve(static_cast<std::size_t>(cfg.max_iters));

    SpaceTimeField q_bar = q0;
    DensityEvolution dens = solve_forward(m0, q_bar, params, grid);

    for (int n = 0; n < cfg.max_iters; ++n) {
        auto [price, production] = price_update(dens.density, q_bar, params.price, grid);
        ValueEvolution val = policy_evaluation(q_bar, price, terminal, params, grid);
        SpaceTimeField q_next = policy_update(val.value, price, params, grid);

        const double residual = l2_distance(q_next, q_bar);
        const bool stop = residual <= cfg.epsilon || n == cfg.max_iters - 1;

        std::optional<double> exploitability;
        if (cfg.exploitability_every > 0 && (n % cfg.exploitability_every == 0 || stop)) {
            const BestResponse br =
                best_response_solve(price, terminal, params, grid, br_tol, br_max_inner);
            exploitability = compute_exploitability(val.value, br.value.value, m0, grid);
        }

        // The weighted metric pairs (Q^{n+1}, Qbar^n) with the density the
        // *smoothed* policy generates, so march that density first.
        SpaceTimeField q_bar_next = policy_smoothing(q_bar, q_next, n, cfg.schedule);
        DensityEvolution dens_next = solve_forward(m0, q_bar_next, params, grid);
        const double an = compute_an(dens_next.density, q_next, q_bar, grid);
        const double j_value = potential_objective(q_bar, dens.density, params, grid);

        out.history.push_back(IterationDiagnostics{n, residual, std::sqrt(an), exploitability,
                                                   j_value, dens.mass[grid.n_time]});

        if (stop) {
            out.value = std::move(val.value);
            out.density = std::move(dens.density);
            out.policy = std::move(q_next);
            out.smoothed_policy = std::move(q_bar);
            out.price = std::move(price);
            out.production = std::move(production);
            out.converged = residual <= cfg.epsilon;
            break;
        }
        q_bar = std::move(q_bar_next);
        dens = std::move(dens_next);
    }
    return out;
}

} // namespace cournot
