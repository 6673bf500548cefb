#include "cournot/hjb_solver.hpp"

#include <algorithm>
#include <cmath>

#include "cournot/operators.hpp"

namespace cournot {

std::vector<double> policy_eval_step(std::span<const double> u_next,
                                     std::span<const double> q_bar_row, double price_value,
                                     const ModelParams& params, const GridSpec& grid) {
    const TridiagonalSystem sys =
        assemble_hjb_system(u_next, q_bar_row, price_value, params, grid);
    const std::vector<double> interior = thomas_solve(sys);

    std::vector<double> out(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    std::copy(interior.begin(), interior.end(), out.begin() + 1);
    out[static_cast<std::size_t>(grid.ghost_index())] = out[static_cast<std::size_t>(grid.n_space)];
    return out;
}

namespace {

void set_terminal_row(SpaceTimeField& field, std::span<const double> terminal,
                      const GridSpec& grid) {
    auto last = field.row(grid.n_time);
    for (int i = 0; i <= grid.n_space; ++i) {
        last[static_cast<std::size_t>(i)] = terminal[static_cast<std::size_t>(i)];
    }
    last[static_cast<std::size_t>(grid.ghost_index())] =
        last[static_cast<std::size_t>(grid.n_space)];
}

} // namespace

ValueEvolution policy_evaluation(const SpaceTimeField& q_bar, const TimeSeries& price,
                                 std::span<const double> terminal, const ModelParams& params,
                                 const GridSpec& grid) {
    ValueEvolution evo{SpaceTimeField(grid, FieldKind::ValueFunction)};
    set_terminal_row(evo.value, terminal, grid);

    for (int tau = grid.n_time - 1; tau >= 0; --tau) {
        std::vector<double> row;
        try {
            row = policy_eval_step(evo.value.row(tau + 1), q_bar.row(tau), price[tau], params,
                                   grid);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " (value step " + std::to_string(tau) +
                                 ")");
        }
        auto dst = evo.value.row(tau);
        std::copy(row.begin(), row.end(), dst.begin());
    }
    return evo;
}

SpaceTimeField greedy_policy(const SpaceTimeField& value, const TimeSeries& price,
                             const ModelParams& params, const GridSpec& grid) {
    SpaceTimeField q(grid, FieldKind::Policy);
    for (int tau = 0; tau < grid.n_time; ++tau) {
        const auto u_row = value.row(tau);
        for (int i = 1; i <= grid.n_space; ++i) {
            const double slope =
                gradient_sharp(u_row, i, grid.h) - price[tau] + params.gamma;
            q(tau, i) = hamiltonian_argmax(slope, params.kappa, params.q_max);
        }
        q(tau, 0) = q(tau, 1);
        q(tau, grid.ghost_index()) = q(tau, grid.n_space);
    }
    return q;
}

namespace {

double sup_distance(const SpaceTimeField& a, const SpaceTimeField& b, const GridSpec& grid) {
    double m = 0.0;
    for (int tau = 0; tau <= grid.n_time; ++tau) {
        for (int i = 0; i <= grid.n_space; ++i) {
            m = std::max(m, std::abs(a(tau, i) - b(tau, i)));
        }
    }
    return m;
}

} // namespace

BestResponse best_response_solve(const TimeSeries& price, std::span<const double> terminal,
                                 const ModelParams& params, const GridSpec& grid, double tol,
                                 int max_inner) {
    SpaceTimeField q(grid, FieldKind::Policy);  // start from the idle policy
    ValueEvolution current = policy_evaluation(q, price, terminal, params, grid);

    BestResponse out{std::move(current), std::move(q), false, 0.0, 0, {}};
    for (int k = 0; k < max_inner; ++k) {
        SpaceTimeField q_next = greedy_policy(out.value.value, price, params, grid);
        ValueEvolution next = policy_evaluation(q_next, price, terminal, params, grid);
        const double defect = sup_distance(next.value, out.value.value, grid);

        out.value = std::move(next);
        out.policy = std::move(q_next);
        out.defect = defect;
        out.iterations = k + 1;
        out.defect_history.push_back(defect);
        if (defect <= tol) {
            out.converged = true;
            break;
        }
    }
    out.policy = greedy_policy(out.value.value, price, params, grid);
    return out;
}

} // namespace cournot
