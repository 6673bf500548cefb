#include "cournot/fpk_solver.hpp"

#include <algorithm>
#include <cmath>

#include "cournot/operators.hpp"

namespace cournot {

std::vector<double> initial_density(const BumpSpec& spec, const GridSpec& grid) {
    std::vector<double> row(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    for (int i = 1; i <= grid.n_space; ++i) {
        const double x = grid.x(i);
        const double v = std::exp(-spec.rate * (x - spec.center) * (x - spec.center)) -
                         spec.floor_level;
        row[static_cast<std::size_t>(i)] = std::max(v, 0.0);
    }
    const double mass = space_integral(row, grid);
    if (!(mass > 0.0)) {
        throw ConfigError("initial density: bump has no mass on the grid");
    }
    for (int i = 0; i <= grid.n_space; ++i) {
        row[static_cast<std::size_t>(i)] /= mass;
    }
    row[static_cast<std::size_t>(grid.ghost_index())] = row[static_cast<std::size_t>(grid.n_space)];
    return row;
}

void apply_density_closure(std::span<double> row, const ModelParams& params,
                           const GridSpec& grid) {
    const int n = grid.n_space;
    const double s_last = params.diffusion.sigma_sq(grid.x(n));
    const double s_ghost = params.diffusion.sigma_sq(grid.x(n + 1));
    const double m_last = row[static_cast<std::size_t>(n)];
    row[static_cast<std::size_t>(n + 1)] = s_ghost > 0.0 ? s_last * m_last / s_ghost : m_last;
}

std::vector<double> fpk_step(std::span<const double> m_row, std::span<const double> q_bar_row,
                             const ModelParams& params, const GridSpec& grid) {
    const TridiagonalSystem sys = assemble_fpk_system(m_row, q_bar_row, params, grid);
    const std::vector<double> interior = thomas_solve(sys);

    std::vector<double> out(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    std::copy(interior.begin(), interior.end(), out.begin() + 1);
    apply_density_closure(out, params, grid);
    return out;
}

DensityEvolution solve_forward(std::span<const double> m0, const SpaceTimeField& q_bar,
                               const ModelParams& params, const GridSpec& grid) {
    DensityEvolution evo{SpaceTimeField(grid, FieldKind::Density),
                         TimeSeries(grid, TimeAlignment::Node)};

    auto first = evo.density.row(0);
    for (int i = 0; i <= grid.n_space; ++i) {
        first[static_cast<std::size_t>(i)] = m0[static_cast<std::size_t>(i)];
    }
    apply_density_closure(first, params, grid);
    evo.mass[0] = space_integral(first, grid);

    for (int tau = 0; tau < grid.n_time; ++tau) {
        std::vector<double> next;
        try {
            next = fpk_step(evo.density.row(tau), q_bar.row(tau), params, grid);
        } catch (const NumericalError& e) {
            throw NumericalError(std::string(e.what()) + " (density step " +
                                 std::to_string(tau) + ")");
        }
        auto dst = evo.density.row(tau + 1);
        std::copy(next.begin(), next.end(), dst.begin());
        evo.mass[tau + 1] = space_integral(dst, grid);
    }
    return evo;
}

} // namespace cournot
