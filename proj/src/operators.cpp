#include "cournot/operators.hpp"

#include <cmath>

namespace cournot {

double laplacian_sharp(std::span<const double> row, int i, double h) {
    const auto k = static_cast<std::size_t>(i);
    return (row[k - 1] - 2.0 * row[k] + row[k + 1]) / (h * h);
}

double gradient_sharp(std::span<const double> row, int i, double h) {
    const auto k = static_cast<std::size_t>(i);
    return (row[k] - row[k - 1]) / h;
}

double divergence_sharp(std::span<const double> product_row, int i, double h, int n_space) {
    const auto k = static_cast<std::size_t>(i);
    if (i < n_space) {
        return (product_row[k + 1] - product_row[k]) / h;
    }
    return -product_row[k] / h;
}

TridiagonalSystem assemble_hjb_system(std::span<const double> u_next,
                                      std::span<const double> q_bar, double price_value,
                                      const ModelParams& params, const GridSpec& grid) {
    const int n = grid.n_space;
    const double h = grid.h;
    const double inv_h2 = 1.0 / (h * h);
    const double inv_dt = 1.0 / grid.dt;

    TridiagonalSystem sys(n);
    for (int i = 1; i <= n; ++i) {
        const int r = i - 1;  // row index of unknown U_i
        const double s = params.diffusion.sigma_sq(grid.x(i));
        const double q = q_bar[static_cast<std::size_t>(i)];

        double d = inv_dt + 2.0 * s * inv_h2 + params.lambda + q / h;
        if (i > 1) {
            sys.sub[static_cast<std::size_t>(r - 1)] = -(s * inv_h2 + q / h);
        }
        if (i < n) {
            sys.super[static_cast<std::size_t>(r)] = -s * inv_h2;
        } else {
            d -= s * inv_h2;  // ghost fold: U_{N_L+1} = U_{N_L}
        }
        sys.diag[static_cast<std::size_t>(r)] = d;
        sys.rhs[static_cast<std::size_t>(r)] = u_next[static_cast<std::size_t>(i)] * inv_dt +
                                               q * (price_value - params.gamma) -
                                               params.kappa * q * q;
    }
    return sys;
}

TridiagonalSystem assemble_fpk_system(std::span<const double> m_prev,
                                      std::span<const double> q_bar, const ModelParams& params,
                                      const GridSpec& grid) {
    const int n = grid.n_space;
    const double h = grid.h;
    const double inv_h2 = 1.0 / (h * h);
    const double inv_dt = 1.0 / grid.dt;

    TridiagonalSystem sys(n);
    for (int i = 1; i <= n; ++i) {
        const int r = i - 1;  // row index of unknown M_i
        const double s_here = params.diffusion.sigma_sq(grid.x(i));
        const double q_here = q_bar[static_cast<std::size_t>(i)];

        if (i > 1) {
            const double s_left = params.diffusion.sigma_sq(grid.x(i - 1));
            sys.sub[static_cast<std::size_t>(r - 1)] = -s_left * inv_h2;
        }
        if (i < n) {
            const double s_right = params.diffusion.sigma_sq(grid.x(i + 1));
            const double q_right = q_bar[static_cast<std::size_t>(i + 1)];
            sys.diag[static_cast<std::size_t>(r)] = inv_dt + 2.0 * s_here * inv_h2 + q_here / h;
            sys.super[static_cast<std::size_t>(r)] = -(s_right * inv_h2 + q_right / h);
        } else {
            // Ghost fold sigma^2_{N_L} M_{N_L} = sigma^2_{N_L+1} M_{N_L+1} plus
            // the flux branch of div#.
            sys.diag[static_cast<std::size_t>(r)] = inv_dt + s_here * inv_h2 + q_here / h;
        }
        sys.rhs[static_cast<std::size_t>(r)] = m_prev[static_cast<std::size_t>(i)] * inv_dt;
    }
    return sys;
}

std::vector<double> thomas_solve(const TridiagonalSystem& sys) {
    const int n = sys.n;
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);  // modified super
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);  // modified rhs

    double pivot = sys.diag[0];
    if (pivot == 0.0) {
        throw NumericalError("thomas_solve: zero pivot in row 0");
    }
    if (n > 1) {
        c[0] = sys.super[0] / pivot;
    }
    d[0] = sys.rhs[0] / pivot;

    for (int i = 1; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        pivot = sys.diag[k] - sys.sub[k - 1] * c[k - 1];
        if (pivot == 0.0) {
            throw NumericalError("thomas_solve: zero pivot in row " + std::to_string(i));
        }
        if (i < n - 1) {
            c[k] = sys.super[k] / pivot;
        }
        d[k] = (sys.rhs[k] - sys.sub[k - 1] * d[k - 1]) / pivot;
    }

    for (int i = n - 2; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        d[k] -= c[k] * d[k + 1];
    }
    return d;
}

double adjointness_defect(std::span<const double> q_row, const ModelParams& params,
                          const GridSpec& grid, std::span<const double> phi,
                          std::span<const double> m) {
    const int n = grid.n_space;
    const double h = grid.h;

    std::vector<double> sigma_sq(static_cast<std::size_t>(n) + 2);
    std::vector<double> sigma_m(static_cast<std::size_t>(n) + 2);
    std::vector<double> q_m(static_cast<std::size_t>(n) + 2);
    for (int i = 0; i <= n + 1; ++i) {
        const auto k = static_cast<std::size_t>(i);
        sigma_sq[k] = params.diffusion.sigma_sq(grid.x(i));
        sigma_m[k] = sigma_sq[k] * m[k];
        q_m[k] = (i <= n ? q_row[k] : 0.0) * m[k];
    }

    // The i = 0 terms vanish under phi_0 = m_0 = 0.
    double lhs = 0.0;
    double rhs = 0.0;
    for (int i = 1; i <= n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        const double a_phi =
            sigma_sq[k] * laplacian_sharp(phi, i, h) - q_row[k] * gradient_sharp(phi, i, h);
        const double a_star_m =
            laplacian_sharp(sigma_m, i, h) + divergence_sharp(q_m, i, h, n);
        lhs += a_phi * m[k];
        rhs += phi[k] * a_star_m;
    }
    return std::abs(h * lhs - h * rhs);
}

} // namespace cournot
