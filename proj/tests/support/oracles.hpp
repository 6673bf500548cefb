#pragma once

// Test-only reference implementations, independent of the solver paths they
// check.

#include <cmath>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "cournot/grid.hpp"
#include "cournot/model.hpp"
#include "cournot/operators.hpp"

namespace cournot::test {

/// Dense Gaussian elimination with partial pivoting; reference for
/// thomas_solve. Matrix is row-major n x n.
inline std::vector<double> dense_solve(std::vector<double> a, std::vector<double> b) {
    const std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) {
                pivot = r;
            }
        }
        if (a[pivot * n + col] == 0.0) {
            throw std::runtime_error("dense_solve: singular matrix");
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(a[pivot * n + c], a[col * n + c]);
            }
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = a[r * n + col] / a[col * n + col];
            for (std::size_t c = col; c < n; ++c) {
                a[r * n + c] -= f * a[col * n + c];
            }
            b[r] -= f * b[col];
        }
    }
    std::vector<double> x(n, 0.0);
    for (std::size_t r = n; r-- > 0;) {
        double acc = b[r];
        for (std::size_t c = r + 1; c < n; ++c) {
            acc -= a[r * n + c] * x[c];
        }
        x[r] = acc / a[r * n + r];
    }
    return x;
}

inline std::vector<double> dense_from_tridiagonal(const TridiagonalSystem& sys) {
    const auto n = static_cast<std::size_t>(sys.n);
    std::vector<double> a(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
        a[r * n + r] = sys.diag[r];
        if (r > 0) {
            a[r * n + r - 1] = sys.sub[r - 1];
        }
        if (r + 1 < n) {
            a[r * n + r + 1] = sys.super[r];
        }
    }
    return a;
}

/// Row of N_L + 2 values satisfying the value-function boundary constraints:
/// phi_0 = 0, phi_{N_L+1} = phi_{N_L}.
inline std::vector<double> random_value_row(const GridSpec& grid, std::mt19937_64& rng,
                                            double scale = 1.0) {
    std::uniform_real_distribution<double> dist(-scale, scale);
    std::vector<double> row(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    for (int i = 1; i <= grid.n_space; ++i) {
        row[static_cast<std::size_t>(i)] = dist(rng);
    }
    row[static_cast<std::size_t>(grid.n_space) + 1] = row[static_cast<std::size_t>(grid.n_space)];
    return row;
}

/// Row of N_L + 2 values satisfying the density boundary constraints:
/// m_0 = 0 and the flux-weighted ghost closure.
inline std::vector<double> random_density_row(const GridSpec& grid, const ModelParams& params,
                                              std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> dist(0.0, scale);
    std::vector<double> row(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    for (int i = 1; i <= grid.n_space; ++i) {
        row[static_cast<std::size_t>(i)] = dist(rng);
    }
    const double s_last = params.diffusion.sigma_sq(grid.x(grid.n_space));
    const double s_ghost = params.diffusion.sigma_sq(grid.x(grid.n_space + 1));
    const double m_last = row[static_cast<std::size_t>(grid.n_space)];
    row[static_cast<std::size_t>(grid.n_space) + 1] =
        s_ghost > 0.0 ? s_last * m_last / s_ghost : m_last;
    return row;
}

inline std::vector<double> random_policy_row(const GridSpec& grid, double q_max,
                                             std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.0, q_max);
    std::vector<double> row(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    for (int i = 0; i <= grid.n_space + 1; ++i) {
        row[static_cast<std::size_t>(i)] = dist(rng);
    }
    return row;
}

inline SpaceTimeField random_policy_field(const GridSpec& grid, double q_max,
                                          std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(0.0, q_max);
    SpaceTimeField q(grid, FieldKind::Policy);
    for (int tau = 0; tau < grid.n_time; ++tau) {
        for (int i = 0; i <= grid.n_space + 1; ++i) {
            q(tau, i) = dist(rng);
        }
    }
    return q;
}

/// Test-1 (BM) model parameters on an arbitrary grid.
inline ModelParams test1_params(double horizon = 15.0) {
    return ModelParams::create(
        0.0, 2.0, 5.0, DiffusionProfile{DiffusionVariant::Constant, 0.1},
        PriceModel::ces(3.0, 0.01, 1.2, 0.2, horizon));
}

} // namespace cournot::test
