#pragma once

#include <span>
#include <vector>

#include "cournot/grid.hpp"
#include "cournot/model.hpp"

namespace cournot {

/// Tridiagonal linear system A x = rhs with sub/super diagonals of length n-1.
struct TridiagonalSystem {
    int n = 0;
    std::vector<double> sub;    ///< A(i, i-1), length n-1
    std::vector<double> diag;   ///< A(i, i), length n
    std::vector<double> super;  ///< A(i, i+1), length n-1
    std::vector<double> rhs;    ///< length n

    explicit TridiagonalSystem(int size)
        : n(size), sub(size - 1, 0.0), diag(size, 0.0), super(size - 1, 0.0), rhs(size, 0.0) {}
};

/// Centered second difference (row_{i-1} - 2 row_i + row_{i+1}) / h^2, 1 <= i <= N_L.
double laplacian_sharp(std::span<const double> row, int i, double h);

/// Backward first difference (row_i - row_{i-1}) / h, 1 <= i <= N_L.
double gradient_sharp(std::span<const double> row, int i, double h);

/// Discrete divergence of a flux product row:
///   (product_{i+1} - product_i)/h for i < N_L, and -product_{N_L}/h at i = N_L
/// (flux closure at the right boundary).
double divergence_sharp(std::span<const double> product_row, int i, double h, int n_space);

/// Implicit backward step of the policy-evaluation equation. Unknowns are the
/// interior values U_{tau,1..N_L}; the Dirichlet value at i = 0 and the
/// Neumann ghost U_{N_L+1} = U_{N_L} are eliminated algebraically.
///
/// Row i: U_i (1/dt + 2 s_i/h^2 + lambda + Q_i/h) - U_{i-1}(s_i/h^2 + Q_i/h)
///        - U_{i+1} s_i/h^2 = U^next_i/dt + Q_i (P - gamma) - kappa Q_i^2,
/// with s_i = sigma^2(x_i).
TridiagonalSystem assemble_hjb_system(std::span<const double> u_next,
                                      std::span<const double> q_bar, double price_value,
                                      const ModelParams& params, const GridSpec& grid);

/// Implicit forward step of the density equation (adjoint of the above).
/// Unknowns are M_{tau+1,1..N_L}; M_{tau+1,0} = 0 and the flux-weighted ghost
/// closure sigma^2_{N_L} M_{N_L} = sigma^2_{N_L+1} M_{N_L+1} are eliminated.
/// The assembled matrix is an M-matrix: positive diagonal, nonpositive
/// off-diagonals.
TridiagonalSystem assemble_fpk_system(std::span<const double> m_prev,
                                      std::span<const double> q_bar, const ModelParams& params,
                                      const GridSpec& grid);

/// Direct tridiagonal elimination. Throws NumericalError on a vanishing pivot
/// (unreachable for the diagonally dominant systems assembled above).
std::vector<double> thomas_solve(const TridiagonalSystem& sys);

/// Summation-by-parts defect |h sum_i (A phi)_i m_i - h sum_i phi_i (A* m)_i|
/// for A = sigma^2 Lap# - Q D# and A* = Lap#(sigma^2 .) + div#(Q .).
/// phi must satisfy phi_0 = 0, phi_{N_L+1} = phi_{N_L}; m must satisfy m_0 = 0
/// and the flux-weighted ghost closure. Zero up to rounding.
double adjointness_defect(std::span<const double> q_row, const ModelParams& params,
                          const GridSpec& grid, std::span<const double> phi,
                          std::span<const double> m);

} // namespace cournot
