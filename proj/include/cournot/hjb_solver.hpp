#pragma once

#include <span>
#include <vector>

#include "cournot/grid.hpp"
#include "cournot/model.hpp"

namespace cournot {

struct ValueEvolution {
    SpaceTimeField value;  ///< value-function kind: U_{tau,0} = 0, Neumann ghost
};

/// One implicit backward step of policy evaluation under a fixed policy row
/// and price value. Input u_next needs entries 0..N_L; the result has N_L + 2
/// entries with U_0 = 0 and the Neumann ghost filled.
std::vector<double> policy_eval_step(std::span<const double> u_next,
                                     std::span<const double> q_bar_row, double price_value,
                                     const ModelParams& params, const GridSpec& grid);

/// Full backward march tau = N_T-1 ... 0 from the terminal row. The terminal
/// row must satisfy u_T(0) = 0 and be nondecreasing with a flat right end.
ValueEvolution policy_evaluation(const SpaceTimeField& q_bar, const TimeSeries& price,
                                 std::span<const double> terminal, const ModelParams& params,
                                 const GridSpec& grid);

/// Pointwise greedy policy min{((P_tau - gamma - D# U_tau)/(2 kappa))_+, q_max}
/// on i in {1,...,N_L}; the i = 0 entry copies i = 1 (the density vanishes
/// there, so the choice is inert).
SpaceTimeField greedy_policy(const SpaceTimeField& value, const TimeSeries& price,
                             const ModelParams& params, const GridSpec& grid);

struct BestResponse {
    ValueEvolution value;
    SpaceTimeField policy;        ///< greedy policy of the returned value
    bool converged = false;
    double defect = 0.0;          ///< last sup-norm distance between value iterates
    int iterations = 0;
    std::vector<double> defect_history;
};

/// Best-response value for a fixed price series: alternates policy evaluation
/// and greedy updates until successive value iterates are within tol in
/// sup norm. Non-convergence within max_inner is reported in the returned
/// status, not thrown.
BestResponse best_response_solve(const TimeSeries& price, std::span<const double> terminal,
                                 const ModelParams& params, const GridSpec& grid, double tol,
                                 int max_inner);

} // namespace cournot
