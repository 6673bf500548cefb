#pragma once

#include <variant>
#include <vector>

#include "cournot/grid.hpp"

namespace cournot {

enum class DiffusionVariant { Constant, Geometric };

/// Diffusion coefficient profile: sigma^2(x) = sigma^2 (Constant) or
/// (sigma*x)^2 (Geometric). The geometric variant degenerates at x = 0.
struct DiffusionProfile {
    DiffusionVariant variant = DiffusionVariant::Constant;
    double sigma = 0.0;

    double sigma_sq(double x) const {
        const double s = variant == DiffusionVariant::Constant ? sigma : sigma * x;
        return s * s;
    }
};

/// Linear inverse demand: P(t,a) = pi_sub - e^{-rho t} a / E.
struct LinearPrice {
    double E = 1.0;       ///< wealth factor, > 0
    double rho = 0.0;     ///< demand growth rate
    double pi_sub = 1.0;  ///< substitute price
};

/// Constant-elasticity inverse demand: P(t,a) = (E e^{rho t})^{1/eta} (delta+a)^{-1/eta}.
struct CesPrice {
    double E = 1.0;      ///< wealth factor, > 0
    double rho = 0.0;    ///< demand growth rate
    double eta = 1.0;    ///< elasticity, > 0
    double delta = 1.0;  ///< substitution level, > 0
};

/// Inverse demand curve P(t, a) together with its demand inverse D(t, P) and
/// antiderivative Phi(t, a) normalized by Phi(t, 0) = 0.
class PriceModel {
public:
    static PriceModel linear(double E, double rho, double pi_sub, double horizon);
    static PriceModel ces(double E, double rho, double eta, double delta, double horizon);

    /// Price at aggregate production a >= 0. Throws std::domain_error for a < 0.
    double price(double t, double a) const;

    /// Demand at price P. Valid range: P <= pi_sub (linear), P > 0 (CES).
    /// Inverse of price(): demand(t, price(t, a)) == a.
    double demand(double t, double P) const;

    /// Antiderivative of price in a, with Phi(t, 0) = 0.
    double potential(double t, double a) const;

    double horizon() const { return horizon_; }
    bool is_linear() const { return std::holds_alternative<LinearPrice>(kind_); }
    const LinearPrice& as_linear() const { return std::get<LinearPrice>(kind_); }
    const CesPrice& as_ces() const { return std::get<CesPrice>(kind_); }

private:
    PriceModel(std::variant<LinearPrice, CesPrice> kind, double horizon)
        : kind_(std::move(kind)), horizon_(horizon) {}

    std::variant<LinearPrice, CesPrice> kind_;
    double horizon_ = 0.0;
};

/// Price cap margin C_P = max_{t in [0,T]} P(t, 0) - gamma.
/// Throws ConfigError when the result is not positive.
double compute_cp(const PriceModel& pm, double gamma);

/// Economic and diffusion parameters plus the derived control cap
/// q_max = C_P / (2 kappa).
struct ModelParams {
    double lambda = 0.0;  ///< discount rate, >= 0
    double gamma = 1.0;   ///< linear production cost coefficient, > 0
    double kappa = 1.0;   ///< quadratic production cost coefficient, > 0
    DiffusionProfile diffusion;
    PriceModel price;
    double cp = 0.0;      ///< derived price cap margin
    double q_max = 0.0;   ///< derived control cap C_P / (2 kappa)

    static ModelParams create(double lambda, double gamma, double kappa,
                              DiffusionProfile diffusion, PriceModel price);
};

/// Maximizer of q -> -q*slope - kappa q^2 over [0, q_max]: clamp(-slope/(2 kappa)).
double hamiltonian_argmax(double slope, double kappa, double q_max);

/// Maximum of q -> -q*slope - kappa q^2 over [0, q_max].
double hamiltonian_value(double slope, double kappa, double q_max);

/// Discrete potential objective
///   sum_tau dt e^{-lambda t_tau} [ Phi(t_tau, psi_tau)
///                                  - h sum_i (gamma Q + kappa Q^2) M_{tau+1,i} ],
/// with psi_tau = h sum_i M_{tau+1,i} Q_{tau,i}. Pairs the policy row tau with
/// the density row tau+1, matching the discrete price update.
double potential_objective(const SpaceTimeField& policy, const SpaceTimeField& density,
                           const ModelParams& params, const GridSpec& grid);

} // namespace cournot
