#include "cournot/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cournot {

PriceModel PriceModel::linear(double E, double rho, double pi_sub, double horizon) {
    if (!(E > 0.0)) {
        throw ConfigError("price: wealth factor E must be positive");
    }
    if (!(pi_sub > 0.0)) {
        throw ConfigError("price: substitute price must be positive");
    }
    if (!(horizon > 0.0)) {
        throw ConfigError("price: horizon must be positive");
    }
    return PriceModel(LinearPrice{E, rho, pi_sub}, horizon);
}

PriceModel PriceModel::ces(double E, double rho, double eta, double delta, double horizon) {
    if (!(E > 0.0)) {
        throw ConfigError("price: wealth factor E must be positive");
    }
    if (!(eta > 0.0)) {
        throw ConfigError("price: elasticity eta must be positive");
    }
    if (!(delta > 0.0)) {
        throw ConfigError("price: substitution level delta must be positive");
    }
    if (!(horizon > 0.0)) {
        throw ConfigError("price: horizon must be positive");
    }
    return PriceModel(CesPrice{E, rho, eta, delta}, horizon);
}

double PriceModel::price(double t, double a) const {
    if (a < 0.0) {
        throw std::domain_error("price: aggregate production must be nonnegative");
    }
    if (const auto* lin = std::get_if<LinearPrice>(&kind_)) {
        return lin->pi_sub - std::exp(-lin->rho * t) * a / lin->E;
    }
    const auto& c = std::get<CesPrice>(kind_);
    return std::pow(c.E, 1.0 / c.eta) * std::exp(c.rho * t / c.eta) *
           std::pow(c.delta + a, -1.0 / c.eta);
}

double PriceModel::demand(double t, double P) const {
    if (const auto* lin = std::get_if<LinearPrice>(&kind_)) {
        if (P > lin->pi_sub) {
            throw std::domain_error("demand: price above substitute price");
        }
        return lin->E * std::exp(lin->rho * t) * (lin->pi_sub - P);
    }
    const auto& c = std::get<CesPrice>(kind_);
    if (!(P > 0.0)) {
        throw std::domain_error("demand: CES price must be positive");
    }
    return c.E * std::exp(c.rho * t) * std::pow(P, -c.eta) - c.delta;
}

double PriceModel::potential(double t, double a) const {
    if (a < 0.0) {
        throw std::domain_error("potential: aggregate production must be nonnegative");
    }
    if (const auto* lin = std::get_if<LinearPrice>(&kind_)) {
        return lin->pi_sub * a - std::exp(-lin->rho * t) * a * a / (2.0 * lin->E);
    }
    const auto& c = std::get<CesPrice>(kind_);
    const double scale = std::pow(c.E, 1.0 / c.eta) * std::exp(c.rho * t / c.eta);
    if (c.eta == 1.0) {
        return c.E * std::exp(c.rho * t) * std::log((c.delta + a) / c.delta);
    }
    const double p = 1.0 - 1.0 / c.eta;
    return scale * (std::pow(c.delta + a, p) - std::pow(c.delta, p)) / p;
}

double compute_cp(const PriceModel& pm, double gamma) {
    // P(t,0) is monotone in t through e^{rho t}; the max sits at an endpoint.
    const double p0 = pm.price(0.0, 0.0);
    const double pT = pm.price(pm.horizon(), 0.0);
    const double cp = std::max(p0, pT) - gamma;
    if (!(cp > 0.0)) {
        throw ConfigError("price: P(t,0) never exceeds gamma, control cap would be empty");
    }
    return cp;
}

ModelParams ModelParams::create(double lambda, double gamma, double kappa,
                                DiffusionProfile diffusion, PriceModel price) {
    if (!(gamma > 0.0)) {
        throw ConfigError("model: gamma must be positive");
    }
    if (!(kappa > 0.0)) {
        throw ConfigError("model: kappa must be positive");
    }
    if (lambda < 0.0) {
        throw ConfigError("model: lambda must be nonnegative");
    }
    if (diffusion.sigma < 0.0) {
        throw ConfigError("model: sigma must be nonnegative");
    }
    const double cp = compute_cp(price, gamma);
    ModelParams p{lambda, gamma, kappa, diffusion, std::move(price), cp, cp / (2.0 * kappa)};
    return p;
}

double hamiltonian_argmax(double slope, double kappa, double q_max) {
    return std::clamp(-slope / (2.0 * kappa), 0.0, q_max);
}

double hamiltonian_value(double slope, double kappa, double q_max) {
    const double q = hamiltonian_argmax(slope, kappa, q_max);
    return -q * slope - kappa * q * q;
}

double potential_objective(const SpaceTimeField& policy, const SpaceTimeField& density,
                           const ModelParams& params, const GridSpec& grid) {
    double total = 0.0;
    for (int tau = 0; tau < grid.n_time; ++tau) {
        const double t = grid.t(tau);
        double psi = 0.0;
        double cost = 0.0;
        for (int i = 0; i <= grid.n_space; ++i) {
            const double q = policy(tau, i);
            const double m = density(tau + 1, i);
            psi += m * q;
            cost += (params.gamma * q + params.kappa * q * q) * m;
        }
        psi *= grid.h;
        cost *= grid.h;
        const double phi = params.price.potential(t, std::max(psi, 0.0));
        total += grid.dt * std::exp(-params.lambda * t) * (phi - cost);
    }
    return total;
}

} // namespace cournot
