// Acceptance suite: one self-contained check per shipped guarantee, one
// pass/fail line each. Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "cournot/config.hpp"
#include "cournot/export.hpp"
#include "cournot/runner.hpp"
#include "support/oracles.hpp"

using namespace cournot;

namespace {

int g_failures = 0;

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int id, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
    std::printf("[%s] criterion %2d: %-28s %s (%.1f s)\n", pass ? "PASS" : "FAIL", id,
                name.c_str(), detail.c_str(), seconds);
    std::fflush(stdout);
    if (!pass) {
        ++g_failures;
    }
}

template <typename Fn>
void criterion(int id, const std::string& name, Fn&& body) {
    Timer timer;
    try {
        body(timer);
    } catch (const std::exception& e) {
        report(id, name, false, std::string("exception: ") + e.what(), timer.seconds());
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
}

std::vector<double> zero_row(const GridSpec& g) {
    return std::vector<double>(static_cast<std::size_t>(g.n_space) + 2, 0.0);
}

EquilibriumSolution solve_preset(const RunConfig& config, const SpaceTimeField* q0 = nullptr) {
    const GridSpec grid = make_grid(config);
    const ModelParams params = make_model(config);
    const auto m0 = initial_density(config.bump, grid);
    const auto terminal = terminal_values(config.terminal, grid);
    const SpaceTimeField q_start =
        q0 != nullptr ? *q0 : SpaceTimeField(grid, FieldKind::Policy);
    return spi_solve(params, grid, m0, terminal, q_start, config.spi);
}

// --- criteria -------------------------------------------------------------

void check_adjointness(const Timer& timer) {
    bool pass = true;
    double worst_ratio = 0.0;
    std::mt19937_64 rng(101);
    for (int n_space : {4, 64}) {
        const GridSpec g = build_grid(1.0, 1.0, n_space, 1);
        for (int trial = 0; trial < 100; ++trial) {
            const DiffusionVariant variant =
                trial % 2 == 0 ? DiffusionVariant::Constant : DiffusionVariant::Geometric;
            const ModelParams p =
                ModelParams::create(0.0, 2.0, 5.0, DiffusionProfile{variant, 0.25},
                                    PriceModel::ces(3.0, 0.0, 1.2, 0.2, 1.0));
            const auto phi = test::random_value_row(g, rng);
            const auto m = test::random_density_row(g, p, rng);
            const auto q = test::random_policy_row(g, p.q_max, rng);

            auto sup = [](const std::vector<double>& v) {
                double s = 0.0;
                for (double x : v) {
                    s = std::max(s, std::abs(x));
                }
                return s;
            };
            double sigma_sup = 0.0;
            for (int i = 0; i <= g.n_space + 1; ++i) {
                sigma_sup = std::max(sigma_sup, p.diffusion.sigma_sq(g.x(i)));
            }
            const double scale =
                sup(phi) * sup(m) * sup(q) + sup(phi) * sup(m) * sigma_sup / (g.h * g.h);
            const double defect = adjointness_defect(q, p, g, phi, m);
            worst_ratio = std::max(worst_ratio, defect / (1e-12 * scale));
            pass = pass && defect <= 1e-12 * scale;
        }
    }
    const double secs = timer.seconds();
    pass = pass && secs < 1.0;
    report(1, "discrete adjointness", pass, "worst defect / bound = " + fmt(worst_ratio), secs);
}

void check_gap_inequality(const Timer& timer) {
    const double kappa = 5.0;
    const double q_max = 0.9;
    std::mt19937_64 rng(102);
    std::uniform_real_distribution<double> slope_dist(-25.0, 25.0);
    std::uniform_real_distribution<double> q_dist(0.0, q_max);
    bool pass = true;
    double worst_margin = 1e300;
    for (int k = 0; k < 1000; ++k) {
        const double slope = slope_dist(rng);
        const double q = q_dist(rng);
        const double q_star = hamiltonian_argmax(slope, kappa, q_max);
        const double gap = hamiltonian_value(slope, kappa, q_max) - (-q * slope - kappa * q * q);
        const double margin = gap - kappa * (q_star - q) * (q_star - q);
        worst_margin = std::min(worst_margin, margin);
        pass = pass && margin >= -1e-12;
    }
    const double secs = timer.seconds();
    pass = pass && secs < 1.0;
    report(2, "hamiltonian gap inequality", pass, "worst margin = " + fmt(worst_margin), secs);
}

void check_fpk_structure(const Timer& timer) {
    const RunConfig config = preset("test1-bm-ci");
    const GridSpec g = make_grid(config);
    const ModelParams p = make_model(config);
    const auto m0 = initial_density(config.bump, g);

    std::mt19937_64 rng(103);
    double min_density = 0.0;
    double worst_mass_gain = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const auto q = test::random_policy_field(g, p.q_max, rng);
        const DensityEvolution evo = solve_forward(m0, q, p, g);
        for (int tau = 0; tau <= g.n_time; ++tau) {
            for (int i = 0; i <= g.n_space; ++i) {
                min_density = std::min(min_density, evo.density(tau, i));
            }
        }
        for (int tau = 0; tau < g.n_time; ++tau) {
            worst_mass_gain = std::max(worst_mass_gain, evo.mass[tau + 1] - evo.mass[tau]);
        }
    }
    const double secs = timer.seconds();
    const bool pass = min_density >= -1e-14 && worst_mass_gain <= 1e-12 && secs < 30.0;
    report(3, "fpk density structure", pass,
           "min density = " + fmt(min_density) + ", worst mass gain = " + fmt(worst_mass_gain),
           secs);
}

void check_spi_convergence(const Timer& timer) {
    RunConfig config = preset("test1-bm-ci");
    config.spi.epsilon = 1e-4;
    config.spi.max_iters = 2000;
    config.spi.schedule.beta = 2;
    config.spi.exploitability_every = 10;
    const EquilibriumSolution sol = solve_preset(config);

    bool pass = sol.converged;
    std::string detail = "residual = " + fmt(sol.history.back().residual) + " after " +
                         std::to_string(sol.history.size()) + " iters";

    if (sol.history.size() > 10) {
        const double an_10 = sol.history[10].weighted_an * sol.history[10].weighted_an;
        const double an_final =
            sol.history.back().weighted_an * sol.history.back().weighted_an;
        pass = pass && an_final <= an_10 / 10.0;
        detail += ", a_n " + fmt(an_10) + " -> " + fmt(an_final);

        double gamma_0 = 0.0;
        double gamma_10 = -1.0;
        double gamma_final = -1.0;
        bool gamma_nonneg = true;
        for (const IterationDiagnostics& d : sol.history) {
            if (!d.exploitability) {
                continue;
            }
            if (d.n == 0) {
                gamma_0 = *d.exploitability;
            }
            if (d.n == 10) {
                gamma_10 = *d.exploitability;
            }
            gamma_final = *d.exploitability;
            gamma_nonneg = gamma_nonneg && *d.exploitability >= -1e-8 * std::max(1.0, gamma_0);
        }
        pass = pass && gamma_nonneg && gamma_10 > 0.0 && gamma_final <= gamma_10 / 10.0;
        detail += ", exploitability " + fmt(gamma_10) + " -> " + fmt(gamma_final);
    } else {
        pass = false;
        detail += ", history too short";
    }
    const double secs = timer.seconds();
    pass = pass && secs <= 300.0;
    report(4, "spi convergence (test1-bm)", pass, detail, secs);
}

void check_uniqueness(const Timer& timer) {
    RunConfig config = preset("test1-bm-ci");
    config.spi.epsilon = 1e-4;
    config.spi.exploitability_every = 0;
    const GridSpec g = make_grid(config);
    const ModelParams p = make_model(config);

    const SpaceTimeField q_low(g, FieldKind::Policy);
    SpaceTimeField q_high(g, FieldKind::Policy);
    q_high.fill(p.q_max);

    const EquilibriumSolution from_low = solve_preset(config, &q_low);
    const EquilibriumSolution from_high = solve_preset(config, &q_high);

    const double diff = l2_distance(from_low.policy, from_high.policy);
    const double scale = l2_norm(from_low.policy);
    const double rel = diff / scale;
    const double secs = timer.seconds();
    const bool pass = from_low.converged && from_high.converged && rel <= 1e-3 && secs <= 600.0;
    report(5, "equilibrium uniqueness", pass, "relative l2 gap = " + fmt(rel), secs);
}

void check_equilibrium_structure(const Timer& timer) {
    // Full Test-1 (BM) mesh. beta = 4 sharpens the fixed point quickly; the
    // equilibrium itself does not depend on the schedule.
    RunConfig config = preset("test1-bm");
    config.spi.epsilon = 1e-7;
    config.spi.max_iters = 20000;
    config.spi.schedule.beta = 4;
    config.spi.exploitability_every = 0;
    const EquilibriumSolution sol = solve_preset(config);
    const GridSpec g = make_grid(config);
    const ModelParams p = make_model(config);

    double min_price = 1e300;
    for (int tau = 0; tau < g.n_time; ++tau) {
        min_price = std::min(min_price, sol.price[tau]);
    }

    const double u_sup = max_abs(sol.value);
    double min_gradient = 1e300;
    double min_value = 1e300;
    double worst_time_increase = 0.0;
    for (int tau = 0; tau <= g.n_time; ++tau) {
        const auto row = sol.value.row(tau);
        for (int i = 1; i <= g.n_space; ++i) {
            min_gradient = std::min(min_gradient, gradient_sharp(row, i, g.h));
        }
        for (int i = 0; i <= g.n_space; ++i) {
            min_value = std::min(min_value, sol.value(tau, i));
            if (tau < g.n_time) {
                worst_time_increase =
                    std::max(worst_time_increase, sol.value(tau + 1, i) - sol.value(tau, i));
            }
        }
    }

    const bool pass = sol.converged && min_price > p.gamma && min_gradient >= -1e-8 * u_sup &&
                      min_value >= -1e-10 && worst_time_increase <= 1e-8;
    report(6, "equilibrium structure", pass,
           "min P - gamma = " + fmt(min_price - p.gamma) + ", min D#U = " + fmt(min_gradient) +
               ", min U = " + fmt(min_value) + ", worst dU/dt = " + fmt(worst_time_increase),
           timer.seconds());
}

void check_oil_hubbert(const Timer& timer) {
    RunConfig config = preset("oil-ci");
    config.spi.epsilon = 1e-4;
    config.spi.schedule.beta = 4;  // beta = 2 stalls near 4e-4 on this model
    config.spi.exploitability_every = 0;
    const EquilibriumSolution sol = solve_preset(config);
    const GridSpec g = make_grid(config);

    // 5-point moving average of the production series.
    std::vector<double> smooth;
    for (int tau = 2; tau < g.n_time - 2; ++tau) {
        double acc = 0.0;
        for (int k = -2; k <= 2; ++k) {
            acc += sol.production[tau + k];
        }
        smooth.push_back(acc / 5.0);
    }
    // Sign pattern of the increments: exactly one rise-then-fall switch.
    std::vector<int> signs;
    for (std::size_t k = 0; k + 1 < smooth.size(); ++k) {
        const double d = smooth[k + 1] - smooth[k];
        if (d == 0.0) {
            continue;
        }
        const int s = d > 0.0 ? 1 : -1;
        if (signs.empty() || signs.back() != s) {
            signs.push_back(s);
        }
    }
    const bool single_peak = signs.size() == 2 && signs[0] == 1 && signs[1] == -1;

    double price_min = 1e300;
    double price_max = -1e300;
    for (int tau = 0; tau < g.n_time; ++tau) {
        price_min = std::min(price_min, sol.price[tau]);
        price_max = std::max(price_max, sol.price[tau]);
    }
    const double range = price_max - price_min;
    double worst_price_drop = 0.0;
    for (int tau = 0; tau + 1 < g.n_time; ++tau) {
        worst_price_drop = std::max(worst_price_drop, sol.price[tau] - sol.price[tau + 1]);
    }

    const double secs = timer.seconds();
    const bool pass =
        sol.converged && single_peak && worst_price_drop <= 0.01 * range && secs <= 600.0;
    report(7, "oil model reproduction", pass,
           std::string("production ") + (single_peak ? "has a single peak" : "is not unimodal") +
               ", worst price drop / range = " + fmt(worst_price_drop / range),
           secs);
}

void check_residual_decay(const Timer& timer) {
    RunConfig config = preset("test1-bm-ci");
    config.spi.epsilon = 1e-30;  // run the full window
    config.spi.max_iters = 201;
    config.spi.exploitability_every = 0;
    const EquilibriumSolution sol = solve_preset(config);

    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    int count = 0;
    for (const IterationDiagnostics& d : sol.history) {
        if (d.n < 20 || d.n > 200 || d.residual <= 0.0) {
            continue;
        }
        const double x = std::log(static_cast<double>(d.n));
        const double y = std::log(d.residual);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    const double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    const bool pass = count >= 150 && slope <= -0.7;
    report(8, "residual decay rate", pass, "log-log slope = " + fmt(slope), timer.seconds());
}

void check_learning_rate_sweep(const Timer& timer) {
    namespace fs = std::filesystem;
    const fs::path out_dir = "acceptance_out";
    fs::create_directories(out_dir);

    bool pass = true;
    std::string detail;
    for (int beta : {1, 2, 4}) {
        RunConfig config = preset("test1-bm-ci");
        config.spi.epsilon = 1e-4;
        config.spi.max_iters = 400000;  // beta = 1 contracts like 1/n
        config.spi.schedule.beta = beta;
        config.spi.exploitability_every = 100;
        const EquilibriumSolution sol = solve_preset(config);
        pass = pass && sol.converged;
        export_series(sol, SeriesKind::Convergence,
                      out_dir / ("convergence_beta" + std::to_string(beta) + ".csv"));
        if (!detail.empty()) {
            detail += ", ";
        }
        detail += "beta=" + std::to_string(beta) + ": " + std::to_string(sol.history.size()) +
                  " iters";
    }
    report(9, "learning-rate sweep", pass, detail + " -> " + out_dir.string(), timer.seconds());
}

void check_self_convergence(const Timer& timer) {
    // Three nested meshes with dt proportional to h; the implicit scheme needs
    // no CFL coupling, so the pairing is free.
    const int sizes[3][2] = {{100, 400}, {200, 800}, {400, 1600}};
    std::vector<EquilibriumSolution> solutions;
    std::vector<GridSpec> grids;
    for (const auto& s : sizes) {
        RunConfig config = preset("test1-bm");
        config.n_space = s[0];
        config.n_time = s[1];
        config.spi.epsilon = 1e-6;
        config.spi.max_iters = 20000;
        config.spi.schedule.beta = 4;
        config.spi.exploitability_every = 0;
        grids.push_back(make_grid(config));
        solutions.push_back(solve_preset(config));
    }

    double errors[2];
    for (int level = 0; level < 2; ++level) {
        const GridSpec& coarse = grids[static_cast<std::size_t>(level)];
        const SpaceTimeField& u_coarse = solutions[static_cast<std::size_t>(level)].value;
        const SpaceTimeField& u_fine = solutions[static_cast<std::size_t>(level) + 1].value;
        SpaceTimeField diff(coarse, FieldKind::Generic);
        for (int tau = 0; tau <= coarse.n_time; ++tau) {
            for (int i = 0; i <= coarse.n_space; ++i) {
                diff(tau, i) = u_fine(2 * tau, 2 * i) - u_coarse(tau, i);
            }
        }
        errors[level] = l2_norm(diff);
    }
    const double ratio = errors[0] / errors[1];
    const bool pass = solutions[0].converged && solutions[1].converged &&
                      solutions[2].converged && ratio >= 1.7;
    report(10, "self-convergence order", pass,
           "refinement errors " + fmt(errors[0]) + " / " + fmt(errors[1]) + " = " + fmt(ratio),
           timer.seconds());
}

} // namespace

int main() {
    criterion(1, "discrete adjointness", check_adjointness);
    criterion(2, "hamiltonian gap inequality", check_gap_inequality);
    criterion(3, "fpk density structure", check_fpk_structure);
    criterion(4, "spi convergence (test1-bm)", check_spi_convergence);
    criterion(5, "equilibrium uniqueness", check_uniqueness);
    criterion(6, "equilibrium structure", check_equilibrium_structure);
    criterion(7, "oil model reproduction", check_oil_hubbert);
    criterion(8, "residual decay rate", check_residual_decay);
    criterion(9, "learning-rate sweep", check_learning_rate_sweep);
    criterion(10, "self-convergence order", check_self_convergence);

    std::printf("%d of 10 criteria passed\n", 10 - g_failures);
    return g_failures;
}
