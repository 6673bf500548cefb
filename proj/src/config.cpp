#include "cournot/config.hpp"

#include <algorithm>
#include <cmath>

namespace cournot {

bool RunConfig::operator==(const RunConfig& other) const {
    return L == other.L && T == other.T && n_space == other.n_space && n_time == other.n_time &&
           lambda == other.lambda && gamma == other.gamma && kappa == other.kappa &&
           diffusion_variant == other.diffusion_variant && sigma == other.sigma &&
           price_variant == other.price_variant && E == other.E && rho == other.rho &&
           pi_sub == other.pi_sub && eta == other.eta && delta == other.delta &&
           bump.center == other.bump.center && bump.rate == other.bump.rate &&
           bump.floor_level == other.bump.floor_level && terminal == other.terminal &&
           spi.epsilon == other.spi.epsilon && spi.max_iters == other.spi.max_iters &&
           spi.exploitability_every == other.spi.exploitability_every &&
           spi.schedule.beta == other.spi.schedule.beta && out_dir == other.out_dir &&
           export_fields == other.export_fields && export_series == other.export_series &&
           export_convergence == other.export_convergence && plots == other.plots &&
           seed == other.seed;
}

namespace {

RunConfig test1_base() {
    RunConfig c;
    c.L = 6.0;
    c.T = 15.0;
    c.n_space = 300;
    c.n_time = 2000;
    c.lambda = 0.0;
    c.gamma = 2.0;
    c.kappa = 5.0;
    c.sigma = 0.1;
    c.price_variant = PriceVariant::Ces;
    c.E = 3.0;
    c.rho = 0.01;
    c.eta = 1.2;
    c.delta = 0.2;
    c.bump = BumpSpec{3.0, 0.2, 0.7};
    return c;
}

RunConfig oil_base() {
    RunConfig c;
    c.L = 60.0;
    c.T = 150.0;
    c.n_space = 600;
    c.n_time = 1500;
    c.lambda = 0.05;
    c.gamma = 10.0;
    c.kappa = 50.0;
    c.diffusion_variant = DiffusionVariant::Geometric;
    c.sigma = 0.05;
    c.price_variant = PriceVariant::Ces;
    c.E = 40.0;
    c.rho = 0.02;
    c.eta = 1.2;
    c.delta = 0.1;
    c.bump = BumpSpec{30.0, 0.0008, 0.7};
    return c;
}

} // namespace

std::vector<std::string> preset_names() {
    return {"test1-bm", "test1-gbm", "oil", "test1-bm-ci", "test1-gbm-ci", "oil-ci"};
}

RunConfig preset(const std::string& name) {
    RunConfig c;
    if (name == "test1-bm") {
        c = test1_base();
    } else if (name == "test1-gbm") {
        c = test1_base();
        c.diffusion_variant = DiffusionVariant::Geometric;
    } else if (name == "oil") {
        c = oil_base();
    } else if (name == "test1-bm-ci" || name == "test1-gbm-ci") {
        c = preset(name.substr(0, name.size() - 3));
        c.n_space = 100;
        c.n_time = 400;
    } else if (name == "oil-ci") {
        c = oil_base();
        c.n_space = 120;
        c.n_time = 300;
    } else {
        std::string names;
        for (const auto& p : preset_names()) {
            names += names.empty() ? p : ", " + p;
        }
        throw UsageError("unknown preset '" + name + "' (available: " + names + ")");
    }
    c.out_dir = "out/" + name;
    return c;
}

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : obj.items()) {
        if (std::find_if(allowed.begin(), allowed.end(),
                         [&](const char* a) { return key == a; }) == allowed.end()) {
            throw UsageError("config: unknown key '" + path + key + "'");
        }
    }
}

const json& require(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw UsageError("config: missing key '" + path + key + "'");
    }
    return *it;
}

double get_number(const json& obj, const std::string& path, const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_number()) {
        throw UsageError("config: '" + path + key + "' must be a number");
    }
    return v.get<double>();
}

int get_int(const json& obj, const std::string& path, const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_number_integer()) {
        throw UsageError("config: '" + path + key + "' must be an integer");
    }
    return v.get<int>();
}

bool get_bool(const json& obj, const std::string& path, const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_boolean()) {
        throw UsageError("config: '" + path + key + "' must be a boolean");
    }
    return v.get<bool>();
}

std::string get_string(const json& obj, const std::string& path, const char* key) {
    const json& v = require(obj, path, key);
    if (!v.is_string()) {
        throw UsageError("config: '" + path + key + "' must be a string");
    }
    return v.get<std::string>();
}

} // namespace

nlohmann::json to_json(const RunConfig& c) {
    json doc;
    doc["grid"] = {{"L", c.L}, {"T", c.T}, {"n_space", c.n_space}, {"n_time", c.n_time}};

    json price;
    if (c.price_variant == PriceVariant::Linear) {
        price = {{"variant", "linear"}, {"E", c.E}, {"rho", c.rho}, {"pi_sub", c.pi_sub}};
    } else {
        price = {{"variant", "ces"}, {"E", c.E}, {"rho", c.rho}, {"eta", c.eta},
                 {"delta", c.delta}};
    }
    doc["model"] = {
        {"lambda", c.lambda},
        {"gamma", c.gamma},
        {"kappa", c.kappa},
        {"diffusion",
         {{"variant", c.diffusion_variant == DiffusionVariant::Constant ? "constant" : "geometric"},
          {"sigma", c.sigma}}},
        {"price", price}};

    doc["initial_density"] = {{"center", c.bump.center},
                              {"rate", c.bump.rate},
                              {"floor", c.bump.floor_level}};

    if (c.terminal.kind == TerminalKind::Zero) {
        doc["terminal_value"] = {{"kind", "zero"}};
    } else {
        doc["terminal_value"] = {{"kind", "ramp"}, {"amplitude", c.terminal.amplitude}};
    }

    doc["spi"] = {{"epsilon", c.spi.epsilon},
                  {"max_iters", c.spi.max_iters},
                  {"beta", c.spi.schedule.beta},
                  {"exploitability_every", c.spi.exploitability_every}};

    doc["output"] = {{"directory", c.out_dir},
                     {"fields", c.export_fields},
                     {"series", c.export_series},
                     {"convergence", c.export_convergence},
                     {"plots", c.plots}};
    doc["seed"] = c.seed;
    return doc;
}

RunConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        throw UsageError("config: top level must be an object");
    }
    check_keys(doc, "", {"grid", "model", "initial_density", "terminal_value", "spi", "output",
                         "seed"});

    RunConfig c;

    const json& grid = require(doc, "", "grid");
    check_keys(grid, "grid.", {"L", "T", "n_space", "n_time"});
    c.L = get_number(grid, "grid.", "L");
    c.T = get_number(grid, "grid.", "T");
    c.n_space = get_int(grid, "grid.", "n_space");
    c.n_time = get_int(grid, "grid.", "n_time");

    const json& model = require(doc, "", "model");
    check_keys(model, "model.", {"lambda", "gamma", "kappa", "diffusion", "price"});
    c.lambda = get_number(model, "model.", "lambda");
    c.gamma = get_number(model, "model.", "gamma");
    c.kappa = get_number(model, "model.", "kappa");

    const json& diffusion = require(model, "model.", "diffusion");
    check_keys(diffusion, "model.diffusion.", {"variant", "sigma"});
    const std::string dv = get_string(diffusion, "model.diffusion.", "variant");
    if (dv == "constant") {
        c.diffusion_variant = DiffusionVariant::Constant;
    } else if (dv == "geometric") {
        c.diffusion_variant = DiffusionVariant::Geometric;
    } else {
        throw UsageError("config: model.diffusion.variant must be 'constant' or 'geometric'");
    }
    c.sigma = get_number(diffusion, "model.diffusion.", "sigma");

    const json& price = require(model, "model.", "price");
    const std::string pv = get_string(price, "model.price.", "variant");
    if (pv == "linear") {
        check_keys(price, "model.price.", {"variant", "E", "rho", "pi_sub"});
        c.price_variant = PriceVariant::Linear;
        c.E = get_number(price, "model.price.", "E");
        c.rho = get_number(price, "model.price.", "rho");
        c.pi_sub = get_number(price, "model.price.", "pi_sub");
    } else if (pv == "ces") {
        check_keys(price, "model.price.", {"variant", "E", "rho", "eta", "delta"});
        c.price_variant = PriceVariant::Ces;
        c.E = get_number(price, "model.price.", "E");
        c.rho = get_number(price, "model.price.", "rho");
        c.eta = get_number(price, "model.price.", "eta");
        c.delta = get_number(price, "model.price.", "delta");
    } else {
        throw UsageError("config: model.price.variant must be 'linear' or 'ces'");
    }

    const json& bump = require(doc, "", "initial_density");
    check_keys(bump, "initial_density.", {"center", "rate", "floor"});
    c.bump.center = get_number(bump, "initial_density.", "center");
    c.bump.rate = get_number(bump, "initial_density.", "rate");
    c.bump.floor_level = get_number(bump, "initial_density.", "floor");

    const json& terminal = require(doc, "", "terminal_value");
    const std::string tk = get_string(terminal, "terminal_value.", "kind");
    if (tk == "zero") {
        check_keys(terminal, "terminal_value.", {"kind"});
        c.terminal = TerminalSpec{TerminalKind::Zero, 0.0};
    } else if (tk == "ramp") {
        check_keys(terminal, "terminal_value.", {"kind", "amplitude"});
        c.terminal = TerminalSpec{TerminalKind::Ramp,
                                  get_number(terminal, "terminal_value.", "amplitude")};
    } else {
        throw UsageError("config: terminal_value.kind must be 'zero' or 'ramp'");
    }

    const json& spi = require(doc, "", "spi");
    check_keys(spi, "spi.", {"epsilon", "max_iters", "beta", "exploitability_every"});
    c.spi.epsilon = get_number(spi, "spi.", "epsilon");
    c.spi.max_iters = get_int(spi, "spi.", "max_iters");
    c.spi.schedule.beta = get_int(spi, "spi.", "beta");
    c.spi.exploitability_every = get_int(spi, "spi.", "exploitability_every");

    const json& output = require(doc, "", "output");
    check_keys(output, "output.", {"directory", "fields", "series", "convergence", "plots"});
    c.out_dir = get_string(output, "output.", "directory");
    c.export_fields = get_bool(output, "output.", "fields");
    c.export_series = get_bool(output, "output.", "series");
    c.export_convergence = get_bool(output, "output.", "convergence");
    c.plots = get_bool(output, "output.", "plots");

    const json& seed = require(doc, "", "seed");
    if (!seed.is_number_unsigned()) {
        throw UsageError("config: 'seed' must be a nonnegative integer");
    }
    c.seed = seed.get<std::uint64_t>();
    return c;
}

GridSpec make_grid(const RunConfig& config) {
    return build_grid(config.L, config.T, config.n_space, config.n_time);
}

ModelParams make_model(const RunConfig& config) {
    DiffusionProfile diffusion{config.diffusion_variant, config.sigma};
    PriceModel price =
        config.price_variant == PriceVariant::Linear
            ? PriceModel::linear(config.E, config.rho, config.pi_sub, config.T)
            : PriceModel::ces(config.E, config.rho, config.eta, config.delta, config.T);
    return ModelParams::create(config.lambda, config.gamma, config.kappa, diffusion,
                               std::move(price));
}

std::vector<double> terminal_values(const TerminalSpec& spec, const GridSpec& grid) {
    std::vector<double> row(static_cast<std::size_t>(grid.n_space) + 2, 0.0);
    if (spec.kind == TerminalKind::Ramp) {
        for (int i = 1; i <= grid.n_space; ++i) {
            const double s = std::min(grid.x(i), grid.L) / grid.L;
            row[static_cast<std::size_t>(i)] = spec.amplitude * s * s * (3.0 - 2.0 * s);
        }
        row[static_cast<std::size_t>(grid.ghost_index())] =
            row[static_cast<std::size_t>(grid.n_space)];
    }
    return row;
}

} // namespace cournot
