#include "cournot/export.hpp"

#include <cstdio>
#include <fstream>

namespace cournot {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    return out;
}

void write_mass_series(const EquilibriumSolution& sol, std::ofstream& out) {
    const GridSpec& grid = sol.density.grid();
    out << "t,mass\n";
    for (int tau = 0; tau <= grid.n_time; ++tau) {
        out << format_double(grid.t(tau)) << ','
            << format_double(space_integral(sol.density.row(tau), grid)) << '\n';
    }
}

void write_transition_series(const TimeSeries& series, const char* name, std::ofstream& out) {
    const GridSpec& grid = series.grid();
    out << "t," << name << '\n';
    for (int tau = 0; tau < grid.n_time; ++tau) {
        out << format_double(grid.t(tau)) << ',' << format_double(series[tau]) << '\n';
    }
}

void write_convergence(const EquilibriumSolution& sol, std::ofstream& out) {
    out << "n,residual,weighted_an,exploitability,J_value\n";
    for (const IterationDiagnostics& d : sol.history) {
        out << d.n << ',' << format_double(d.residual) << ',' << format_double(d.weighted_an)
            << ',';
        if (d.exploitability) {
            out << format_double(*d.exploitability);
        }
        out << ',' << format_double(d.j_value) << '\n';
    }
}

} // namespace

void export_series(const EquilibriumSolution& sol, SeriesKind kind,
                   const std::filesystem::path& path) {
    std::ofstream out = open_for_write(path);
    switch (kind) {
        case SeriesKind::Price: write_transition_series(sol.price, "price", out); break;
        case SeriesKind::Production:
            write_transition_series(sol.production, "production", out);
            break;
        case SeriesKind::Mass: write_mass_series(sol, out); break;
        case SeriesKind::Convergence: write_convergence(sol, out); break;
    }
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

void export_field(const EquilibriumSolution& sol, FieldChoice which, std::span<const int> taus,
                  const std::filesystem::path& path) {
    const SpaceTimeField& field = which == FieldChoice::Value     ? sol.value
                                  : which == FieldChoice::Density ? sol.density
                                                                  : sol.policy;
    const GridSpec& grid = field.grid();
    for (int tau : taus) {
        if (tau < 0 || tau >= field.time_rows()) {
            throw UsageError("field export: time index " + std::to_string(tau) +
                             " out of range [0, " + std::to_string(field.time_rows() - 1) + "]");
        }
    }

    std::ofstream out = open_for_write(path);
    out << 'x';
    for (int tau : taus) {
        out << ",t=" << format_double(grid.t(tau));
    }
    out << '\n';
    for (int i = 0; i <= grid.n_space; ++i) {
        out << format_double(grid.x(i));
        for (int tau : taus) {
            out << ',' << format_double(field(tau, i));
        }
        out << '\n';
    }
    if (!out) {
        throw std::runtime_error("write failed for '" + path.string() + "'");
    }
}

std::string fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot read '" + path.string() + "' for hashing");
    }
    std::uint64_t hash = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof(buf)) || in.gcount() > 0) {
        for (std::streamsize k = 0; k < in.gcount(); ++k) {
            hash ^= static_cast<unsigned char>(buf[k]);
            hash *= 0x100000001b3ull;
        }
    }
    char hex[20];
    std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(hash));
    return hex;
}

} // namespace cournot
