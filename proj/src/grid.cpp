#include "cournot/grid.hpp"

#include <cmath>

namespace cournot {

GridSpec build_grid(double L, double T, int n_space, int n_time) {
    if (!(L > 0.0) || !(T > 0.0)) {
        throw ConfigError("grid: domain length and horizon must be positive");
    }
    if (n_space < 2) {
        throw ConfigError("grid: need at least 2 interior space cells");
    }
    if (n_time < 1) {
        throw ConfigError("grid: need at least 1 time step");
    }
    GridSpec g;
    g.L = L;
    g.T = T;
    g.n_space = n_space;
    g.n_time = n_time;
    g.h = L / n_space;
    g.dt = T / n_time;
    return g;
}

namespace {

TimeAlignment default_alignment(FieldKind kind) {
    return kind == FieldKind::Policy ? TimeAlignment::Transition : TimeAlignment::Node;
}

} // namespace

SpaceTimeField::SpaceTimeField(const GridSpec& grid, FieldKind kind)
    : SpaceTimeField(grid, kind, default_alignment(kind)) {}

SpaceTimeField::SpaceTimeField(const GridSpec& grid, FieldKind kind, TimeAlignment alignment)
    : grid_(grid),
      kind_(kind),
      alignment_(alignment),
      stride_(static_cast<std::size_t>(grid.n_space) + 2),
      values_(static_cast<std::size_t>(grid.n_time + 1) * stride_, 0.0) {}

std::span<double> SpaceTimeField::row(int tau) {
    return std::span<double>(values_.data() + index(tau, 0), stride_);
}

std::span<const double> SpaceTimeField::row(int tau) const {
    return std::span<const double>(values_.data() + index(tau, 0), stride_);
}

int SpaceTimeField::time_rows() const {
    return alignment_ == TimeAlignment::Transition ? grid_.n_time : grid_.n_time + 1;
}

void SpaceTimeField::fill(double value) {
    values_.assign(values_.size(), value);
}

TimeSeries::TimeSeries(const GridSpec& grid, TimeAlignment alignment)
    : grid_(grid),
      alignment_(alignment),
      values_(static_cast<std::size_t>(alignment == TimeAlignment::Transition ? grid.n_time
                                                                              : grid.n_time + 1),
              0.0) {}

double l2_norm(const SpaceTimeField& f) {
    const GridSpec& g = f.grid();
    double acc = 0.0;
    for (int tau = 0; tau < f.time_rows(); ++tau) {
        for (int i = 0; i <= g.n_space; ++i) {
            const double v = f(tau, i);
            acc += v * v;
        }
    }
    return std::sqrt(acc * g.h * g.dt);
}

double l2_distance(const SpaceTimeField& a, const SpaceTimeField& b) {
    const GridSpec& g = a.grid();
    double acc = 0.0;
    for (int tau = 0; tau < a.time_rows(); ++tau) {
        for (int i = 0; i <= g.n_space; ++i) {
            const double v = a(tau, i) - b(tau, i);
            acc += v * v;
        }
    }
    return std::sqrt(acc * g.h * g.dt);
}

double max_abs(const SpaceTimeField& f) {
    const GridSpec& g = f.grid();
    double m = 0.0;
    for (int tau = 0; tau < f.time_rows(); ++tau) {
        for (int i = 0; i <= g.n_space; ++i) {
            m = std::max(m, std::abs(f(tau, i)));
        }
    }
    return m;
}

double space_integral(std::span<const double> row, const GridSpec& grid) {
    double acc = 0.0;
    for (int i = 0; i <= grid.n_space; ++i) {
        acc += row[static_cast<std::size_t>(i)];
    }
    return acc * grid.h;
}

} // namespace cournot
