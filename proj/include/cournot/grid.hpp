#pragma once

#include <span>
#include <vector>

#include "cournot/errors.hpp"

namespace cournot {

/// Uniform space-time mesh on [0,L] x [0,T].
///
/// Space nodes are x_i = i*h for i in {0,...,n_space+1}; the last node is a
/// ghost point one cell beyond x = L used to impose the right boundary
/// condition algebraically. Time nodes are t_tau = tau*dt, tau in
/// {0,...,n_time}.
struct GridSpec {
    double L = 0.0;    ///< domain length (resource units)
    double T = 0.0;    ///< horizon (time units)
    int n_space = 0;   ///< interior space cell count N_L
    int n_time = 0;    ///< time step count N_T
    double h = 0.0;    ///< space step L / N_L
    double dt = 0.0;   ///< time step T / N_T

    int ghost_index() const { return n_space + 1; }
    double x(int i) const { return i * h; }
    double t(int tau) const { return tau * dt; }
};

/// Builds a GridSpec with h = L/N_L and dt = T/N_T.
/// Throws ConfigError for non-positive inputs or N_L < 2.
GridSpec build_grid(double L, double T, int n_space, int n_time);

enum class FieldKind { ValueFunction, Density, Policy, Generic };

/// Time alignment of a discrete quantity: Node quantities live on
/// tau in {0,...,N_T}; Transition quantities (policies, prices, aggregate
/// production) live on tau in {0,...,N_T-1}.
enum class TimeAlignment { Node, Transition };

/// Dense (N_T+1) x (N_L+2) array of grid values, ghost column included.
///
/// Policy-kind fields are transition aligned: row N_T is storage only and is
/// excluded from norms and integrals.
class SpaceTimeField {
public:
    SpaceTimeField(const GridSpec& grid, FieldKind kind);
    SpaceTimeField(const GridSpec& grid, FieldKind kind, TimeAlignment alignment);

    double& operator()(int tau, int i) { return values_[index(tau, i)]; }
    double operator()(int tau, int i) const { return values_[index(tau, i)]; }

    std::span<double> row(int tau);
    std::span<const double> row(int tau) const;

    const GridSpec& grid() const { return grid_; }
    FieldKind kind() const { return kind_; }
    TimeAlignment alignment() const { return alignment_; }

    /// Number of meaningful time rows (N_T for transition fields, N_T+1 otherwise).
    int time_rows() const;

    void fill(double value);

private:
    std::size_t index(int tau, int i) const {
        return static_cast<std::size_t>(tau) * stride_ + static_cast<std::size_t>(i);
    }

    GridSpec grid_;
    FieldKind kind_;
    TimeAlignment alignment_;
    std::size_t stride_;
    std::vector<double> values_;
};

/// Scalar time series attached to a grid.
class TimeSeries {
public:
    TimeSeries(const GridSpec& grid, TimeAlignment alignment);

    double& operator[](int tau) { return values_[static_cast<std::size_t>(tau)]; }
    double operator[](int tau) const { return values_[static_cast<std::size_t>(tau)]; }

    int size() const { return static_cast<int>(values_.size()); }
    TimeAlignment alignment() const { return alignment_; }
    const GridSpec& grid() const { return grid_; }

private:
    GridSpec grid_;
    TimeAlignment alignment_;
    std::vector<double> values_;
};

/// Discrete L2 norm (sum_{tau,i} |f|^2 h dt)^{1/2}. The time sum follows the
/// field's alignment; the space sum runs over i in {0,...,N_L} (ghost excluded).
double l2_norm(const SpaceTimeField& f);

/// l2_norm(a - b) without materializing the difference. Grids and alignments
/// must match.
double l2_distance(const SpaceTimeField& a, const SpaceTimeField& b);

/// Largest |value| over meaningful rows, ghost column excluded.
double max_abs(const SpaceTimeField& f);

/// Rectangle rule h * sum_{i=0}^{N_L} row_i; the ghost entry is excluded.
double space_integral(std::span<const double> row, const GridSpec& grid);

} // namespace cournot
