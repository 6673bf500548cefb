#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

#include "cournot/spi.hpp"

namespace cournot {

enum class SeriesKind { Price, Production, Mass, Convergence };
enum class FieldChoice { Value, Density, Policy };

/// Writes one series as UTF-8 CSV with a header row. Price and production
/// carry t = tau*dt for tau in 0..N_T-1; mass runs over 0..N_T; convergence
/// has columns n, residual, weighted_an, exploitability (empty when not
/// computed), J_value. Values use full round-trip precision.
void export_series(const EquilibriumSolution& sol, SeriesKind kind,
                   const std::filesystem::path& path);

/// Writes a field snapshot CSV: column x, then one column per requested time
/// index. The ghost column is excluded. Out-of-range indices are UsageErrors.
void export_field(const EquilibriumSolution& sol, FieldChoice which, std::span<const int> taus,
                  const std::filesystem::path& path);

/// FNV-1a 64-bit content hash, hex encoded. Used by run manifests to pin
/// emitted artifacts.
std::string fnv1a64_file(const std::filesystem::path& path);

std::string format_double(double v);

} // namespace cournot
