#pragma once

#include <stdexcept>
#include <string>

namespace cournot {

/// Invalid model/grid/run configuration (bad parameter values, empty support, ...).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad command-line or config-file input (unknown preset, unknown key, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Failure inside a numerical kernel (zero pivot, diverging march, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace cournot
