#pragma once

#include <stdexcept>
#include <string>

namespace fracot {

/// Invalid user-supplied configuration (grid sizes, fractional order,
/// step sizes, file contents).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical guard violation: a quantity supposed to be kept away from a
/// singular value (density sums below the floor) was not.
class GuardError : public std::runtime_error {
public:
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace fracot
