#pragma once

#include <stdexcept>
#include <string>

namespace dkfhtw {

/// Invalid or inconsistent configuration / input artifacts. CLI exit code 2.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure during a pipeline stage (divergence, rank deficiency,
/// solver non-convergence, ...). CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace dkfhtw
