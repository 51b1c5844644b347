#ifndef SPINMETER_ERRORS_HPP
#define SPINMETER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinmeter {

// Bad physical parameters, grids too small for the requested evolution,
// unknown config keys, etc.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// A field handed to an observable routine is not in the state the routine
// requires (e.g. norm drifted away from 1).
class InvalidStateError : public std::runtime_error {
public:
    explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

// Non-finite samples, quadrature breakdown and similar runtime numerics
// failures that cannot be reported as a warning attached to a result.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Request outside the validity region of an asymptotic formula.
class AsymptoticRegimeError : public ConfigError {
public:
    explicit AsymptoticRegimeError(const std::string& what) : ConfigError(what) {}
};

// Exhaustive enumeration asked for more work than is tractable.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spinmeter

#endif
