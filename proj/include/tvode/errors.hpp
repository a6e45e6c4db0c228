#pragma once

#include <stdexcept>
#include <string>

namespace tvode {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or schema violation (scenario/plan files, bad parameters).
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

// Fewer usable points in a kernel window than the local fit requires.
class InsufficientLocalDataError : public Error {
public:
    explicit InsufficientLocalDataError(const std::string& msg) : Error(msg) {}
};

// A linear system (T'WT, Z'WZ, moment matrix) is numerically rank deficient.
class SingularSystemError : public Error {
public:
    explicit SingularSystemError(const std::string& msg) : Error(msg) {}
};

// State blow-up during ODE integration.
class NonfiniteStateError : public Error {
public:
    explicit NonfiniteStateError(const std::string& msg) : Error(msg) {}
};

// Mismatched vector/matrix dimensions.
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// log-log fit fed a nonpositive coordinate.
class NonpositiveValueError : public Error {
public:
    explicit NonpositiveValueError(const std::string& msg) : Error(msg) {}
};

// A rate report does not contain the sweep structure a verdict needs.
class RegimeNotCoveredError : public Error {
public:
    explicit RegimeNotCoveredError(const std::string& msg) : Error(msg) {}
};

} // namespace tvode
