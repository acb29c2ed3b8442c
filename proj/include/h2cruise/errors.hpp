#pragma once

#include <stdexcept>
#include <string>

namespace h2cruise {

// Base class for all library errors. Subcommands map these to exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Argument outside the mathematical domain of a formula (v <= 0, negative mass, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Altitude outside the validity range of the atmosphere model.
class OutOfRangeError : public Error {
public:
    explicit OutOfRangeError(const std::string& msg) : Error(msg) {}
};

struct PowerFeasibility;

// Requested net power exceeds the stack envelope E_oc^2*eta*n/(4r).
class InfeasiblePowerError : public Error {
public:
    InfeasiblePowerError(const std::string& msg, double max_net_power_w,
                         double requested_power_w)
        : Error(msg), max_net_power_w(max_net_power_w),
          requested_power_w(requested_power_w) {}

    double max_net_power_w;
    double requested_power_w;
};

// The optimality equation has no admissible positive root.
class NoSolutionError : public Error {
public:
    explicit NoSolutionError(const std::string& msg) : Error(msg) {}
};

// Fuel exhausted before reaching the target distance.
class RangeExceededError : public Error {
public:
    explicit RangeExceededError(const std::string& msg) : Error(msg) {}
};

// Iterative solver failed to converge; message carries the iteration history.
class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Bad configuration file: parse failure or invariant violation.
class ConfigError : public Error {
public:
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace h2cruise
