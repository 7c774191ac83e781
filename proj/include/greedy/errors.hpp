#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace greedy {

// Invalid parameter or out-of-range configuration. Maps to CLI exit 2.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bound was requested outside the iteration range it is defined for.
class BoundOutOfRegime : public ConfigError {
public:
    using ConfigError::ConfigError;
};

// File access or data-format problems. Maps to CLI exit 3.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public IoError {
public:
    using IoError::IoError;
};

class InconsistentRowError : public IoError {
public:
    using IoError::IoError;
};

class ZeroAtomError : public IoError {
public:
    using IoError::IoError;
};

// Numerical failure at run time. Maps to CLI exit 4.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An exact algebraic identity of the paired run failed beyond tolerance.
// Carries the iteration at which the check tripped.
class InvariantViolation : public NumericalError {
public:
    InvariantViolation(std::size_t iteration, const std::string& what)
        : NumericalError("iteration " + std::to_string(iteration) + ": " + what),
          iteration_(iteration) {}

    std::size_t iteration() const { return iteration_; }

private:
    std::size_t iteration_;
};

} // namespace greedy
