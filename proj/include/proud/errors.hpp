#pragma once

#include <stdexcept>
#include <string>

namespace proud {

// Shape of an operand does not conform to the operation's contract.
struct ShapeError : std::invalid_argument {
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Math domain violation (log of non-positive values, bad temperature, ...).
struct DomainError : std::domain_error {
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

// A vector with norm below the 1e-12 floor was passed to a normalizing op.
struct DegenerateVectorError : std::domain_error {
    explicit DegenerateVectorError(const std::string& msg) : std::domain_error(msg) {}
};

// Invalid user-supplied configuration (CLI, config file, generator settings).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// File / serialization failure; message carries the offending path.
struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A violated internal invariant (e.g. a UDMix pair whose classes disagree).
struct InvariantError : std::logic_error {
    explicit InvariantError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace proud
