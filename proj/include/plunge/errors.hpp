#pragma once

#include <stdexcept>
#include <string>

namespace plunge {

// Precondition violations (bad arguments) derive from std::invalid_argument,
// failures discovered during computation from std::runtime_error.

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyRegion : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ResolutionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct UntrustedThreshold : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct OracleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EvaluationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace plunge
