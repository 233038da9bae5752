#ifndef COPUFLOW_ERRORS_HPP
#define COPUFLOW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace copuflow {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input value outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Shape or size mismatch between inputs.
struct SizeError : Error {
    using Error::Error;
};

/// Invalid configuration (bad key, missing file, out-of-range hyperparameter).
struct ConfigError : Error {
    using Error::Error;
};

/// Numerical failure (non-finite result, factorisation failure, no convergence).
struct NumericError : Error {
    using Error::Error;
};

/// Malformed serialised data (checkpoint or CSV).
struct FormatError : Error {
    using Error::Error;
};

/// Index out of range.
struct IndexError : Error {
    using Error::Error;
};

/// Training diverged. The caller still holds the last finite parameter state.
struct TrainingError : Error {
    using Error::Error;
};

/// Sampler produced a non-finite state; `step` is the failing reverse step.
struct SamplingError : Error {
    int step;
    SamplingError(const std::string& msg, int step_index)
        : Error(msg), step(step_index) {}
};

}  // namespace copuflow

#endif
