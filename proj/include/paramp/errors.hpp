#pragma once

#include <stdexcept>
#include <string>

namespace paramp {

/// Base class for all library errors.
struct SimulatorError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// det(lambda3) vanishes: the Green-function representation degenerates
/// (caustic times, including t = 0). Callers should propagate moments instead.
struct SingularPropagator : SimulatorError {
    using SimulatorError::SimulatorError;
};

/// Discretization grid does not capture the state (trace check failed).
struct GridTooSmall : SimulatorError {
    using SimulatorError::SimulatorError;
};

/// Measurement frame produces a singular tomogram covariance.
struct DegenerateFrame : SimulatorError {
    using SimulatorError::SimulatorError;
};

/// Reduced density matrix has an eigenvalue below -1e-8.
struct NegativeSpectrum : SimulatorError {
    using SimulatorError::SimulatorError;
};

/// Parameter outside the mathematical domain of an operation.
struct DomainError : SimulatorError {
    using SimulatorError::SimulatorError;
};

/// Invalid scenario/configuration input.
struct ConfigError : SimulatorError {
    using SimulatorError::SimulatorError;
};

} // namespace paramp
