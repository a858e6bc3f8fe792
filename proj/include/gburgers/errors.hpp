#pragma once

#include <stdexcept>

namespace gburgers {

/// Bad parameters or run configuration (out-of-range J, missing run-file key, ...).
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Numerical failure during a solve.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Non-finite solution values; the message names the offending time level.
class DivergenceError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

/// Pivot breakdown in the dense collocation solve.
class SingularSystemError : public NumericalError {
  public:
    using NumericalError::NumericalError;
};

}  // namespace gburgers
