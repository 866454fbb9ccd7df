#pragma once

#include <stdexcept>

namespace quidsim {

/// Base class for every domain error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Amplitude pair too far from unit norm to be accepted as a qubit state.
class NotNormalized : public Error {
  public:
    using Error::Error;
};

/// A qubit handle was registered twice.
class DuplicateHandle : public Error {
  public:
    using Error::Error;
};

/// A qubit handle does not resolve to any registered qubit.
class UnknownHandle : public Error {
  public:
    using Error::Error;
};

/// No registered identity lies within the requested matching tolerance.
class NoMatch : public Error {
  public:
    using Error::Error;
};

/// Two or more registered identities lie within the matching tolerance, so
/// the target qubit cannot be resolved. This is the failure mode of finite
/// resolving power.
class AmbiguousMatch : public Error {
  public:
    using Error::Error;
};

/// Entangling requires both qubits to still be in |0>.
class NotGroundState : public Error {
  public:
    using Error::Error;
};

/// A forced measurement outcome has (numerically) zero probability.
class ImpossibleOutcome : public Error {
  public:
    using Error::Error;
};

} // namespace quidsim
