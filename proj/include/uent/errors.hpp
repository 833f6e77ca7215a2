#pragma once

#include <stdexcept>
#include <string>

namespace uent {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dimensions of two operands are incompatible (matrix products, reshapes,
// gate/state application, split masks that do not cover the state).
struct ShapeMismatch : Error {
  using Error::Error;
};

// A matrix handed to the spectral routines does not commute with its
// adjoint within tolerance, so no orthonormal eigenbasis exists.
struct NotNormal : Error {
  using Error::Error;
};

// A matrix required to be unitary fails the unitarity check.
struct NotUnitary : Error {
  using Error::Error;
};

// An iterative decomposition failed to reach its accuracy contract.
struct NoConvergence : Error {
  using Error::Error;
};

// The two separability criteria (minor residual vs. Schmidt rank)
// returned contradictory answers for the same state.
struct OracleDisagreement : Error {
  using Error::Error;
};

// A hard-coded matrix failed its construction self-check, which points
// at a typo in the embedded table rather than a numerical problem.
struct TranscriptionError : Error {
  using Error::Error;
};

// A genome cannot be decoded into a product state (a factor has
// effectively zero norm).
struct InvalidGenome : Error {
  using Error::Error;
};

// A gate dimension admits no unique bipartite shape and none was given.
struct ShapeUnknown : Error {
  using Error::Error;
};

// A gate name is not in the builtin registry.
struct UnknownGate : Error {
  using Error::Error;
};

// A gate file on disk is malformed or fails validation.
struct GateFileInvalid : Error {
  using Error::Error;
};

}  // namespace uent
