#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace braceforge {

// Base class of all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Constructor input that cannot describe a valid object (bad order, non-prime, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// A structural axiom failed. Carries the least witness triple when one exists;
// unused slots are -1.
struct AxiomError : Error {
  std::array<int, 3> witness{-1, -1, -1};
  explicit AxiomError(const std::string& msg) : Error(msg) {}
  AxiomError(const std::string& msg, std::array<int, 3> w) : Error(msg), witness(w) {}
};

// An operation's stated precondition does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

// Input exceeds a documented size or search cap.
struct CapacityError : Error {
  using Error::Error;
};

// Degenerate input rejected by convention (e.g. simplicity of the order-1 brace).
struct DegenerateError : Error {
  using Error::Error;
};

// An internal cross-check failed. Indicates a bug, never a user error.
struct ConsistencyError : Error {
  using Error::Error;
};

}  // namespace braceforge
