#pragma once

#include <stdexcept>
#include <string>

namespace orbitlink {

// Base class for every error the library throws on its own behalf.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An argument lies outside a function's stated domain.
struct DomainError : Error {
  using Error::Error;
};

// A configuration object fails its consistency checks.
struct ValidationError : Error {
  using Error::Error;
};

// A series was truncated before reaching its tolerance.
struct ConvergenceError : Error {
  using Error::Error;
};

// An adaptive integrator could not meet its tolerance, or produced a
// probability outside [0, 1] by more than the permitted residual.
struct QuadratureError : Error {
  using Error::Error;
};

// A formula was evaluated in a limit where its terms lose meaning.
struct DegenerateGeometry : Error {
  using Error::Error;
};

// A search was asked for something no admissible input can provide.
struct UnreachableError : Error {
  using Error::Error;
};

// Malformed structured input (JSON text, enum names, CLI values).
struct ParseError : Error {
  using Error::Error;
};

// A file could not be opened, read, or written.
struct IoError : Error {
  using Error::Error;
};

}  // namespace orbitlink
