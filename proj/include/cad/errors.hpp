#pragma once

#include <stdexcept>
#include <string>

namespace cad {

// Error taxonomy. Structural errors are programming/contract mistakes
// (dimension mismatches), invalid_input covers data that fails a declared
// precondition, domain_error marks points outside the validity region of an
// iterative map, solver_error reports convergence failures with location.

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct StructuralError : Error {
  using Error::Error;
};

struct InvalidInput : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct SolverError : Error {
  using Error::Error;
};

struct ConfigError : Error {
  using Error::Error;
};

}  // namespace cad
