#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace liecrown {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (not an ideal, not a subalgebra, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IncompatibleField : public Error {
 public:
  using Error::Error;
};

class AntisymmetryViolation : public Error {
 public:
  AntisymmetryViolation(std::size_t i, std::size_t j)
      : Error("antisymmetry violated at [e" + std::to_string(i) + ",e" + std::to_string(j) + "]"),
        i(i), j(j) {}
  std::size_t i, j;
};

class JacobiViolation : public Error {
 public:
  JacobiViolation(std::size_t i, std::size_t j, std::size_t k)
      : Error("Jacobi identity violated on basis triple (" + std::to_string(i) + "," +
              std::to_string(j) + "," + std::to_string(k) + ")"),
        i(i), j(j), k(k) {}
  std::size_t i, j, k;
};

/// An exhaustive enumeration would exceed its configured limit.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, unsigned long long required, unsigned long long limit)
      : Error(what + ": requires " + std::to_string(required) + " > limit " + std::to_string(limit)),
        required(required), limit(limit) {}
  unsigned long long required, limit;
};

/// A result that the theory guarantees failed its exact verification.
class CertificationFailure : public Error {
 public:
  using Error::Error;
};

/// Two chief series could not be matched; always an implementation bug.
class MatchFailure : public Error {
 public:
  using Error::Error;
};

/// Malformed input. Line 0 marks a well-formed JSON text that violates the document schema.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(line == 0 ? "invalid document: " + msg
                        : "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                              ": " + msg),
        line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace liecrown
