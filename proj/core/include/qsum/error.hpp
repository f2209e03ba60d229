#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsum {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A graph or matrix would exceed a fixed capacity (vertex count, order).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A constructor or operation received parameters outside its valid range.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// The operation is undefined for this input (e.g. cyclomatic number of a
/// disconnected graph, S2 of a single vertex).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed graph6 text. `offset()` is the byte position of the problem.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// The eigensolver did not converge within its sweep budget.
class SolverError : public Error {
 public:
  using Error::Error;
};

/// Exact integer arithmetic overflowed its representation.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

/// A vertex partition is not equitable for the graph it was applied to.
class EquitabilityError : public Error {
 public:
  EquitabilityError(const std::string& what, int first, int second)
      : Error(what), first_(first), second_(second) {}

  int first_vertex() const noexcept { return first_; }
  int second_vertex() const noexcept { return second_; }

 private:
  int first_;
  int second_;
};

/// A root-bracketing interval has no sign change.
class BracketError : public Error {
 public:
  using Error::Error;
};

}  // namespace qsum
