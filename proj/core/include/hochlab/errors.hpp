#pragma once

#include <stdexcept>
#include <string>

namespace hochlab {

enum class ErrorKind {
  NonAssociative,
  BadUnit,
  GradingViolation,
  NotAGroup,
  NotAnAction,
  NotAGroupoid,
  NonUnitalAlgebra,
  IndexOutOfRange,
  GradedPieceRequired,
  PieceExceedsCap,
  NotAComplex,
  NotBoundaryStable,
  ParseError,
  InvalidArgument,
  ResourceLimit,
};

const char* to_string(ErrorKind kind);

/// Base of every error raised by the engine. `witness` names the concrete
/// object (a basis triple, an index, a column) that violates the invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

// Input rejected before any computation: parse failures and violated
// algebra/groupoid/action axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class ResourceLimitError : public Error {
 public:
  ResourceLimitError(std::size_t requested, std::size_t ceiling, std::string what);
  std::size_t requested() const noexcept { return requested_; }
  std::size_t ceiling() const noexcept { return ceiling_; }

 private:
  std::size_t requested_;
  std::size_t ceiling_;
};

}  // namespace hochlab
