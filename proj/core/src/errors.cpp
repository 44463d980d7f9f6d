#include "hochlab/errors.hpp"

namespace hochlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonAssociative: return "NonAssociative";
    case ErrorKind::BadUnit: return "BadUnit";
    case ErrorKind::GradingViolation: return "GradingViolation";
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotAnAction: return "NotAnAction";
    case ErrorKind::NotAGroupoid: return "NotAGroupoid";
    case ErrorKind::NonUnitalAlgebra: return "NonUnitalAlgebra";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::GradedPieceRequired: return "GradedPieceRequired";
    case ErrorKind::PieceExceedsCap: return "PieceExceedsCap";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotBoundaryStable: return "NotBoundaryStable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::string witness)
    : std::runtime_error(std::string(hochlab::to_string(kind)) + ": " + message +
                         (witness.empty() ? std::string() : " [witness: " + witness + "]")),
      kind_(kind),
      witness_(std::move(witness)) {}

ParseError::ParseError(std::string message, std::size_t line, std::size_t column)
    : Error(ErrorKind::ParseError,
            message + " at line " + std::to_string(line) + ", column " + std::to_string(column),
            std::to_string(line) + ":" + std::to_string(column)),
      line_(line),
      column_(column) {}

ResourceLimitError::ResourceLimitError(std::size_t requested, std::size_t ceiling, std::string what)
    : Error(ErrorKind::ResourceLimit,
            what + " needs " + std::to_string(requested) + " basis tuples, ceiling is " +
                std::to_string(ceiling),
            std::to_string(requested)),
      requested_(requested),
      ceiling_(ceiling) {}

}  // namespace hochlab
