#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dstar {

enum class ErrorKind {
  NotAssociative,
  NotUnital,
  NotLocalBlock,
  RankedBasisViolation,
  IndexOutOfRange,
  UnknownBuiltin,
  AlgebraMismatch,
  ConstantPolynomial,
  ConstantDivisor,
  DuplicateLeaders,
  NotAutoreduced,
  InconsistentSystem,
  SeparantDegenerate,
  BadWitness,
  InvalidRanking,
  WrongAlgebra,
  SchemaError,
  ParseError,
  RoundLimit,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure carries a kind; the message names the witness.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Syntax error in an expression, operator string or file; positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace dstar
