#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ssb {

enum class ErrorKind {
  InvalidParams,
  NonAdmissible,
  NotFiniteDimensional,
  NonConfluent,
  NotSymmetric,
  CharZero,
  NotAnIdeal,
  UnsupportedDegree,
  ComplexCheckFailed,
  ExactnessFailure,
  NoSquareRoot,
  CharUnsupported,
  TooLarge,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so
/// that callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(ErrorKind::ParseError,
              std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace ssb
