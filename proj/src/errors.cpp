#include "ssb/errors.hpp"

namespace ssb {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::NonAdmissible: return "NonAdmissible";
    case ErrorKind::NotFiniteDimensional: return "NotFiniteDimensional";
    case ErrorKind::NonConfluent: return "NonConfluent";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::CharZero: return "CharZero";
    case ErrorKind::NotAnIdeal: return "NotAnIdeal";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::ComplexCheckFailed: return "ComplexCheckFailed";
    case ErrorKind::ExactnessFailure: return "ExactnessFailure";
    case ErrorKind::NoSquareRoot: return "NoSquareRoot";
    case ErrorKind::CharUnsupported: return "CharUnsupported";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace ssb
