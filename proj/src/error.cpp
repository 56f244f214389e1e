#include "qrr/error.hpp"

namespace qrr {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::Divergent: return "Divergent";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::NonIntegralExponent: return "NonIntegralExponent";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::NoGrowthDirection: return "NoGrowthDirection";
    case ErrorKind::MalformedDiagram: return "MalformedDiagram";
    case ErrorKind::UnknownKnot: return "UnknownKnot";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace qrr
