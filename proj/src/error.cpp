#include "sbgroups/error.hpp"

namespace sbg {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EvenModulus: return "EvenModulus";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotACubeRoot: return "NotACubeRoot";
    case ErrorKind::BadPrimeDivisor: return "BadPrimeDivisor";
    case ErrorKind::BadCharacter: return "BadCharacter";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::NoSplit: return "NoSplit";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::MalformedDescriptor: return "MalformedDescriptor";
    case ErrorKind::MalformedTable: return "MalformedTable";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::MissingOmega: return "MissingOmega";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotFiniteOrder: return "NotFiniteOrder";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
  }
  return "Unknown";
}

}  // namespace sbg
