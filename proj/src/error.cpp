#include "cliffordsys/error.hpp"

namespace cliffordsys {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::NotASubring: return "NotASubring";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAutomorphism: return "NotAutomorphism";
    case ErrorKind::NotCompatible: return "NotCompatible";
    case ErrorKind::NotCocycle: return "NotCocycle";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NotAField: return "NotAField";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::NotACharacter: return "NotACharacter";
    case ErrorKind::NotInnerCompatible: return "NotInnerCompatible";
    case ErrorKind::NotCentralSimpleBase: return "NotCentralSimpleBase";
    case ErrorKind::InvalidGrading: return "InvalidGrading";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::string witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                         (witness.empty() ? "" : " [witness: " + witness + "]")),
      kind_(kind),
      witness_(std::move(witness)) {}

}  // namespace cliffordsys
