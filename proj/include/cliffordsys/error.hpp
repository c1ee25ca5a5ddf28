#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cliffordsys {

enum class ErrorKind {
  NotAGroup,
  NotContained,
  NotIrreducible,
  NotASubring,
  TooLarge,
  NotAutomorphism,
  NotCompatible,
  NotCocycle,
  NotAssociative,
  NoUnit,
  NotAField,
  TypeMismatch,
  NotACharacter,
  NotInnerCompatible,
  NotCentralSimpleBase,
  InvalidGrading,
  InvalidArgument,
  Unsupported,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

/// User-facing failure of a contract. `witness` names the offending
/// element, tuple or line in a form that can be printed directly.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

/// Raised when a claim that holds by theorem fails at runtime. Never a
/// user error; indicates a bug or a convention mismatch.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cliffordsys
