#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sbg {

/// Failure categories shared by every module. The CLI maps these onto exit
/// codes, so the set is part of the public contract.
enum class ErrorKind {
  EvenModulus,
  NotAUnit,
  NotACubeRoot,
  BadPrimeDivisor,
  BadCharacter,
  NotAbelian,
  NoSplit,
  TooLarge,
  MalformedDescriptor,
  MalformedTable,
  DivisionByZero,
  MissingOmega,
  ZeroDivisor,
  CapExceeded,
  NotFiniteOrder,
  FieldMismatch,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sbg
