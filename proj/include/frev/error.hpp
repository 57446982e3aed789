#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frev {

enum class ErrorKind {
  DivisionByZero,
  FieldMismatch,
  OrderNotInField,
  RootNotInField,
  TruncMismatch,
  ConstantTermInInner,
  NotInvertible,
  NotUnit,
  BadBranch,
  NotTangentToIdentity,
  IdentityInput,
  TruncationTooLow,
  BadOmega,
  NotFiniteOrder,
  HypothesisFails,
  Singular,
  OrderNotOne,
  WrongParity,
  NotResonantShape,
  BadLinearPart,
  ZeroDivisorEncountered,
  NotReversibleClass,
  BadShape,
  BadSymmetry,
  NotReversible,
  NotGeneric,
  BadDeterminant,
  SubfactorizationFailed,
  SearchFailed,
  Parse,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure in the library is reported through this type; `kind()` is
/// the machine-readable part and is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace frev
