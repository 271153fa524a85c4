#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace horoaut {

enum class ErrorKind {
  InvalidRank,
  InvalidMarking,
  DimensionMismatch,
  NotDominant,
  NotACharacterOfP,
  NotPrimitiveRay,
  NotSmooth,
  NotComplete,
  BadFaceStructure,
  FanInvalid,
  EmbeddingNotInjective,
  EmbeddingNotCharacterOfP,
  InvalidBundle,
  PreconditionViolated,
  Overflow,
  SchemaError,
};

std::string_view error_name(ErrorKind kind);

/// Every failure in the library is reported through this type. The message
/// always starts with the error name so that callers printing `what()` name
/// the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

}  // namespace horoaut
