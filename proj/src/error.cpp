#include "horoaut/error.hpp"

namespace horoaut {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::InvalidMarking: return "InvalidMarking";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::NotACharacterOfP: return "NotACharacterOfP";
    case ErrorKind::NotPrimitiveRay: return "NotPrimitiveRay";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotComplete: return "NotComplete";
    case ErrorKind::BadFaceStructure: return "BadFaceStructure";
    case ErrorKind::FanInvalid: return "FanInvalid";
    case ErrorKind::EmbeddingNotInjective: return "EmbeddingNotInjective";
    case ErrorKind::EmbeddingNotCharacterOfP: return "EmbeddingNotCharacterOfP";
    case ErrorKind::InvalidBundle: return "InvalidBundle";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(error_name(kind)) + ": " + detail),
      kind_(kind),
      detail_(detail) {}

}  // namespace horoaut
