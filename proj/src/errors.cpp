#include "pikdom/errors.hpp"

namespace pikdom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "E_PARSE";
    case ErrorCode::kDuplicate: return "E_DUPLICATE";
    case ErrorCode::kNotProper: return "E_NOT_PROPER";
    case ErrorCode::kNegCost: return "E_NEG_COST";
    case ErrorCode::kIndex: return "E_INDEX";
    case ErrorCode::kEmpty: return "E_EMPTY";
    case ErrorCode::kParam: return "E_PARAM";
    case ErrorCode::kTooLarge: return "E_TOO_LARGE";
    case ErrorCode::kPrecondition: return "E_PRECONDITION";
    case ErrorCode::kVariantMismatch: return "E_VARIANT_MISMATCH";
    case ErrorCode::kNotArc: return "E_NOT_ARC";
    case ErrorCode::kBudget: return "E_BUDGET";
    case ErrorCode::kNotPath: return "E_NOT_PATH";
  }
  return "E_UNKNOWN";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace pikdom
