#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pikdom {

enum class ErrorCode {
  kParse,
  kDuplicate,
  kNotProper,
  kNegCost,
  kIndex,
  kEmpty,
  kParam,
  kTooLarge,
  kPrecondition,
  kVariantMismatch,
  kNotArc,
  kBudget,
  kNotPath,
};

// Stable diagnostic token, e.g. "E_NOT_PROPER".
std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pikdom
