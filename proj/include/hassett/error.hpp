#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hassett {

enum class ErrorCode {
  syntax,
  weight_out_of_range,
  total_weight,
  index_out_of_range,
  invalid_argument,
  shape_mismatch,
  not_a_reduction,
  forgetful_not_defined,
  reduction_not_defined,
  not_covered,
  invalid_step,
  too_large,
};

/// Machine-readable name used in CLI/JSON error payloads.
inline std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax: return "syntax";
    case ErrorCode::weight_out_of_range: return "weight-out-of-range";
    case ErrorCode::total_weight: return "total-weight";
    case ErrorCode::index_out_of_range: return "index-out-of-range";
    case ErrorCode::invalid_argument: return "invalid-argument";
    case ErrorCode::shape_mismatch: return "shape-mismatch";
    case ErrorCode::not_a_reduction: return "not-a-reduction";
    case ErrorCode::forgetful_not_defined: return "forgetful-not-defined";
    case ErrorCode::reduction_not_defined: return "reduction-not-defined";
    case ErrorCode::not_covered: return "not-covered";
    case ErrorCode::invalid_step: return "invalid-step";
    case ErrorCode::too_large: return "too-large";
  }
  return "unknown";
}

/// Malformed input (as opposed to a mathematical non-existence answer).
inline bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::syntax:
    case ErrorCode::weight_out_of_range:
    case ErrorCode::total_weight:
    case ErrorCode::index_out_of_range:
    case ErrorCode::invalid_argument:
    case ErrorCode::shape_mismatch:
    case ErrorCode::invalid_step:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hassett
