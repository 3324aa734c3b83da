/*
Copyright 2026 the pursuit authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace pursuit {

// Numeric values mirror pursuit_status in the public C header.
enum class ErrorCode : int {
  ok = 0,
  null_pointer = 1,
  invalid_argument = 2,
  zero_atom = 3,
  norm_violation = 4,
  duplicate_atom = 5,
  target_unreachable = 6,
  dictionary_mismatch = 7,
  bad_exponent = 8,
  sparsity_too_large = 9,
  index_out_of_range = 10,
  empty_representation = 11,
  hypothesis_violated = 12,
  dimension_mismatch = 13,
  tracking_inconsistent = 14,
  singular_gram = 15,
  wrong_algorithm = 16,
  insufficient_steps = 17,
  too_large = 18,
  io_error = 19,
  parse_error = 20,
  internal = 21,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ok: return "ok";
    case ErrorCode::null_pointer: return "null_pointer";
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::zero_atom: return "zero_atom";
    case ErrorCode::norm_violation: return "norm_violation";
    case ErrorCode::duplicate_atom: return "duplicate_atom";
    case ErrorCode::target_unreachable: return "target_unreachable";
    case ErrorCode::dictionary_mismatch: return "dictionary_mismatch";
    case ErrorCode::bad_exponent: return "bad_exponent";
    case ErrorCode::sparsity_too_large: return "sparsity_too_large";
    case ErrorCode::index_out_of_range: return "index_out_of_range";
    case ErrorCode::empty_representation: return "empty_representation";
    case ErrorCode::hypothesis_violated: return "hypothesis_violated";
    case ErrorCode::dimension_mismatch: return "dimension_mismatch";
    case ErrorCode::tracking_inconsistent: return "tracking_inconsistent";
    case ErrorCode::singular_gram: return "singular_gram";
    case ErrorCode::wrong_algorithm: return "wrong_algorithm";
    case ErrorCode::insufficient_steps: return "insufficient_steps";
    case ErrorCode::too_large: return "too_large";
    case ErrorCode::io_error: return "io_error";
    case ErrorCode::parse_error: return "parse_error";
    case ErrorCode::internal: return "internal";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pursuit
