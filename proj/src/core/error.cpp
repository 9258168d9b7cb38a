/* Copyright 2026 The stnf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "stnf/error.hpp"

namespace stnf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "SyntaxError";
    case ErrorCode::kType: return "TypeError";
    case ErrorCode::kNotApplicable: return "NotApplicable";
    case ErrorCode::kNotMonotone: return "NotMonotone";
    case ErrorCode::kUnsupportedShape: return "UnsupportedShape";
    case ErrorCode::kStuck: return "Stuck";
    case ErrorCode::kHoleTypeMismatch: return "HoleTypeMismatch";
    case ErrorCode::kSortTooLarge: return "SortTooLarge";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kNotValid: return "NotValid";
    case ErrorCode::kInvalidModel: return "InvalidModel";
    case ErrorCode::kEval: return "EvalError";
    case ErrorCode::kUsage: return "UsageError";
  }
  return "Error";
}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace stnf
