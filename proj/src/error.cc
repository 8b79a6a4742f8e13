// Copyright 2026 The tensor-verb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tensorverb/error.h"

namespace tensorverb {

std::string_view error_prefix(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return "E_IO";
    case ErrorCode::kParse:
    case ErrorCode::kVersion:
    case ErrorCode::kValidation:
      return "E_PARSE";
    case ErrorCode::kOov:
    case ErrorCode::kNoObservations:
      return "E_OOV";
    case ErrorCode::kEmptyBasis:
    case ErrorCode::kEmptyCounts:
    case ErrorCode::kDegenerate:
      return "E_DEGENERATE";
    case ErrorCode::kShape:
    case ErrorCode::kIncomparable:
    case ErrorCode::kUsage:
      return "E_USAGE";
  }
  return "E_USAGE";
}

int exit_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOov:
    case ErrorCode::kNoObservations:
      return 3;
    case ErrorCode::kEmptyBasis:
    case ErrorCode::kEmptyCounts:
    case ErrorCode::kDegenerate:
      return 4;
    default:
      return 2;
  }
}

}  // namespace tensorverb
