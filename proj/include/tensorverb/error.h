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

#ifndef TENSORVERB_ERROR_H_
#define TENSORVERB_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tensorverb {

enum class ErrorCode {
  kShape,          // length or shape mismatch between operands
  kIo,             // file could not be opened, read or written
  kParse,          // malformed input file
  kVersion,        // file format version not supported
  kValidation,     // well-formed but out-of-range value
  kOov,            // word has no vector in the space
  kNoObservations, // verb has no usable subject/object pairs
  kEmptyBasis,
  kEmptyCounts,
  kDegenerate,     // statistic undefined on the given input
  kIncomparable,   // sentence meanings of different kinds
  kUsage,
};

// Machine-greppable prefix printed by the CLI, e.g. "E_PARSE".
std::string_view error_prefix(ErrorCode code);

// Process exit status the CLI uses for a given error.
int exit_status(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tensorverb

#endif  // TENSORVERB_ERROR_H_
