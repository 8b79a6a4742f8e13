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

#ifndef TENSORVERB_REPORT_H_
#define TENSORVERB_REPORT_H_

#include <optional>
#include <span>
#include <string>

#include "tensorverb/dataset.h"
#include "tensorverb/evaluate.h"

namespace tensorverb {

// Aligned text table: Model, High, Low, rho, scored, skipped.
std::string format_table(std::span<const EvaluationReport> reports,
                         const std::optional<UpperBound>& upper);

// JSON document with every report field and per-entry scores.
std::string format_json(std::span<const EvaluationReport> reports,
                        const std::optional<UpperBound>& upper,
                        std::span<const DatasetEntry> dataset);

}  // namespace tensorverb

#endif  // TENSORVERB_REPORT_H_
