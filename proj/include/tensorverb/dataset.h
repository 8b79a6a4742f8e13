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

#ifndef TENSORVERB_DATASET_H_
#define TENSORVERB_DATASET_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tensorverb {

enum class Band { kHigh, kLow };

std::string_view band_name(Band band);
std::optional<Band> parse_band(std::string_view text);

// One human judgment of the pair "subject verb object" vs
// "subject landmark object".
struct DatasetEntry {
  std::string annotator;
  std::string verb;
  std::string subject;
  std::string object;
  std::string landmark;
  int human_score = 1;  // 1..7
  Band band = Band::kHigh;

  friend bool operator==(const DatasetEntry&, const DatasetEntry&) = default;
};

inline constexpr std::string_view kDatasetHeader =
    "annotator\tverb\tsubject\tobject\tlandmark\tscore\tband";

// Entries in file order. Throws kParse naming the line on a bad header,
// wrong arity, score outside 1..7 or an unknown band.
std::vector<DatasetEntry> parse_dataset(const std::filesystem::path& path);
std::vector<DatasetEntry> parse_dataset_text(std::string_view text);

}  // namespace tensorverb

#endif  // TENSORVERB_DATASET_H_
