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

#include "tensorverb/dataset.h"

#include <fstream>
#include <iterator>
#include <sstream>

#include <fmt/core.h>

#include "tensorverb/decimal.h"
#include "tensorverb/error.h"

namespace tensorverb {

std::string_view band_name(Band band) {
  return band == Band::kHigh ? "HIGH" : "LOW";
}

std::optional<Band> parse_band(std::string_view text) {
  if (text == "HIGH") return Band::kHigh;
  if (text == "LOW") return Band::kLow;
  return std::nullopt;
}

std::vector<DatasetEntry> parse_dataset_text(std::string_view text) {
  std::vector<DatasetEntry> entries;
  std::size_t line_number = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!header_seen) {
      if (line != kDatasetHeader) {
        throw Error(ErrorCode::kParse,
                    fmt::format("line {}: expected header '{}'", line_number,
                                "annotator<TAB>verb<TAB>subject<TAB>object<TAB>"
                                "landmark<TAB>score<TAB>band"));
      }
      header_seen = true;
      continue;
    }
    if (line.empty()) continue;

    std::vector<std::string_view> fields;
    while (true) {
      const std::size_t tab = line.find('\t');
      fields.push_back(line.substr(0, tab));
      if (tab == std::string_view::npos) break;
      line.remove_prefix(tab + 1);
    }
    if (fields.size() != 7) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: expected 7 fields, found {}",
                              line_number, fields.size()));
    }
    for (std::size_t i = 0; i < 5; ++i) {
      if (fields[i].empty()) {
        throw Error(ErrorCode::kParse,
                    fmt::format("line {}: field {} is empty", line_number, i + 1));
      }
    }
    const auto score = parse_integer(fields[5]);
    if (!score) {
      throw Error(ErrorCode::kParse, fmt::format("line {}: bad score '{}'",
                                                 line_number, fields[5]));
    }
    if (*score < 1 || *score > 7) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: score {} outside 1..7", line_number,
                              *score));
    }
    const auto band = parse_band(fields[6]);
    if (!band) {
      throw Error(ErrorCode::kParse,
                  fmt::format("line {}: unknown band '{}' (HIGH or LOW)",
                              line_number, fields[6]));
    }
    entries.push_back({std::string(fields[0]), std::string(fields[1]),
                       std::string(fields[2]), std::string(fields[3]),
                       std::string(fields[4]), static_cast<int>(*score), *band});
  }
  if (!header_seen) {
    throw Error(ErrorCode::kParse, "line 1: missing header");
  }
  return entries;
}

std::vector<DatasetEntry> parse_dataset(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open dataset {}", path.string()));
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  try {
    return parse_dataset_text(text);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("{}: {}", path.string(), e.what()));
  }
}

}  // namespace tensorverb
