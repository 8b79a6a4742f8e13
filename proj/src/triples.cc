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

#include "tensorverb/triples.h"

#include <fstream>

#include <fmt/core.h>

#include "tensorverb/decimal.h"
#include "tensorverb/error.h"

namespace tensorverb {

void SvoTripleSet::add(std::string_view verb, std::string_view subject,
                       std::string_view object, std::uint64_t count) {
  if (count == 0) {
    throw Error(ErrorCode::kValidation, "triple count must be >= 1");
  }
  auto& observations = triples_[std::string(verb)];
  std::string key = fmt::format("{}\t{}\t{}", verb, subject, object);
  auto [pos, inserted] = positions_.emplace(std::move(key), observations.size());
  if (!inserted) {
    observations[pos->second].count += count;
    return;
  }
  observations.push_back({std::string(subject), std::string(object), count});
}

const std::vector<SvoObservation>* SvoTripleSet::find(std::string_view verb) const {
  auto it = triples_.find(verb);
  return it == triples_.end() ? nullptr : &it->second;
}

SvoTripleSet load_triples(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open triples {}", path.string()));
  }
  SvoTripleSet triples;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;

    std::string_view fields[4];
    std::size_t n = 0;
    std::size_t start = 0;
    std::string_view rest(line);
    while (true) {
      const std::size_t tab = rest.find('\t', start);
      const std::string_view field =
          rest.substr(start, tab == std::string_view::npos ? tab : tab - start);
      if (n < 4) fields[n] = field;
      ++n;
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (n != 4) {
      throw Error(ErrorCode::kParse,
                  fmt::format("{}:{}: expected 4 tab-separated fields, found {}",
                              path.string(), line_number, n));
    }
    for (std::size_t i = 0; i < 3; ++i) {
      if (fields[i].empty() || fields[i].find(' ') != std::string_view::npos) {
        throw Error(ErrorCode::kParse,
                    fmt::format("{}:{}: field {} is not a single token",
                                path.string(), line_number, i + 1));
      }
    }
    const auto count = parse_integer(fields[3]);
    if (!count) {
      throw Error(ErrorCode::kParse, fmt::format("{}:{}: bad count '{}'",
                                                 path.string(), line_number,
                                                 fields[3]));
    }
    if (*count <= 0) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("{}:{}: count must be positive, got {}",
                              path.string(), line_number, *count));
    }
    triples.add(fields[0], fields[1], fields[2],
                static_cast<std::uint64_t>(*count));
  }
  return triples;
}

}  // namespace tensorverb
