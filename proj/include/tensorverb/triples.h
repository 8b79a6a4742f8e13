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

#ifndef TENSORVERB_TRIPLES_H_
#define TENSORVERB_TRIPLES_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tensorverb {

struct SvoObservation {
  std::string subject;
  std::string object;
  std::uint64_t count = 1;

  friend bool operator==(const SvoObservation&, const SvoObservation&) = default;
};

// verb -> (subject, object, count) observations. Each (subject, object) pair
// appears once per verb, in order of first appearance.
class SvoTripleSet {
 public:
  // Adds `count` (>= 1) observations, merging with an existing pair.
  void add(std::string_view verb, std::string_view subject,
           std::string_view object, std::uint64_t count);

  const std::vector<SvoObservation>* find(std::string_view verb) const;
  const std::map<std::string, std::vector<SvoObservation>, std::less<>>& verbs()
      const {
    return triples_;
  }
  bool empty() const { return triples_.empty(); }

 private:
  std::map<std::string, std::vector<SvoObservation>, std::less<>> triples_;
  // "verb\tsubject\tobject" -> position within triples_[verb]
  std::unordered_map<std::string, std::size_t> positions_;
};

// TSV: verb, subject, object, count. '#' lines and blank lines are skipped.
SvoTripleSet load_triples(const std::filesystem::path& path);

}  // namespace tensorverb

#endif  // TENSORVERB_TRIPLES_H_
