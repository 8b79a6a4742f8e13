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

#ifndef TENSORVERB_SPACE_H_
#define TENSORVERB_SPACE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "tensorverb/corpus.h"
#include "tensorverb/tensor.h"

namespace tensorverb {

// Ordered list of distinct context words; position is the vector component.
class Basis {
 public:
  Basis() = default;
  // Throws kValidation on duplicates or an empty list.
  explicit Basis(std::vector<std::string> words);

  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  const std::string& word(std::size_t j) const { return words_[j]; }
  std::optional<std::size_t> find(std::string_view word) const;

 private:
  std::vector<std::string> words_;
  std::unordered_map<std::string, std::size_t> index_;
};

// The k most frequent tokens outside `stoplist`, by descending frequency and
// then ascending byte order. Returns fewer than k when fewer qualify.
Basis select_basis(const Corpus& corpus, std::size_t k,
                   const std::unordered_set<std::string>& stoplist);

struct CooccurrenceCounts {
  struct TargetRow {
    std::string word;
    // (basis index, count), sorted by basis index, counts > 0.
    std::vector<std::pair<std::uint32_t, std::uint64_t>> contexts;
    std::uint64_t total = 0;
  };

  std::vector<TargetRow> targets;  // sorted by word
  std::vector<std::uint64_t> context_total;
  std::uint64_t grand_total = 0;

  std::uint64_t count(std::string_view target, std::size_t context) const;
  const TargetRow* find(std::string_view target) const;
};

struct CountOptions {
  std::size_t window = 5;
  // When set, only these words are counted as targets.
  std::optional<std::unordered_set<std::string>> target_filter;
};

// Symmetric window counting, clipped at sentence boundaries. Sentences are
// sharded across threads; partial counts merge by integer addition.
CooccurrenceCounts count_cooccurrence(const Corpus& corpus, const Basis& basis,
                                      const CountOptions& options);

namespace serial {
CooccurrenceCounts count_cooccurrence(const Corpus& corpus, const Basis& basis,
                                      const CountOptions& options);
}  // namespace serial

class SemanticSpace {
 public:
  SemanticSpace() = default;
  // `words` must be distinct; every vector must have basis.size() entries,
  // all finite and >= 0.
  SemanticSpace(Basis basis, std::vector<std::string> words,
                std::vector<SemanticVector> vectors);

  const Basis& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t vocabulary_size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }
  const SemanticVector& vector(std::size_t i) const { return vectors_[i]; }

  const SemanticVector* find(std::string_view word) const;
  // Throws kOov when the word has no vector.
  const SemanticVector& at(std::string_view word) const;

  friend bool operator==(const SemanticSpace& a, const SemanticSpace& b) {
    return a.basis_.words() == b.basis_.words() && a.words_ == b.words_ &&
           a.vectors_ == b.vectors_;
  }

 private:
  Basis basis_;
  std::vector<std::string> words_;
  std::vector<SemanticVector> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Weight = p(context | target) / p(context). Throws kEmptyCounts when
// grand_total is zero.
SemanticSpace weight_counts(const CooccurrenceCounts& counts, const Basis& basis);

void save_space(const SemanticSpace& space, const std::filesystem::path& path);
SemanticSpace load_space(const std::filesystem::path& path);

// Stable 64-bit digest of basis, words and weight bits; keys verb caches.
std::uint64_t fingerprint(const SemanticSpace& space);

}  // namespace tensorverb

#endif  // TENSORVERB_SPACE_H_
