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

#ifndef TENSORVERB_CORPUS_H_
#define TENSORVERB_CORPUS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace tensorverb {

using TokenId = std::uint32_t;

// Lemmatized corpus with tokens interned to ids in first-seen order.
// Sentences are non-empty and tokens contain no whitespace.
class Corpus {
 public:
  Corpus() = default;
  explicit Corpus(const std::vector<std::vector<std::string>>& sentences);

  // Appends one sentence; empty sentences are ignored. Throws kValidation
  // on a token containing whitespace.
  void add_sentence(std::span<const std::string> tokens);
  void add_sentence(std::span<const std::string_view> tokens);

  std::size_t num_sentences() const { return offsets_.size() - 1; }
  std::size_t num_tokens() const { return tokens_.size(); }
  std::size_t vocabulary_size() const { return vocabulary_.size(); }

  std::span<const TokenId> sentence(std::size_t s) const {
    return std::span<const TokenId>(tokens_).subspan(
        offsets_[s], offsets_[s + 1] - offsets_[s]);
  }
  const std::string& word(TokenId id) const { return vocabulary_[id]; }
  const std::vector<std::string>& vocabulary() const { return vocabulary_; }
  // Token frequency per id.
  const std::vector<std::uint64_t>& frequencies() const { return frequency_; }

 private:
  TokenId intern(std::string_view token);

  std::vector<std::string> vocabulary_;
  std::unordered_map<std::string, TokenId> ids_;
  std::vector<std::uint64_t> frequency_;
  std::vector<TokenId> tokens_;
  std::vector<std::size_t> offsets_{0};
};

// One sentence per line, tokens separated by spaces. Blank lines are skipped.
Corpus read_corpus(const std::filesystem::path& path);

// Bundled English function-word list used as the default stoplist.
const std::unordered_set<std::string>& default_stoplist();

// One word per line; blank and '#' lines ignored.
std::unordered_set<std::string> read_word_list(const std::filesystem::path& path);

}  // namespace tensorverb

#endif  // TENSORVERB_CORPUS_H_
