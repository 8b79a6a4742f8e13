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

#include "tensorverb/corpus.h"

#include <algorithm>
#include <fstream>

#include <fmt/core.h>

#include "tensorverb/error.h"

namespace tensorverb {
namespace {

bool has_whitespace(std::string_view token) {
  return std::any_of(token.begin(), token.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    const std::size_t start = line.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    std::size_t end = line.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = line.size();
    tokens.push_back(line.substr(start, end - start));
    pos = end;
  }
  return tokens;
}

}  // namespace

Corpus::Corpus(const std::vector<std::vector<std::string>>& sentences) {
  for (const auto& s : sentences) add_sentence(std::span<const std::string>(s));
}

TokenId Corpus::intern(std::string_view token) {
  if (token.empty() || has_whitespace(token)) {
    throw Error(ErrorCode::kValidation,
                fmt::format("invalid token '{}'", token));
  }
  auto it = ids_.find(std::string(token));
  if (it != ids_.end()) return it->second;
  const auto id = static_cast<TokenId>(vocabulary_.size());
  vocabulary_.emplace_back(token);
  frequency_.push_back(0);
  ids_.emplace(vocabulary_.back(), id);
  return id;
}

void Corpus::add_sentence(std::span<const std::string> tokens) {
  std::vector<std::string_view> views(tokens.begin(), tokens.end());
  add_sentence(std::span<const std::string_view>(views));
}

void Corpus::add_sentence(std::span<const std::string_view> tokens) {
  if (tokens.empty()) return;
  for (std::string_view token : tokens) {
    const TokenId id = intern(token);
    ++frequency_[id];
    tokens_.push_back(id);
  }
  offsets_.push_back(tokens_.size());
}

Corpus read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open corpus {}", path.string()));
  }
  Corpus corpus;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    try {
      corpus.add_sentence(split_spaces(line));
    } catch (const Error& e) {
      throw Error(ErrorCode::kParse,
                  fmt::format("{}:{}: {}", path.string(), line_number, e.what()));
    }
  }
  if (in.bad()) {
    throw Error(ErrorCode::kIo, fmt::format("read failed on {}", path.string()));
  }
  return corpus;
}

const std::unordered_set<std::string>& default_stoplist() {
  static const std::unordered_set<std::string> words = {
      "a",       "about",   "above",   "after",  "again",   "against", "all",
      "also",    "am",      "an",      "and",    "any",     "are",     "as",
      "at",      "be",      "because", "been",   "before",  "being",   "below",
      "between", "both",    "but",     "by",     "can",     "could",   "did",
      "do",      "does",    "doing",   "down",   "during",  "each",    "few",
      "for",     "from",    "further", "had",    "has",     "have",    "having",
      "he",      "her",     "here",    "hers",   "herself", "him",     "himself",
      "his",     "how",     "i",       "if",     "in",      "into",    "is",
      "it",      "its",     "itself",  "may",    "me",      "might",   "more",
      "most",    "must",    "my",      "myself", "no",      "nor",     "not",
      "of",      "off",     "on",      "once",   "only",    "or",      "other",
      "our",     "ours",    "out",     "over",   "own",     "same",    "shall",
      "she",     "should",  "so",      "some",   "such",    "than",    "that",
      "the",     "their",   "them",    "then",   "there",   "these",   "they",
      "this",    "those",   "through", "to",     "too",     "under",   "until",
      "up",      "very",    "was",     "we",     "were",    "what",    "when",
      "where",   "which",   "while",   "who",    "whom",    "why",     "will",
      "with",    "would",   "you",     "your",   "yours",
  };
  return words;
}

std::unordered_set<std::string> read_word_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open word list {}", path.string()));
  }
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    for (std::string_view token : split_spaces(line)) {
      if (token.front() == '#') break;
      words.emplace(token);
    }
  }
  return words;
}

}  // namespace tensorverb
