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

#include "tensorverb/space.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <sstream>
#include <tuple>

#include <fmt/core.h>
#include <omp.h>

#include "tensorverb/decimal.h"
#include "tensorverb/error.h"

namespace tensorverb {

// ---------------------------------------------------------------------------
// Basis

Basis::Basis(std::vector<std::string> words) : words_(std::move(words)) {
  if (words_.empty()) throw Error(ErrorCode::kEmptyBasis, "basis is empty");
  index_.reserve(words_.size());
  for (std::size_t j = 0; j < words_.size(); ++j) {
    if (!index_.emplace(words_[j], j).second) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("duplicate basis word '{}'", words_[j]));
    }
  }
}

std::optional<std::size_t> Basis::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Basis select_basis(const Corpus& corpus, std::size_t k,
                   const std::unordered_set<std::string>& stoplist) {
  if (k == 0) throw Error(ErrorCode::kValidation, "basis size must be >= 1");
  std::vector<TokenId> candidates;
  for (TokenId id = 0; id < corpus.vocabulary_size(); ++id) {
    if (!stoplist.contains(corpus.word(id))) candidates.push_back(id);
  }
  if (candidates.empty()) {
    throw Error(ErrorCode::kEmptyBasis,
                "no corpus token qualifies as a basis word");
  }
  const auto& freq = corpus.frequencies();
  auto before = [&](TokenId a, TokenId b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return corpus.word(a) < corpus.word(b);
  };
  const std::size_t keep = std::min(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + keep,
                    candidates.end(), before);
  std::vector<std::string> words;
  words.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i) words.push_back(corpus.word(candidates[i]));
  return Basis(std::move(words));
}

// ---------------------------------------------------------------------------
// Counting

const CooccurrenceCounts::TargetRow* CooccurrenceCounts::find(
    std::string_view target) const {
  auto it = std::lower_bound(
      targets.begin(), targets.end(), target,
      [](const TargetRow& row, std::string_view w) { return row.word < w; });
  if (it == targets.end() || it->word != target) return nullptr;
  return &*it;
}

std::uint64_t CooccurrenceCounts::count(std::string_view target,
                                        std::size_t context) const {
  const TargetRow* row = find(target);
  if (row == nullptr) return 0;
  auto it = std::lower_bound(
      row->contexts.begin(), row->contexts.end(), context,
      [](const auto& entry, std::size_t j) { return entry.first < j; });
  if (it == row->contexts.end() || it->first != context) return 0;
  return it->second;
}

namespace {

void require_window(const CountOptions& options) {
  if (options.window == 0) {
    throw Error(ErrorCode::kValidation, "window must be >= 1");
  }
}

void fill_totals(CooccurrenceCounts& counts, std::size_t basis_size) {
  counts.context_total.assign(basis_size, 0);
  counts.grand_total = 0;
  for (auto& row : counts.targets) {
    row.total = 0;
    for (const auto& [j, c] : row.contexts) {
      row.total += c;
      counts.context_total[j] += c;
    }
    counts.grand_total += row.total;
  }
}

}  // namespace

namespace serial {

CooccurrenceCounts count_cooccurrence(const Corpus& corpus, const Basis& basis,
                                      const CountOptions& options) {
  require_window(options);
  std::map<std::string, std::map<std::uint32_t, std::uint64_t>> rows;
  for (std::size_t s = 0; s < corpus.num_sentences(); ++s) {
    const auto sentence = corpus.sentence(s);
    const auto n = static_cast<std::ptrdiff_t>(sentence.size());
    const auto w = static_cast<std::ptrdiff_t>(options.window);
    for (std::ptrdiff_t p = 0; p < n; ++p) {
      const std::string& target = corpus.word(sentence[p]);
      if (options.target_filter && !options.target_filter->contains(target)) {
        continue;
      }
      auto& row = rows[target];
      for (std::ptrdiff_t q = std::max<std::ptrdiff_t>(0, p - w);
           q <= std::min(n - 1, p + w); ++q) {
        if (q == p) continue;
        if (auto j = basis.find(corpus.word(sentence[q]))) {
          ++row[static_cast<std::uint32_t>(*j)];
        }
      }
    }
  }
  CooccurrenceCounts counts;
  for (auto& [word, contexts] : rows) {
    counts.targets.push_back({word, {contexts.begin(), contexts.end()}, 0});
  }
  fill_totals(counts, basis.size());
  return counts;
}

}  // namespace serial

CooccurrenceCounts count_cooccurrence(const Corpus& corpus, const Basis& basis,
                                      const CountOptions& options) {
  require_window(options);
  const std::size_t vocab = corpus.vocabulary_size();
  constexpr std::int64_t kNotBasis = -1;
  std::vector<std::int64_t> basis_of(vocab, kNotBasis);
  std::vector<char> is_target(vocab, 1);
  for (TokenId id = 0; id < vocab; ++id) {
    if (auto j = basis.find(corpus.word(id))) {
      basis_of[id] = static_cast<std::int64_t>(*j);
    }
    if (options.target_filter) {
      is_target[id] = options.target_filter->contains(corpus.word(id)) ? 1 : 0;
    }
  }

  // Every target type gets a row, even with no basis word in reach.
  std::vector<char> seen(vocab, 0);
  for (std::size_t s = 0; s < corpus.num_sentences(); ++s) {
    for (TokenId id : corpus.sentence(s)) seen[id] = is_target[id];
  }

  const auto key_of = [](TokenId target, std::uint32_t j) {
    return (static_cast<std::uint64_t>(target) << 32) | j;
  };

  const auto num_sentences = static_cast<std::ptrdiff_t>(corpus.num_sentences());
  const auto w = static_cast<std::ptrdiff_t>(options.window);
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> partials(
      static_cast<std::size_t>(omp_get_max_threads()));

#pragma omp parallel
  {
    auto& local = partials[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 256)
    for (std::ptrdiff_t s = 0; s < num_sentences; ++s) {
      const auto sentence = corpus.sentence(static_cast<std::size_t>(s));
      const auto n = static_cast<std::ptrdiff_t>(sentence.size());
      for (std::ptrdiff_t p = 0; p < n; ++p) {
        const TokenId target = sentence[p];
        if (!is_target[target]) continue;
        const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(0, p - w);
        const std::ptrdiff_t hi = std::min(n - 1, p + w);
        for (std::ptrdiff_t q = lo; q <= hi; ++q) {
          const std::int64_t j = basis_of[sentence[q]];
          if (q == p || j == kNotBasis) continue;
          ++local[key_of(target, static_cast<std::uint32_t>(j))];
        }
      }
    }
  }

  // Integer addition commutes, so merge order does not affect the result.
  std::unordered_map<std::uint64_t, std::uint64_t> merged;
  for (auto& local : partials) {
    for (const auto& [key, c] : local) merged[key] += c;
    local = {};
  }

  std::vector<TokenId> order;
  for (TokenId id = 0; id < vocab; ++id) {
    if (seen[id]) order.push_back(id);
  }
  std::sort(order.begin(), order.end(), [&](TokenId a, TokenId b) {
    return corpus.word(a) < corpus.word(b);
  });
  std::vector<std::size_t> row_of(vocab, 0);
  CooccurrenceCounts counts;
  counts.targets.resize(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    row_of[order[r]] = r;
    counts.targets[r].word = corpus.word(order[r]);
  }
  for (const auto& [key, c] : merged) {
    const auto target = static_cast<TokenId>(key >> 32);
    const auto j = static_cast<std::uint32_t>(key & 0xffffffffu);
    counts.targets[row_of[target]].contexts.emplace_back(j, c);
  }
  for (auto& row : counts.targets) {
    std::sort(row.contexts.begin(), row.contexts.end());
  }
  fill_totals(counts, basis.size());
  return counts;
}

// ---------------------------------------------------------------------------
// SemanticSpace

SemanticSpace::SemanticSpace(Basis basis, std::vector<std::string> words,
                             std::vector<SemanticVector> vectors)
    : basis_(std::move(basis)),
      words_(std::move(words)),
      vectors_(std::move(vectors)) {
  if (words_.size() != vectors_.size()) {
    throw Error(ErrorCode::kShape,
                fmt::format("{} words but {} vectors", words_.size(),
                            vectors_.size()));
  }
  index_.reserve(words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (vectors_[i].size() != basis_.size()) {
      throw Error(ErrorCode::kShape,
                  fmt::format("vector for '{}' has length {}, expected {}",
                              words_[i], vectors_[i].size(), basis_.size()));
    }
    for (double w : vectors_[i].weights()) {
      if (!(w >= 0.0)) {
        throw Error(ErrorCode::kValidation,
                    fmt::format("negative weight in vector for '{}'", words_[i]));
      }
    }
    if (!index_.emplace(words_[i], i).second) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("duplicate word '{}' in space", words_[i]));
    }
  }
}

const SemanticVector* SemanticSpace::find(std::string_view word) const {
  auto it = index_.find(std::string(word));
  return it == index_.end() ? nullptr : &vectors_[it->second];
}

const SemanticVector& SemanticSpace::at(std::string_view word) const {
  if (const SemanticVector* v = find(word)) return *v;
  throw Error(ErrorCode::kOov, fmt::format("'{}' is not in the space", word));
}

SemanticSpace weight_counts(const CooccurrenceCounts& counts, const Basis& basis) {
  if (counts.grand_total == 0) {
    throw Error(ErrorCode::kEmptyCounts, "no co-occurrences were counted");
  }
  if (counts.context_total.size() != basis.size()) {
    throw Error(ErrorCode::kShape, "counts do not match the basis");
  }
  const double grand = static_cast<double>(counts.grand_total);
  const auto n = static_cast<std::ptrdiff_t>(counts.targets.size());
  std::vector<std::string> words(counts.targets.size());
  std::vector<SemanticVector> vectors(counts.targets.size());

#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto& row = counts.targets[static_cast<std::size_t>(t)];
    std::vector<double> weights(basis.size(), 0.0);
    if (row.total > 0) {
      const double total = static_cast<double>(row.total);
      for (const auto& [j, c] : row.contexts) {
        const std::uint64_t context = counts.context_total[j];
        if (context == 0) continue;
        const double given_target = static_cast<double>(c) / total;
        const double overall = static_cast<double>(context) / grand;
        weights[j] = given_target / overall;
      }
    }
    words[static_cast<std::size_t>(t)] = row.word;
    vectors[static_cast<std::size_t>(t)] = SemanticVector(std::move(weights));
  }
  return SemanticSpace(basis, std::move(words), std::move(vectors));
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

constexpr std::string_view kSpaceMagic = "tensor-verb-space";
constexpr std::string_view kSpaceVersion = "v1";

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

[[noreturn]] void format_error(const std::filesystem::path& path,
                               std::size_t line, std::size_t offset,
                               const std::string& what) {
  throw Error(ErrorCode::kParse, fmt::format("{}: line {} (byte {}): {}",
                                             path.string(), line, offset, what));
}

}  // namespace

void save_space(const SemanticSpace& space, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("cannot write {}", path.string()));
  }
  std::string line = fmt::format("{} {}\tdim={}\n", kSpaceMagic, kSpaceVersion,
                                 space.dimension());
  out << line;
  line.clear();
  for (std::size_t j = 0; j < space.dimension(); ++j) {
    if (j > 0) line += '\t';
    line += space.basis().word(j);
  }
  line += '\n';
  out << line;
  for (std::size_t i = 0; i < space.vocabulary_size(); ++i) {
    line = space.words()[i];
    for (double w : space.vector(i).weights()) {
      line += '\t';
      line += format_shortest(w);
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("write failed on {}", path.string()));
  }
}

SemanticSpace load_space(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open space {}", path.string()));
  }
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(ErrorCode::kIo, fmt::format("read failed on {}", path.string()));
  }

  std::size_t offset = 0;
  std::size_t line_number = 0;
  // Returns the next complete line; a final line without '\n' means the
  // file was cut short.
  auto next_line = [&]() -> std::optional<std::string_view> {
    if (offset >= text.size()) return std::nullopt;
    ++line_number;
    const std::size_t nl = text.find('\n', offset);
    if (nl == std::string::npos) {
      format_error(path, line_number, offset,
                   fmt::format("truncated: no line terminator after byte {}",
                               text.size()));
    }
    std::string_view line(text.data() + offset, nl - offset);
    offset = nl + 1;
    return line;
  };

  const auto header = next_line();
  if (!header) format_error(path, 1, 0, "empty file");
  const auto header_fields = split_tabs(*header);
  const std::string_view magic_and_version = header_fields[0];
  if (!magic_and_version.starts_with(kSpaceMagic)) {
    format_error(path, 1, 0, "not a tensor-verb-space file");
  }
  if (magic_and_version != fmt::format("{} {}", kSpaceMagic, kSpaceVersion)) {
    throw Error(ErrorCode::kVersion,
                fmt::format("{}: unsupported space format '{}'", path.string(),
                            magic_and_version));
  }
  if (header_fields.size() != 2 || !header_fields[1].starts_with("dim=")) {
    format_error(path, 1, 0, "header must be '<magic> v1<TAB>dim=K'");
  }
  const auto dim = parse_integer(header_fields[1].substr(4));
  if (!dim || *dim < 1) format_error(path, 1, 0, "bad dimension");
  const auto k = static_cast<std::size_t>(*dim);

  std::size_t line_start = offset;
  const auto basis_line = next_line();
  if (!basis_line) format_error(path, 2, line_start, "missing basis line");
  auto basis_words = split_tabs(*basis_line);
  if (basis_words.size() != k) {
    format_error(path, 2, line_start,
                 fmt::format("{} basis words, header says {}",
                             basis_words.size(), k));
  }
  Basis basis;
  try {
    basis = Basis(std::vector<std::string>(basis_words.begin(), basis_words.end()));
  } catch (const Error& e) {
    format_error(path, 2, line_start, e.what());
  }

  std::vector<std::string> words;
  std::vector<SemanticVector> vectors;
  while (true) {
    line_start = offset;
    const auto line = next_line();
    if (!line) break;
    const auto fields = split_tabs(*line);
    if (fields.size() != k + 1) {
      format_error(path, line_number, line_start,
                   fmt::format("expected {} fields, found {}", k + 1,
                               fields.size()));
    }
    std::vector<double> weights(k);
    for (std::size_t j = 0; j < k; ++j) {
      const auto value = parse_double(fields[j + 1]);
      if (!value) {
        format_error(path, line_number, line_start,
                     fmt::format("bad weight '{}'", fields[j + 1]));
      }
      weights[j] = *value;
    }
    words.emplace_back(fields[0]);
    try {
      vectors.emplace_back(std::move(weights));
    } catch (const Error& e) {
      format_error(path, line_number, line_start, e.what());
    }
  }
  try {
    return SemanticSpace(std::move(basis), std::move(words), std::move(vectors));
  } catch (const Error& e) {
    throw Error(ErrorCode::kParse, fmt::format("{}: {}", path.string(), e.what()));
  }
}

std::uint64_t fingerprint(const SemanticSpace& space) {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  auto mix_byte = [&](unsigned char byte) {
    hash ^= byte;
    hash *= 0x100000001b3ull;
  };
  auto mix_text = [&](std::string_view text) {
    for (char c : text) mix_byte(static_cast<unsigned char>(c));
    mix_byte(0);
  };
  auto mix_u64 = [&](std::uint64_t value) {
    for (int i = 0; i < 8; ++i) mix_byte(static_cast<unsigned char>(value >> (8 * i)));
  };
  mix_u64(space.dimension());
  for (const auto& w : space.basis().words()) mix_text(w);
  for (std::size_t i = 0; i < space.vocabulary_size(); ++i) {
    mix_text(space.words()[i]);
    for (double w : space.vector(i).weights()) mix_u64(std::bit_cast<std::uint64_t>(w));
  }
  return hash;
}

}  // namespace tensorverb
