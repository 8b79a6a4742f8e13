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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "tensorverb/decimal.h"
#include "tensorverb/error.h"
#include "tensorverb/kernels.h"
#include "test_util.h"

namespace tensorverb {
namespace {

namespace fs = std::filesystem;

Corpus make_corpus(std::vector<std::vector<std::string>> sentences) {
  return Corpus(sentences);
}

fs::path temp_path(const std::string& name) {
  return fs::temp_directory_path() / ("tensorverb_space_test_" + name);
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

TEST(SelectBasisTest, Examples) {
  EXPECT_EQ(select_basis(make_corpus({{"a", "a", "b", "c"}}), 2, {}).words(),
            (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(select_basis(make_corpus({{"x"}}), 5, {}).words(),
            (std::vector<std::string>{"x"}));
  EXPECT_EQ(select_basis(make_corpus({{"a", "b"}}), 1, {"a"}).words(),
            (std::vector<std::string>{"b"}));
}

TEST(SelectBasisTest, EmptyBasisError) {
  try {
    select_basis(make_corpus({{"a", "a"}}), 3, {"a"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyBasis);
  }
  EXPECT_THROW(select_basis(Corpus(), 3, {}), Error);
}

TEST(SelectBasisTest, NonIncreasingFrequencyAndNoStopwords) {
  std::mt19937_64 rng(11);
  std::vector<std::vector<std::string>> sentences;
  for (int s = 0; s < 200; ++s) {
    std::vector<std::string> tokens;
    for (int t = 0; t < 8; ++t) tokens.push_back("w" + std::to_string(rng() % 30));
    sentences.push_back(tokens);
  }
  const Corpus corpus(sentences);
  const std::unordered_set<std::string> stop = {"w1", "w2", "w3"};
  const Basis basis = select_basis(corpus, 12, stop);
  ASSERT_EQ(basis.size(), 12u);
  std::map<std::string, std::uint64_t> freq;
  for (TokenId id = 0; id < corpus.vocabulary_size(); ++id) {
    freq[corpus.word(id)] = corpus.frequencies()[id];
  }
  for (std::size_t j = 0; j < basis.size(); ++j) {
    EXPECT_FALSE(stop.contains(basis.word(j)));
    if (j > 0) EXPECT_GE(freq[basis.word(j - 1)], freq[basis.word(j)]);
  }
  EXPECT_EQ(select_basis(corpus, 12, stop).words(), basis.words());
}

TEST(CountTest, Examples) {
  {
    const Corpus corpus = make_corpus({{"dog", "bark"}});
    const Basis basis({"dog", "bark"});
    const auto counts = count_cooccurrence(corpus, basis, {.window = 1});
    EXPECT_EQ(counts.count("dog", 1), 1u);
    EXPECT_EQ(counts.count("bark", 0), 1u);
    EXPECT_EQ(counts.grand_total, 2u);
  }
  {
    const Corpus corpus = make_corpus({{"solo"}});
    const auto counts = count_cooccurrence(corpus, Basis({"solo"}), {.window = 5});
    EXPECT_EQ(counts.grand_total, 0u);
    ASSERT_NE(counts.find("solo"), nullptr);
    EXPECT_EQ(counts.find("solo")->total, 0u);
  }
  {
    const Corpus corpus = make_corpus({{"a", "x", "a"}});
    const auto counts = count_cooccurrence(corpus, Basis({"a"}), {.window = 1});
    EXPECT_EQ(counts.count("x", 0), 2u);
    EXPECT_EQ(counts.count("a", 0), 0u);
  }
}

TEST(CountTest, WindowMustBePositive) {
  EXPECT_THROW(count_cooccurrence(make_corpus({{"a"}}), Basis({"a"}), {.window = 0}),
               Error);
}

TEST(CountTest, TargetFilter) {
  const Corpus corpus = make_corpus({{"a", "b", "c"}});
  CountOptions options{.window = 2, .target_filter = std::unordered_set<std::string>{"b"}};
  const auto counts = count_cooccurrence(corpus, Basis({"a", "c"}), options);
  ASSERT_EQ(counts.targets.size(), 1u);
  EXPECT_EQ(counts.targets[0].word, "b");
  EXPECT_EQ(counts.targets[0].total, 2u);
}

std::vector<std::vector<std::string>> random_sentences(std::mt19937_64& rng,
                                                       int n, int vocab) {
  std::vector<std::vector<std::string>> sentences;
  for (int s = 0; s < n; ++s) {
    std::vector<std::string> tokens;
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int t = 0; t < len; ++t) tokens.push_back("t" + std::to_string(rng() % vocab));
    sentences.push_back(tokens);
  }
  return sentences;
}

void expect_same_counts(const CooccurrenceCounts& a, const CooccurrenceCounts& b) {
  ASSERT_EQ(a.targets.size(), b.targets.size());
  for (std::size_t i = 0; i < a.targets.size(); ++i) {
    EXPECT_EQ(a.targets[i].word, b.targets[i].word);
    EXPECT_EQ(a.targets[i].contexts, b.targets[i].contexts);
    EXPECT_EQ(a.targets[i].total, b.targets[i].total);
  }
  EXPECT_EQ(a.context_total, b.context_total);
  EXPECT_EQ(a.grand_total, b.grand_total);
}

TEST(CountTest, TotalsIdentitiesHold) {
  std::mt19937_64 rng(12);
  const Corpus corpus(random_sentences(rng, 500, 40));
  const Basis basis = select_basis(corpus, 15, {});
  const auto counts = count_cooccurrence(corpus, basis, {.window = 3});
  std::uint64_t grand = 0;
  std::vector<std::uint64_t> context(basis.size(), 0);
  for (const auto& row : counts.targets) {
    std::uint64_t total = 0;
    for (const auto& [j, c] : row.contexts) {
      total += c;
      context[j] += c;
    }
    EXPECT_EQ(row.total, total);
    grand += row.total;
  }
  EXPECT_EQ(counts.grand_total, grand);
  EXPECT_EQ(counts.context_total, context);
  EXPECT_EQ(std::accumulate(context.begin(), context.end(), std::uint64_t{0}), grand);
}

TEST(CountTest, ParallelMatchesSerialAtAnyThreadCount) {
  std::mt19937_64 rng(13);
  const Corpus corpus(random_sentences(rng, 3000, 80));
  const Basis basis = select_basis(corpus, 25, {"t0"});
  const auto reference = serial::count_cooccurrence(corpus, basis, {.window = 4});
  for (int threads : {1, 2, 3, 8}) {
    set_thread_limit(threads);
    expect_same_counts(count_cooccurrence(corpus, basis, {.window = 4}), reference);
  }
  set_thread_limit(0);
}

TEST(CountTest, SentenceOrderDoesNotMatter) {
  std::mt19937_64 rng(14);
  auto sentences = random_sentences(rng, 400, 30);
  const Corpus corpus(sentences);
  const Basis basis = select_basis(corpus, 10, {});
  const auto before = count_cooccurrence(corpus, basis, {.window = 2});
  std::shuffle(sentences.begin(), sentences.end(), rng);
  const auto after = count_cooccurrence(Corpus(sentences), basis, {.window = 2});
  expect_same_counts(before, after);
}

TEST(WeightTest, RatioExample) {
  // count[t][j] = 2, total[t] = 4, context_total[j] = 2, grand_total = 16.
  CooccurrenceCounts counts;
  counts.targets = {{"t", {{0, 2}, {1, 2}}, 4}, {"u", {{1, 12}}, 12}};
  counts.context_total = {2, 14};
  counts.grand_total = 16;
  const SemanticSpace space = weight_counts(counts, Basis({"j", "k"}));
  EXPECT_EQ(space.at("t")[0], 4.0);
  EXPECT_EQ(space.at("u")[0], 0.0);
}

TEST(WeightTest, EmptyCountsError) {
  CooccurrenceCounts counts;
  counts.context_total = {0};
  try {
    weight_counts(counts, Basis({"a"}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyCounts);
  }
}

TEST(WeightTest, IndependenceGivesOnes) {
  // p(j | t) = p(j) for every target and context.
  CooccurrenceCounts uniform;
  uniform.targets = {{"x", {{0, 3}, {1, 6}}, 9}, {"y", {{0, 5}, {1, 10}}, 15}};
  uniform.context_total = {8, 16};
  uniform.grand_total = 24;
  const SemanticSpace space = weight_counts(uniform, Basis({"p", "q"}));
  for (const auto& w : {"x", "y"}) {
    for (double v : space.at(w).weights()) EXPECT_NEAR(v, 1.0, 1e-12);
  }
}

TEST(WeightTest, WeightsAreFiniteAndNonNegative) {
  std::mt19937_64 rng(17);
  const Corpus corpus(random_sentences(rng, 300, 40));
  const Basis basis = select_basis(corpus, 20, {});
  const SemanticSpace space =
      weight_counts(count_cooccurrence(corpus, basis, {.window = 2}), basis);
  EXPECT_EQ(space.vocabulary_size(), corpus.vocabulary_size());
  for (std::size_t i = 0; i < space.vocabulary_size(); ++i) {
    for (double v : space.vector(i).weights()) {
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
  }
}

TEST(SpaceTest, OovLookup) {
  const SemanticSpace space(Basis({"a"}), {"w"}, {SemanticVector{1.0}});
  EXPECT_EQ(space.find("missing"), nullptr);
  try {
    space.at("missing");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOov);
  }
}

TEST(SpaceTest, RejectsNegativeWeightsAndBadLengths) {
  EXPECT_THROW(SemanticSpace(Basis({"a"}), {"w"}, {SemanticVector{-1.0}}), Error);
  EXPECT_THROW(SemanticSpace(Basis({"a"}), {"w"}, {SemanticVector{1.0, 2.0}}), Error);
  EXPECT_THROW(SemanticSpace(Basis({"a"}), {"w", "w"},
                             {SemanticVector{1.0}, SemanticVector{1.0}}),
               Error);
}

SemanticSpace random_space(std::mt19937_64& rng, std::size_t dim, std::size_t words) {
  std::vector<std::string> basis;
  for (std::size_t j = 0; j < dim; ++j) basis.push_back("b" + std::to_string(j));
  std::vector<std::string> names;
  std::vector<SemanticVector> vectors;
  std::uniform_real_distribution<double> dist(0.0, 50.0);
  for (std::size_t i = 0; i < words; ++i) {
    names.push_back("w" + std::to_string(i));
    std::vector<double> w(dim);
    for (double& x : w) x = rng() % 4 == 0 ? 0.0 : dist(rng) / 3.0;
    vectors.emplace_back(std::move(w));
  }
  return SemanticSpace(Basis(basis), names, vectors);
}

TEST(SpaceFileTest, RoundTripIsBitwise) {
  std::mt19937_64 rng(15);
  const fs::path path = temp_path("roundtrip.tsv");
  for (std::size_t dim : {1u, 7u, 300u}) {
    const SemanticSpace space = random_space(rng, dim, 20);
    save_space(space, path);
    EXPECT_EQ(load_space(path), space);
  }
}

TEST(SpaceFileTest, RoundTripsExtremeDoubles) {
  const fs::path path = temp_path("extreme.tsv");
  const SemanticSpace space(
      Basis({"a", "b", "c", "d"}), {"w"},
      {SemanticVector{5e-324, 1.7976931348623157e308, 0.1, 1.0 / 3.0}});
  save_space(space, path);
  EXPECT_EQ(load_space(path), space);
}

TEST(SpaceFileTest, HeaderFormat) {
  const fs::path path = temp_path("header.tsv");
  save_space(SemanticSpace(Basis({"x", "y"}), {"w"}, {SemanticVector{0.5, 2}}), path);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), "tensor-verb-space v1\tdim=2\nx\ty\nw\t0.5\t2\n");
  write_file(path, "tensor-verb-space v1\tdim=1\nz\nw\t3\n");
  EXPECT_EQ(load_space(path).at("w")[0], 3.0);
}

TEST(SpaceFileTest, TruncatedFileNamesOffset) {
  const fs::path path = temp_path("truncated.tsv");
  write_file(path, "tensor-verb-space v1\tdim=2\nx\ty\nw\t0.5\t2\nv\t1.2");
  try {
    load_space(path);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("byte 39"), std::string::npos) << e.what();
  }
}

TEST(SpaceFileTest, Corruption) {
  const fs::path path = temp_path("corrupt.tsv");
  auto expect_code = [&](const std::string& text, ErrorCode code) {
    write_file(path, text);
    try {
      load_space(path);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << e.what();
    }
  };
  expect_code("tensor-verb-space v2\tdim=1\nx\nw\t1\n", ErrorCode::kVersion);
  expect_code("something else\n", ErrorCode::kParse);
  expect_code("tensor-verb-space v1\tdim=2\nx\nw\t1\n", ErrorCode::kParse);
  expect_code("tensor-verb-space v1\tdim=1\nx\nw\t1\t2\n", ErrorCode::kParse);
  expect_code("tensor-verb-space v1\tdim=1\nx\nw\tabc\n", ErrorCode::kParse);
  expect_code("tensor-verb-space v1\tdim=1\nx\nw\t-1\n", ErrorCode::kParse);
  expect_code("", ErrorCode::kParse);
  try {
    load_space(temp_path("does-not-exist.tsv"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
  }
}

TEST(SpaceTest, FingerprintTracksContent) {
  const SemanticSpace a(Basis({"x"}), {"w"}, {SemanticVector{1.0}});
  const SemanticSpace b(Basis({"x"}), {"w"}, {SemanticVector{1.0000000000000002}});
  EXPECT_EQ(fingerprint(a), fingerprint(a));
  EXPECT_NE(fingerprint(a), fingerprint(b));
}

TEST(DecimalTest, ShortestRoundTrip) {
  std::mt19937_64 rng(16);
  for (int i = 0; i < 10000; ++i) {
    const double x = std::bit_cast<double>(rng() & 0x7fefffffffffffffull);
    EXPECT_EQ(parse_double(format_shortest(x)).value(), x);
  }
  EXPECT_EQ(format_shortest(0.1), "0.1");
  EXPECT_FALSE(parse_double("1.5x"));
  EXPECT_FALSE(parse_double(""));
}

TEST(CorpusTest, ReadsSentencesAndSkipsBlankLines) {
  const fs::path path = temp_path("corpus.txt");
  write_file(path, "the dog bark\n\nthe  cat\n");
  const Corpus corpus = read_corpus(path);
  EXPECT_EQ(corpus.num_sentences(), 2u);
  EXPECT_EQ(corpus.num_tokens(), 5u);
  EXPECT_EQ(corpus.frequencies()[0], 2u);  // "the"
}

}  // namespace
}  // namespace tensorverb
