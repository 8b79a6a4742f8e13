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

// Acceptance suite. Prints one PASS/FAIL/SKIPPED line per criterion and exits
// nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "tensorverb/compose.h"
#include "tensorverb/corpus.h"
#include "tensorverb/dataset.h"
#include "tensorverb/error.h"
#include "tensorverb/evaluate.h"
#include "tensorverb/report.h"
#include "tensorverb/space.h"
#include "tensorverb/stats.h"
#include "tensorverb/tensor.h"
#include "tensorverb/triples.h"
#include "tensorverb/verbs.h"
#include "test_util.h"

namespace tensorverb {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;
using testing::closed_form_spearman;
using testing::oracle_spearman;
using testing::random_vector;

const fs::path kFixture = TENSORVERB_FIXTURE_DIR;

enum class Outcome { kPass, kFail, kSkipped };

struct Result {
  Outcome outcome;
  std::string detail;
};

Result pass(std::string detail) { return {Outcome::kPass, std::move(detail)}; }
Result fail(std::string detail) { return {Outcome::kFail, std::move(detail)}; }

struct Criterion {
  std::string name;
  double time_limit;  // seconds; 0 means no limit
  std::function<Result()> run;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Relative comparison against an error scale built from absolute values, so
// that signed inputs with cancellation are judged by their summand sizes.
bool within(double got, double want, double scale, double rel) {
  return std::fabs(got - want) <= rel * std::max(scale, 1e-300);
}

struct Sentence {
  SemanticVector verb, subject, object;
};

Sentence random_sentence(std::mt19937_64& rng, std::size_t r) {
  return {random_vector(rng, r), random_vector(rng, r), random_vector(rng, r)};
}

Result zero_diag_equals_multiply() {
  std::mt19937_64 rng(20111);
  double worst = 0.0;
  int cases = 0;
  for (; cases < 250; ++cases) {
    const std::size_t r = 2 + rng() % 49;
    const auto a = random_sentence(rng, r);
    const auto b = random_sentence(rng, r);
    const double categorical =
        similarity(compose_categorical(encode_verb_vector(a.verb, MatrixMethod::kZeroDiag), a.subject, a.object),
                   compose_categorical(encode_verb_vector(b.verb, MatrixMethod::kZeroDiag), b.subject, b.object))
            .value;
    const double multiplicative =
        similarity(compose_multiplicative(a.verb, a.subject, a.object),
                   compose_multiplicative(b.verb, b.subject, b.object))
            .value;
    worst = std::max(worst, std::fabs(categorical - multiplicative));
  }
  const auto detail = fmt::format("{} cases, r in 2..50, max diff {:.3g}", cases, worst);
  return worst <= 1e-10 ? pass(detail) : fail(detail);
}

// Independent cosine with plain loops in extended precision.
double plain_cosine(const std::vector<long double>& x, const std::vector<long double>& y) {
  long double xy = 0, xx = 0, yy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    xy += x[i] * y[i];
    xx += x[i] * x[i];
    yy += y[i] * y[i];
  }
  return static_cast<double>(xy / std::sqrt(xx * yy));
}

std::vector<long double> plain_product(const SemanticVector& a, const SemanticVector& b) {
  std::vector<long double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = static_cast<long double>(a[i]) * b[i];
  }
  return out;
}

Result kron_self_factorizes() {
  std::mt19937_64 rng(20112);
  double worst = 0.0;
  int cases = 0;
  for (; cases < 250; ++cases) {
    const std::size_t r = 2 + rng() % 49;
    const auto a = random_sentence(rng, r);
    const auto b = random_sentence(rng, r);
    const double library =
        similarity(compose_categorical(encode_verb_vector(a.verb, MatrixMethod::kKronSelf), a.subject, a.object),
                   compose_categorical(encode_verb_vector(b.verb, MatrixMethod::kKronSelf), b.subject, b.object))
            .value;
    const double factored = plain_cosine(plain_product(a.verb, a.subject),
                                         plain_product(b.verb, b.subject)) *
                            plain_cosine(plain_product(a.verb, a.object),
                                         plain_product(b.verb, b.object));
    worst = std::max(worst, std::fabs(library - factored));
  }
  const auto detail = fmt::format("{} cases, r in 2..50, max diff {:.3g}", cases, worst);
  return worst <= 1e-10 ? pass(detail) : fail(detail);
}

Result tensor_algebra() {
  constexpr double kRel = 1e-12;
  std::mt19937_64 rng(20113);
  std::uniform_real_distribution<double> lambda_dist(-3.0, 3.0);
  int cases = 0;
  int failures = 0;
  auto check = [&](double got, double want, double scale) {
    ++cases;
    if (!within(got, want, scale, kRel)) ++failures;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 24;
    const std::size_t m = n;  // kron takes operands of equal length
    const auto a = random_vector(rng, n, -2, 2);
    const auto b = random_vector(rng, n, -2, 2);
    const auto c = random_vector(rng, m, -2, 2);
    const auto d = random_vector(rng, m, -2, 2);
    const double lambda = lambda_dist(rng);

    // Bilinearity in each argument.
    const auto left_sum = kron(add(a, b), c);
    const auto left_parts = add(kron(a, c), kron(b, c));
    const auto right_sum = kron(a, add(c, d));
    const auto right_parts = add(kron(a, c), kron(a, d));
    const auto left_scaled = kron(scale(a, lambda), c);
    const auto right_scaled = kron(a, scale(c, lambda));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        check(left_sum(i, j), left_parts(i, j),
              std::fabs(a[i] * c[j]) + std::fabs(b[i] * c[j]));
        check(right_sum(i, j), right_parts(i, j),
              std::fabs(a[i] * c[j]) + std::fabs(a[i] * d[j]));
        check(left_scaled(i, j), lambda * a[i] * c[j], std::fabs(lambda * a[i] * c[j]));
        check(right_scaled(i, j), lambda * a[i] * c[j], std::fabs(lambda * a[i] * c[j]));
      }
    }

    // Norm multiplicativity.
    const double na = norm(a);
    const double nc = norm(c);
    check(frobenius_norm(kron(a, c)), na * nc, na * nc);

    // Inner-product factorization, scaled by the absolute inner products.
    const auto abs_dot = [](const SemanticVector& x, const SemanticVector& y) {
      long double s = 0;
      for (std::size_t i = 0; i < x.size(); ++i) s += std::fabs(x[i] * y[i]);
      return static_cast<double>(s);
    };
    check(frobenius_inner(kron(a, c), kron(b, d)), dot(a, b) * dot(c, d),
          abs_dot(a, b) * abs_dot(c, d));

    // Mixed product: (a ⊗ c) ⊙ (b ⊗ d) = (a ⊙ b) ⊗ (c ⊙ d).
    const auto mixed = hadamard(kron(a, c), kron(b, d));
    const auto factored = kron(hadamard(a, b), hadamard(c, d));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        check(mixed(i, j), factored(i, j), std::fabs(factored(i, j)));
      }
    }
  }
  const auto detail = fmt::format("{} comparisons, {} outside 1e-12 relative", cases, failures);
  return failures == 0 ? pass(detail) : fail(detail);
}

Result spearman_oracle() {
  int cases = 0;
  int failures = 0;
  double worst = 0.0;
  auto compare = [&](const std::vector<double>& x, const std::vector<double>& y,
                     bool tie_free) {
    ++cases;
    const double got = spearman_rho(x, y);
    double diff = std::fabs(got - oracle_spearman(x, y));
    if (tie_free) diff = std::max(diff, std::fabs(got - closed_form_spearman(x, y)));
    worst = std::max(worst, diff);
    if (diff > 1e-12) ++failures;
  };

  // A single point has no correlation; it must be rejected.
  ++cases;
  try {
    spearman_rho(std::vector<double>{1.0}, std::vector<double>{1.0});
    ++failures;
  } catch (const Error&) {
  }

  int permutations = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<double> identity(n);
    std::iota(identity.begin(), identity.end(), 1.0);
    std::vector<double> perm = identity;
    do {
      compare(identity, perm, true);
      ++permutations;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::mt19937_64 rng(20114);
  int tied = 0;
  while (tied < 200) {
    const std::size_t n = 3 + rng() % 38;
    const int levels_x = 2 + static_cast<int>(rng() % 6);
    const int levels_y = 2 + static_cast<int>(rng() % 6);
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng() % levels_x);
      y[i] = static_cast<double>(rng() % levels_y);
    }
    const auto constant = [](const std::vector<double>& v) {
      return std::all_of(v.begin(), v.end(), [&](double e) { return e == v[0]; });
    };
    if (constant(x) || constant(y)) continue;
    compare(x, y, false);
    ++tied;
  }
  const auto detail =
      fmt::format("{} cases ({} permutations of length 2..6, length 1 rejected, {} tied "
                  "lists), max diff {:.3g}",
                  cases, permutations, tied, worst);
  return failures == 0 ? pass(detail) : fail(detail);
}

struct Fixture {
  SemanticSpace space;
  SvoTripleSet triples;
  std::vector<DatasetEntry> dataset;
};

SemanticSpace build_fixture_space() {
  const Corpus corpus = read_corpus(kFixture / "corpus.txt");
  const Basis basis = select_basis(corpus, 40, read_word_list(kFixture / "stoplist.txt"));
  CountOptions options;
  options.window = 5;
  return weight_counts(count_cooccurrence(corpus, basis, options), basis);
}

const Fixture& fixture() {
  static const Fixture f{build_fixture_space(), load_triples(kFixture / "triples.tsv"),
                         parse_dataset(kFixture / "dataset.tsv")};
  return f;
}

Result baseline_invariance() {
  const auto& f = fixture();
  std::mt19937_64 rng(20115);
  const auto& words = f.space.words();
  int cases = 0;
  int mismatches = 0;
  for (const auto& original : f.dataset) {
    const double reference =
        score_entry(original, ModelSpec::baseline(), f.space, nullptr).model_similarity;
    for (int k = 0; k < 25; ++k) {
      DatasetEntry altered = original;
      altered.subject = words[rng() % words.size()];
      altered.object = k % 5 == 0 ? "word-not-in-space" : words[rng() % words.size()];
      const double got =
          score_entry(altered, ModelSpec::baseline(), f.space, nullptr).model_similarity;
      ++cases;
      if (std::memcmp(&got, &reference, sizeof got) != 0) ++mismatches;
    }
  }
  const auto detail = fmt::format("{} substitutions, {} not bit-identical", cases, mismatches);
  return mismatches == 0 ? pass(detail) : fail(detail);
}

struct Rendered {
  std::string table;
  std::string json;
  std::vector<EvaluationReport> reports;
};

Rendered run_fixture() {
  const SemanticSpace space = build_fixture_space();
  const auto triples = load_triples(kFixture / "triples.tsv");
  const auto dataset = parse_dataset(kFixture / "dataset.tsv");
  const auto models = all_models();
  auto reports = evaluate(dataset, models, space, &triples);
  const auto upper = upper_bound(dataset);
  return {format_table(reports, upper), format_json(reports, upper, dataset),
          std::move(reports)};
}

Result end_to_end_fixture() {
  const auto start = Clock::now();
  const Rendered first = run_fixture();
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  const Rendered second = run_fixture();

  std::vector<std::string> problems;
  if (seconds >= 10.0) problems.push_back(fmt::format("took {:.2f} s", seconds));
  if (first.reports.size() != 7) {
    problems.push_back(fmt::format("{} model rows", first.reports.size()));
  }
  std::map<std::string, double> rho;
  for (const auto& r : first.reports) rho[r.model.id()] = r.rho;
  const double add = rho["add"];
  const double kron_self = rho["categorical:kron_self"];
  const double indirect = rho["categorical:indirect"];
  if (!(kron_self > add)) problems.push_back("v⊗v rho not above add");
  if (!(indirect > add)) problems.push_back("indirect rho not above add");
  if (first.table != second.table || first.json != second.json) {
    problems.push_back("reports differ across runs");
  }
  if (first.table != read_file(kFixture / "golden_report.txt")) {
    problems.push_back("table differs from golden_report.txt");
  }
  if (first.json != read_file(kFixture / "golden_report.json")) {
    problems.push_back("json differs from golden_report.json");
  }
  std::string detail = fmt::format(
      "{:.2f} s, {} rows, rho v⊗v {:.4f} indirect {:.4f} add {:.4f}", seconds,
      first.reports.size(), kron_self, indirect, add);
  for (const auto& p : problems) detail += "; " + p;
  return problems.empty() ? pass(detail) : fail(detail);
}

bool bitwise_equal(const SemanticSpace& a, const SemanticSpace& b) {
  if (!(a.basis().words() == b.basis().words()) || a.words() != b.words()) return false;
  for (std::size_t i = 0; i < a.vocabulary_size(); ++i) {
    const auto x = a.vector(i).weights();
    const auto y = b.vector(i).weights();
    if (x.size() != y.size() ||
        std::memcmp(x.data(), y.data(), x.size() * sizeof(double)) != 0) {
      return false;
    }
  }
  return true;
}

Result space_round_trip() {
  std::mt19937_64 rng(20116);
  const fs::path dir = fs::temp_directory_path() / fmt::format("tensorverb_accept_{}", rng());
  fs::create_directories(dir);
  std::vector<std::string> problems;
  int spaces = 0;
  for (std::size_t dim : {1u, 7u, 40u, 500u, 2000u}) {
    std::vector<std::string> basis(dim);
    for (std::size_t j = 0; j < dim; ++j) basis[j] = fmt::format("c{}", j);
    std::vector<std::string> words;
    std::vector<SemanticVector> vectors;
    const std::size_t vocab = dim == 2000 ? 200 : 50;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (std::size_t i = 0; i < vocab; ++i) {
      words.push_back(fmt::format("w{}", i));
      std::vector<double> w(dim);
      for (double& x : w) {
        const auto kind = rng() % 8;
        if (kind == 0) {
          x = 0.0;
        } else if (kind == 1) {
          x = std::ldexp(unit(rng), -1060);  // subnormal
        } else if (kind == 2) {
          x = std::ldexp(unit(rng), static_cast<int>(rng() % 2000) - 1000);
        } else {
          x = unit(rng) * 100.0;
        }
      }
      vectors.emplace_back(std::move(w));
    }
    const SemanticSpace space(Basis(basis), words, vectors);
    const fs::path path = dir / fmt::format("space_{}.tsv", dim);
    save_space(space, path);
    if (!bitwise_equal(load_space(path), space)) {
      problems.push_back(fmt::format("dimension {} not identical", dim));
    }
    ++spaces;
  }
  const fs::path fixture_path = dir / "fixture.tsv";
  save_space(fixture().space, fixture_path);
  if (!bitwise_equal(load_space(fixture_path), fixture().space)) {
    problems.push_back("fixture space not identical");
  }
  ++spaces;
  fs::remove_all(dir);
  std::string detail = fmt::format("{} spaces up to dimension 2000", spaces);
  for (const auto& p : problems) detail += "; " + p;
  return problems.empty() ? pass(detail) : fail(detail);
}

// Full-scale reproduction. Runs only when TENSORVERB_FULL_DATA names a
// directory holding corpus.txt, triples.tsv and dataset.tsv.
Result full_scale() {
  const char* dir_env = std::getenv("TENSORVERB_FULL_DATA");
  if (dir_env == nullptr || *dir_env == '\0') {
    return {Outcome::kSkipped, "TENSORVERB_FULL_DATA not set; corpus not supplied"};
  }
  const fs::path dir = dir_env;
  const Corpus corpus = read_corpus(dir / "corpus.txt");
  const Basis basis = select_basis(corpus, 2000, default_stoplist());
  const SemanticSpace space = weight_counts(count_cooccurrence(corpus, basis, {}), basis);
  const auto triples = load_triples(dir / "triples.tsv");
  const auto dataset = parse_dataset(dir / "dataset.tsv");
  const auto models = all_models();
  const auto reports = evaluate(dataset, models, space, &triples);
  std::map<std::string, double> rho;
  for (const auto& r : reports) rho[r.model.id()] = r.rho;

  const std::vector<std::pair<std::string, double>> expected = {
      {"categorical:kron_self", 0.28}, {"categorical:indirect", 0.21},
      {"multiply", 0.17},              {"categorical:zero_diag", 0.17},
      {"baseline", 0.16},              {"categorical:one_diag", 0.08},
      {"add", 0.05}};
  std::vector<std::string> problems;
  for (const auto& [id, value] : expected) {
    if (std::fabs(rho[id] - value) > 0.05) {
      problems.push_back(fmt::format("{} rho {:.4f} vs {:.2f}", id, rho[id], value));
    }
  }
  for (std::size_t k = 0; k + 1 < expected.size(); ++k) {
    const auto& hi = expected[k].first;
    const auto& lo = expected[k + 1].first;
    if (hi == "multiply") continue;  // multiply and 0-diag coincide
    if (!(rho[hi] > rho[lo])) problems.push_back(fmt::format("{} not above {}", hi, lo));
  }
  std::string detail = "ordering and values";
  for (const auto& p : problems) detail += "; " + p;
  return problems.empty() ? pass(detail) : fail(detail);
}

}  // namespace
}  // namespace tensorverb

int main() {
  using namespace tensorverb;
  const std::vector<Criterion> criteria = {
      {"0-diag equals multiplicative", 5.0, zero_diag_equals_multiply},
      {"v⊗v factorization", 5.0, kron_self_factorizes},
      {"tensor algebra identities", 5.0, tensor_algebra},
      {"Spearman oracle", 10.0, spearman_oracle},
      {"baseline invariance", 0.0, baseline_invariance},
      {"end-to-end fixture", 0.0, end_to_end_fixture},
      {"space round trip", 0.0, space_round_trip},
      {"full-scale ranking (optional)", 0.0, full_scale},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Result result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (result.outcome == Outcome::kPass && c.time_limit > 0 && seconds >= c.time_limit) {
      result = fail(fmt::format("{}; exceeded {:.0f} s", result.detail, c.time_limit));
    }
    const char* label = result.outcome == Outcome::kPass   ? "PASS"
                        : result.outcome == Outcome::kFail ? "FAIL"
                                                           : "SKIPPED";
    if (result.outcome == Outcome::kFail) ++failed;
    std::cout << fmt::format("{} {} [{:.3f} s] {}\n", label, c.name, seconds, result.detail);
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
