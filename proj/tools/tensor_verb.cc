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

// tensor-verb: build co-occurrence spaces, encode transitive verbs as
// matrices, and score verb-sense disambiguation data.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "tensorverb/compose.h"
#include "tensorverb/corpus.h"
#include "tensorverb/dataset.h"
#include "tensorverb/decimal.h"
#include "tensorverb/error.h"
#include "tensorverb/evaluate.h"
#include "tensorverb/kernels.h"
#include "tensorverb/report.h"
#include "tensorverb/space.h"
#include "tensorverb/triples.h"
#include "tensorverb/verbs.h"

namespace fs = std::filesystem;
using namespace tensorverb;

namespace {

struct RunConfig {
  std::string corpus_path;
  std::string triples_path;
  std::string dataset_path;
  std::string space_path;
  std::string out_path;
  std::string stoplist_path;
  std::string targets_path;
  std::string json_out;
  std::string cache_dir;
  std::size_t window = 5;
  std::size_t basis_size = 2000;
  bool no_stoplist = false;
  std::vector<std::string> models;
  std::string model;
  std::string matrix_method;
  std::vector<std::string> methods;
  std::vector<std::string> verbs;
  std::string aggregate = "per-judgment";
  std::string oov = "skip";
  std::string weighting = "tokens";
  bool exclude_degenerate = false;
  std::vector<std::string> sentences;
};

void require_file(const std::string& path, std::string_view what) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw Error(ErrorCode::kIo, fmt::format("{} file not found: {}", what, path));
  }
}

TripleWeighting parse_weighting(const std::string& text) {
  if (text == "tokens") return TripleWeighting::kTokens;
  if (text == "types") return TripleWeighting::kTypes;
  throw Error(ErrorCode::kUsage,
              fmt::format("--weighting must be 'tokens' or 'types', got '{}'", text));
}

MatrixMethod require_method(const std::string& text) {
  if (auto method = parse_method(text)) return *method;
  throw Error(ErrorCode::kUsage, fmt::format("unknown matrix method '{}'", text));
}

void apply_thread_limit() {
  const char* env = std::getenv("TENSOR_VERB_THREADS");
  if (env == nullptr || *env == '\0') return;
  const auto threads = parse_integer(env);
  if (!threads || *threads < 0) {
    throw Error(ErrorCode::kUsage,
                fmt::format("TENSOR_VERB_THREADS must be a non-negative integer, "
                            "got '{}'",
                            env));
  }
  set_thread_limit(static_cast<int>(*threads));
}

// ---------------------------------------------------------------------------

int cmd_build_space(const RunConfig& config) {
  require_file(config.corpus_path, "corpus");
  if (!config.stoplist_path.empty()) require_file(config.stoplist_path, "stoplist");
  if (!config.targets_path.empty()) require_file(config.targets_path, "targets");

  const Corpus corpus = read_corpus(config.corpus_path);
  std::unordered_set<std::string> stoplist;
  if (!config.stoplist_path.empty()) {
    stoplist = read_word_list(config.stoplist_path);
  } else if (!config.no_stoplist) {
    stoplist = default_stoplist();
  }
  const Basis basis = select_basis(corpus, config.basis_size, stoplist);
  CountOptions options;
  options.window = config.window;
  if (!config.targets_path.empty()) {
    options.target_filter = read_word_list(config.targets_path);
  }
  const CooccurrenceCounts counts = count_cooccurrence(corpus, basis, options);
  const SemanticSpace space = weight_counts(counts, basis);
  save_space(space, config.out_path);
  fmt::print("dimension\t{}\nvocabulary\t{}\ntokens\t{}\nsentences\t{}\n",
             space.dimension(), space.vocabulary_size(), corpus.num_tokens(),
             corpus.num_sentences());
  if (space.dimension() < config.basis_size) {
    fmt::print(stderr, "warning: only {} basis words qualified (asked for {})\n",
               space.dimension(), config.basis_size);
  }
  return 0;
}

int cmd_build_verbs(const RunConfig& config) {
  require_file(config.space_path, "space");
  if (!config.triples_path.empty()) require_file(config.triples_path, "triples");
  if (!config.dataset_path.empty()) require_file(config.dataset_path, "dataset");

  std::vector<MatrixMethod> methods;
  for (const auto& m : config.methods) methods.push_back(require_method(m));
  const bool needs_triples =
      std::find(methods.begin(), methods.end(), MatrixMethod::kIndirect) !=
      methods.end();
  if (needs_triples && config.triples_path.empty()) {
    throw Error(ErrorCode::kUsage, "the indirect method needs --triples");
  }

  std::set<std::string> verbs(config.verbs.begin(), config.verbs.end());
  if (!config.dataset_path.empty()) {
    for (const auto& e : parse_dataset(config.dataset_path)) {
      verbs.insert(e.verb);
      verbs.insert(e.landmark);
    }
  }
  if (verbs.empty()) {
    throw Error(ErrorCode::kUsage, "give verbs with --verb or --dataset");
  }

  const SemanticSpace space = load_space(config.space_path);
  std::optional<SvoTripleSet> triples;
  if (!config.triples_path.empty()) triples = load_triples(config.triples_path);
  const TripleWeighting weighting = parse_weighting(config.weighting);
  const VerbMatrixStore store(space, triples ? &*triples : nullptr, weighting,
                              config.out_path);
  fs::create_directories(config.out_path);

  for (MatrixMethod method : methods) {
    for (const std::string& verb : verbs) {
      VerbMatrix matrix;
      if (method == MatrixMethod::kIndirect) {
        IndirectBuild build = build_indirect(verb, *triples, space, weighting);
        if (build.skipped_pairs > 0) {
          std::string words;
          for (const auto& w : build.oov_words) words += (words.empty() ? "" : ", ") + w;
          fmt::print(stderr,
                     "warning: {}: skipped {} of {} subject/object pairs "
                     "(out of vocabulary: {})\n",
                     verb, build.skipped_pairs,
                     build.skipped_pairs + build.used_pairs, words);
        }
        matrix = std::move(build.matrix);
      } else {
        matrix = build_verb_matrix(verb, method, space, nullptr);
      }
      const fs::path path = store.cache_path(verb, method);
      save_verb_matrix(matrix, path);
      fmt::print("{}\n", path.string());
    }
  }
  return 0;
}

struct Sentence {
  std::string subject;
  std::string verb;
  std::string object;
};

std::pair<Sentence, Sentence> parse_sentences(const std::vector<std::string>& args) {
  if (args.size() != 7 || args[3] != "/") {
    throw Error(ErrorCode::kUsage,
                "expected two sentences: SUBJ VERB OBJ / SUBJ VERB OBJ");
  }
  return {{args[0], args[1], args[2]}, {args[4], args[5], args[6]}};
}

int cmd_similarity(const RunConfig& config) {
  const auto [first, second] = parse_sentences(config.sentences);
  std::optional<MatrixMethod> method;
  if (!config.matrix_method.empty()) method = require_method(config.matrix_method);
  const ModelSpec model =
      config.model == "categorical"
          ? ModelSpec::make(ModelName::kCategorical, method)
          : ModelSpec::parse(config.model);
  if (method && model.matrix_method() != method) {
    throw Error(ErrorCode::kUsage,
                fmt::format("--matrix-method conflicts with model '{}'", config.model));
  }
  if (!method) method = model.matrix_method();
  const bool indirect = method == MatrixMethod::kIndirect;
  if (indirect && config.triples_path.empty()) {
    throw Error(ErrorCode::kUsage, "the indirect method needs --triples");
  }
  require_file(config.space_path, "space");
  if (indirect) require_file(config.triples_path, "triples");

  const SemanticSpace space = load_space(config.space_path);
  std::optional<SvoTripleSet> triples;
  if (indirect) triples = load_triples(config.triples_path);
  const TripleWeighting weighting = parse_weighting(config.weighting);

  auto meaning = [&](const Sentence& s) {
    switch (model.name()) {
      case ModelName::kBaseline:
        return compose_baseline(space.at(s.verb));
      case ModelName::kAdd:
        return compose_additive(space.at(s.verb), space.at(s.subject),
                                space.at(s.object));
      case ModelName::kMultiply:
        return compose_multiplicative(space.at(s.verb), space.at(s.subject),
                                      space.at(s.object));
      case ModelName::kCategorical:
        break;
    }
    const SemanticVector& subject = space.at(s.subject);
    const SemanticVector& object = space.at(s.object);
    const VerbMatrix verb = build_verb_matrix(
        s.verb, *method, space, triples ? &*triples : nullptr, weighting);
    return compose_categorical(verb, subject, object);
  };
  const Cosine sim = similarity(meaning(first), meaning(second));
  fmt::print("{}\n", format_shortest(sim.value));
  if (sim.degenerate) {
    fmt::print(stderr, "warning: zero-norm sentence meaning; similarity set to 0\n");
  }
  return 0;
}

int cmd_evaluate(const RunConfig& config) {
  std::vector<ModelSpec> models;
  if (config.models.empty()) {
    models = all_models();
  } else {
    for (const auto& m : config.models) models.push_back(ModelSpec::parse(m));
  }
  const bool needs_triples = std::any_of(models.begin(), models.end(), [](const ModelSpec& m) {
    return m.matrix_method() == MatrixMethod::kIndirect;
  });
  if (needs_triples && config.triples_path.empty()) {
    throw Error(ErrorCode::kUsage, "the indirect model needs --triples");
  }
  EvalOptions options;
  if (config.aggregate == "per-judgment") {
    options.aggregate = Aggregate::kPerJudgment;
  } else if (config.aggregate == "mean-per-pair") {
    options.aggregate = Aggregate::kMeanPerPair;
  } else {
    throw Error(ErrorCode::kUsage,
                "--aggregate must be 'per-judgment' or 'mean-per-pair'");
  }
  if (config.oov == "skip") {
    options.oov = OovPolicy::kSkip;
  } else if (config.oov == "zero") {
    options.oov = OovPolicy::kZeroVector;
  } else {
    throw Error(ErrorCode::kUsage, "--oov must be 'skip' or 'zero'");
  }
  options.exclude_degenerate = config.exclude_degenerate;
  options.weighting = parse_weighting(config.weighting);
  options.cache_dir = config.cache_dir;

  require_file(config.space_path, "space");
  require_file(config.dataset_path, "dataset");
  if (needs_triples) require_file(config.triples_path, "triples");

  const auto dataset = parse_dataset(config.dataset_path);
  const SemanticSpace space = load_space(config.space_path);
  std::optional<SvoTripleSet> triples;
  if (!config.triples_path.empty()) {
    require_file(config.triples_path, "triples");
    triples = load_triples(config.triples_path);
  }

  const auto reports =
      evaluate(dataset, models, space, triples ? &*triples : nullptr, options);
  const auto upper = upper_bound(dataset);
  std::cout << format_table(reports, upper);
  std::cout.flush();
  if (!config.json_out.empty()) {
    std::ofstream out(config.json_out, std::ios::binary | std::ios::trunc);
    out << format_json(reports, upper, dataset);
    if (!out) {
      throw Error(ErrorCode::kIo, fmt::format("cannot write {}", config.json_out));
    }
  }
  return 0;
}

}  // namespace

const CLI::Validator kPositive(
    [](std::string& text) -> std::string {
      const auto value = parse_integer(text);
      if (!value || *value < 1) return "must be a positive integer, got " + text;
      return {};
    },
    "POSITIVE");

int main(int argc, char** argv) {
  CLI::App app{"Transitive-verb matrices and compositional sentence similarity"};
  app.require_subcommand(1);
  RunConfig config;

  auto* build_space = app.add_subcommand("build-space", "Build a semantic space from a corpus");
  build_space->add_option("--corpus", config.corpus_path, "Lemmatized corpus, one sentence per line")->required();
  build_space->add_option("--out", config.out_path, "Space file to write")->required();
  build_space->add_option("--basis-size", config.basis_size, "Number of basis context words")
      ->check(kPositive)->capture_default_str();
  build_space->add_option("--window", config.window, "Context window each side of the target")
      ->check(kPositive)->capture_default_str();
  build_space->add_option("--stoplist", config.stoplist_path, "Words excluded from the basis");
  build_space->add_flag("--no-stoplist", config.no_stoplist, "Do not exclude function words");
  build_space->add_option("--targets", config.targets_path, "Only build vectors for these words");

  auto* build_verbs = app.add_subcommand("build-verbs", "Build and cache verb matrices");
  build_verbs->add_option("--space", config.space_path)->required();
  build_verbs->add_option("--triples", config.triples_path);
  build_verbs->add_option("--method", config.methods,
                          "indirect, zero-diag, one-diag or kron-self (repeatable)")->required();
  build_verbs->add_option("--verb", config.verbs, "Verb to build (repeatable)");
  build_verbs->add_option("--dataset", config.dataset_path, "Build every verb and landmark of a dataset");
  build_verbs->add_option("--out-dir", config.out_path, "Cache directory")->required();
  build_verbs->add_option("--weighting", config.weighting, "Triple weighting: tokens or types")
      ->capture_default_str();

  auto* sim = app.add_subcommand("similarity", "Similarity of two transitive sentences");
  sim->add_option("--space", config.space_path)->required();
  sim->add_option("--triples", config.triples_path);
  sim->add_option("--model", config.model, "baseline, add, multiply, categorical or categorical:<method>")->required();
  sim->add_option("--matrix-method", config.matrix_method, "Verb matrix method for the categorical model");
  sim->add_option("--weighting", config.weighting)->capture_default_str();
  sim->add_option("sentences", config.sentences, "SUBJ VERB OBJ / SUBJ VERB OBJ")->required();

  auto* eval = app.add_subcommand("evaluate", "Score a disambiguation dataset");
  eval->add_option("--space", config.space_path)->required();
  eval->add_option("--dataset", config.dataset_path)->required();
  eval->add_option("--triples", config.triples_path);
  eval->add_option("--model", config.models,
                   "baseline, add, multiply or categorical:<method> (repeatable; default all)");
  eval->add_option("--aggregate", config.aggregate, "per-judgment or mean-per-pair")->capture_default_str();
  eval->add_flag("--exclude-degenerate", config.exclude_degenerate, "Drop zero-norm scores");
  eval->add_option("--oov", config.oov, "skip or zero")->capture_default_str();
  eval->add_option("--weighting", config.weighting)->capture_default_str();
  eval->add_option("--json", config.json_out, "Write the full report as JSON");
  eval->add_option("--cache-dir", config.cache_dir, "Verb matrix cache directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    fmt::print(stderr, "E_USAGE: {}\n", e.what());
    return 2;
  }

  try {
    apply_thread_limit();
    if (*build_space) return cmd_build_space(config);
    if (*build_verbs) return cmd_build_verbs(config);
    if (*sim) return cmd_similarity(config);
    if (*eval) return cmd_evaluate(config);
  } catch (const Error& e) {
    fmt::print(stderr, "{}: {}\n", error_prefix(e.code()), e.what());
    return exit_status(e.code());
  } catch (const std::exception& e) {
    fmt::print(stderr, "E_IO: {}\n", e.what());
    return 2;
  }
  return 2;
}
