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

#ifndef TENSORVERB_EVALUATE_H_
#define TENSORVERB_EVALUATE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "tensorverb/compose.h"
#include "tensorverb/error.h"
#include "tensorverb/dataset.h"
#include "tensorverb/space.h"
#include "tensorverb/triples.h"
#include "tensorverb/verbs.h"

namespace tensorverb {

enum class Aggregate {
  kPerJudgment,  // every annotator row is one observation
  kMeanPerPair,  // human scores averaged per distinct sentence pair
};

enum class OovPolicy {
  kSkip,        // entry is skipped with a reason
  kZeroVector,  // missing word acts as a zero vector (degenerate score)
};

struct EvalOptions {
  Aggregate aggregate = Aggregate::kPerJudgment;
  OovPolicy oov = OovPolicy::kSkip;
  bool exclude_degenerate = false;
  TripleWeighting weighting = TripleWeighting::kTokens;
  // Directory of cached verb-matrix files; empty disables the disk cache.
  std::filesystem::path cache_dir;
};

struct PairScore {
  std::size_t entry = 0;  // index into the dataset
  double model_similarity = 0.0;
  bool degenerate = false;
};

struct SkippedEntry {
  std::size_t entry = 0;
  std::string reason;
};

// Builds and memoizes verb matrices per (verb, method). Safe for concurrent
// get() calls. With a cache directory set, matrices are read from and written
// to "<dir>/<verb>.<method>.<space fingerprint>.tsv".
class VerbMatrixStore {
 public:
  VerbMatrixStore(const SemanticSpace& space, const SvoTripleSet* triples,
                  TripleWeighting weighting = TripleWeighting::kTokens,
                  std::filesystem::path cache_dir = {});

  // Throws the construction error (kOov, kNoObservations) on failure; the
  // failure is memoized too.
  std::shared_ptr<const VerbMatrix> get(const std::string& verb,
                                        MatrixMethod method);
  void clear();

  std::filesystem::path cache_path(const std::string& verb,
                                   MatrixMethod method) const;

 private:
  struct Slot {
    std::shared_ptr<const VerbMatrix> matrix;
    std::optional<Error> error;
  };

  const SemanticSpace& space_;
  const SvoTripleSet* triples_;
  TripleWeighting weighting_;
  std::filesystem::path cache_dir_;
  std::uint64_t fingerprint_ = 0;
  std::mutex mutex_;
  std::map<std::pair<std::string, MatrixMethod>, Slot> slots_;
};

// Composes "subject verb object" and "subject landmark object" under the
// model and returns their similarity. Throws on OOV or matrix failure.
PairScore score_entry(const DatasetEntry& entry, const ModelSpec& model,
                      const SemanticSpace& space, VerbMatrixStore& store,
                      OovPolicy oov = OovPolicy::kSkip);
PairScore score_entry(const DatasetEntry& entry, const ModelSpec& model,
                      const SemanticSpace& space, const SvoTripleSet* triples);

struct BandMeans {
  std::optional<double> high;
  std::optional<double> low;
};

BandMeans high_low_means(std::span<const PairScore> scores,
                         std::span<const DatasetEntry> dataset);

struct EvaluationReport {
  ModelSpec model = ModelSpec::baseline();
  double rho = 0.0;
  BandMeans means;
  std::size_t n_scored = 0;
  std::size_t n_skipped = 0;
  std::size_t n_degenerate = 0;  // included or excluded, per options
  std::size_t n_observations = 0;  // points entering rho
  std::vector<PairScore> scores;
  std::vector<SkippedEntry> skipped;
};

// One report per distinct model, ordered as ModelSpec's ordering. Throws
// kDegenerate when every entry is skipped for a model or its rho is
// undefined.
std::vector<EvaluationReport> evaluate(std::span<const DatasetEntry> dataset,
                                       std::span<const ModelSpec> models,
                                       const SemanticSpace& space,
                                       const SvoTripleSet* triples,
                                       const EvalOptions& options = {});

// Human agreement row: means of human scores per band and the average over
// annotators of rho(annotator, mean of the other annotators) on shared
// pairs. Present only when some pair was judged by two or more annotators.
struct UpperBound {
  BandMeans means;
  double rho = 0.0;
  std::size_t annotators = 0;  // annotators that entered the average
};
std::optional<UpperBound> upper_bound(std::span<const DatasetEntry> dataset);

// The seven rows of the results table.
std::vector<ModelSpec> all_models();

}  // namespace tensorverb

#endif  // TENSORVERB_EVALUATE_H_
