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

#include "tensorverb/evaluate.h"

#include <algorithm>
#include <set>
#include <tuple>

#include <fmt/core.h>

#include "tensorverb/stats.h"

namespace tensorverb {

// ---------------------------------------------------------------------------
// VerbMatrixStore

VerbMatrixStore::VerbMatrixStore(const SemanticSpace& space,
                                 const SvoTripleSet* triples,
                                 TripleWeighting weighting,
                                 std::filesystem::path cache_dir)
    : space_(space),
      triples_(triples),
      weighting_(weighting),
      cache_dir_(std::move(cache_dir)) {
  if (!cache_dir_.empty()) fingerprint_ = fingerprint(space_);
}

std::filesystem::path VerbMatrixStore::cache_path(const std::string& verb,
                                                  MatrixMethod method) const {
  return cache_dir_ / fmt::format("{}.{}.{:016x}.tsv", verb, method_name(method),
                                  fingerprint_);
}

std::shared_ptr<const VerbMatrix> VerbMatrixStore::get(const std::string& verb,
                                                       MatrixMethod method) {
  const auto key = std::make_pair(verb, method);
  {
    std::lock_guard lock(mutex_);
    auto it = slots_.find(key);
    if (it != slots_.end()) {
      if (it->second.error) throw *it->second.error;
      return it->second.matrix;
    }
  }

  Slot slot;
  try {
    const std::filesystem::path cached =
        cache_dir_.empty() ? std::filesystem::path() : cache_path(verb, method);
    if (!cached.empty() && std::filesystem::exists(cached)) {
      VerbMatrix loaded = load_verb_matrix(cached);
      if (loaded.verb != verb || loaded.method != method ||
          loaded.matrix.rows() != space_.dimension()) {
        throw Error(ErrorCode::kParse,
                    fmt::format("{} does not match its cache key", cached.string()));
      }
      slot.matrix = std::make_shared<const VerbMatrix>(std::move(loaded));
    } else {
      slot.matrix = std::make_shared<const VerbMatrix>(
          build_verb_matrix(verb, method, space_, triples_, weighting_));
      if (!cached.empty()) {
        std::filesystem::create_directories(cache_dir_);
        save_verb_matrix(*slot.matrix, cached);
      }
    }
  } catch (const Error& e) {
    slot.error = e;
  }

  std::lock_guard lock(mutex_);
  auto [it, inserted] = slots_.emplace(key, std::move(slot));
  if (it->second.error) throw *it->second.error;
  return it->second.matrix;
}

void VerbMatrixStore::clear() {
  std::lock_guard lock(mutex_);
  slots_.clear();
}

// ---------------------------------------------------------------------------
// Scoring

namespace {

SemanticVector lookup(const SemanticSpace& space, const std::string& word,
                      OovPolicy oov) {
  if (const SemanticVector* v = space.find(word)) return *v;
  if (oov == OovPolicy::kZeroVector) return SemanticVector(space.dimension());
  throw Error(ErrorCode::kOov, fmt::format("'{}' is not in the space", word));
}

std::shared_ptr<const VerbMatrix> verb_matrix(const std::string& verb,
                                              MatrixMethod method,
                                              const SemanticSpace& space,
                                              VerbMatrixStore& store,
                                              OovPolicy oov) {
  if (method != MatrixMethod::kIndirect && oov == OovPolicy::kZeroVector &&
      space.find(verb) == nullptr) {
    return std::make_shared<const VerbMatrix>(VerbMatrix{
        verb, method, encode_verb_vector(SemanticVector(space.dimension()), method)});
  }
  return store.get(verb, method);
}

}  // namespace

PairScore score_entry(const DatasetEntry& entry, const ModelSpec& model,
                      const SemanticSpace& space, VerbMatrixStore& store,
                      OovPolicy oov) {
  Cosine sim;
  switch (model.name()) {
    case ModelName::kBaseline: {
      const auto verb = lookup(space, entry.verb, oov);
      const auto landmark = lookup(space, entry.landmark, oov);
      sim = similarity(compose_baseline(verb), compose_baseline(landmark));
      break;
    }
    case ModelName::kAdd:
    case ModelName::kMultiply: {
      const auto verb = lookup(space, entry.verb, oov);
      const auto landmark = lookup(space, entry.landmark, oov);
      const auto subject = lookup(space, entry.subject, oov);
      const auto object = lookup(space, entry.object, oov);
      const auto compose = model.name() == ModelName::kAdd
                               ? &compose_additive
                               : &compose_multiplicative;
      sim = similarity(compose(verb, subject, object),
                       compose(landmark, subject, object));
      break;
    }
    case ModelName::kCategorical: {
      const MatrixMethod method = *model.matrix_method();
      const auto subject = lookup(space, entry.subject, oov);
      const auto object = lookup(space, entry.object, oov);
      const auto verb = verb_matrix(entry.verb, method, space, store, oov);
      const auto landmark = verb_matrix(entry.landmark, method, space, store, oov);
      sim = similarity(compose_categorical(*verb, subject, object),
                       compose_categorical(*landmark, subject, object));
      break;
    }
  }
  return {0, sim.value, sim.degenerate};
}

PairScore score_entry(const DatasetEntry& entry, const ModelSpec& model,
                      const SemanticSpace& space, const SvoTripleSet* triples) {
  VerbMatrixStore store(space, triples);
  return score_entry(entry, model, space, store);
}

BandMeans high_low_means(std::span<const PairScore> scores,
                         std::span<const DatasetEntry> dataset) {
  double high_sum = 0.0;
  double low_sum = 0.0;
  std::size_t high_n = 0;
  std::size_t low_n = 0;
  for (const PairScore& score : scores) {
    if (dataset[score.entry].band == Band::kHigh) {
      high_sum += score.model_similarity;
      ++high_n;
    } else {
      low_sum += score.model_similarity;
      ++low_n;
    }
  }
  BandMeans means;
  if (high_n > 0) means.high = high_sum / static_cast<double>(high_n);
  if (low_n > 0) means.low = low_sum / static_cast<double>(low_n);
  return means;
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

using PairKey = std::tuple<std::string, std::string, std::string, std::string>;

PairKey pair_key(const DatasetEntry& e) {
  return {e.verb, e.subject, e.object, e.landmark};
}

// Representative score and mean human score per distinct pair, in order of
// first appearance.
void aggregate_per_pair(std::span<const PairScore> scores,
                        std::span<const DatasetEntry> dataset,
                        std::vector<PairScore>& representatives,
                        std::vector<double>& human_means) {
  std::map<PairKey, std::size_t> slot_of;
  std::vector<double> sums;
  std::vector<std::size_t> counts;
  for (const PairScore& score : scores) {
    const DatasetEntry& entry = dataset[score.entry];
    auto [it, inserted] = slot_of.emplace(pair_key(entry), representatives.size());
    if (inserted) {
      representatives.push_back(score);
      sums.push_back(0.0);
      counts.push_back(0);
    }
    sums[it->second] += entry.human_score;
    ++counts[it->second];
  }
  human_means.resize(sums.size());
  for (std::size_t i = 0; i < sums.size(); ++i) {
    human_means[i] = sums[i] / static_cast<double>(counts[i]);
  }
}

EvaluationReport evaluate_model(std::span<const DatasetEntry> dataset,
                                const ModelSpec& model,
                                const SemanticSpace& space,
                                VerbMatrixStore& store,
                                const EvalOptions& options) {
  const auto n = static_cast<std::ptrdiff_t>(dataset.size());

  if (model.name() == ModelName::kCategorical) {
    std::set<std::string> verbs;
    for (const auto& e : dataset) {
      verbs.insert(e.verb);
      verbs.insert(e.landmark);
    }
    const std::vector<std::string> todo(verbs.begin(), verbs.end());
    const MatrixMethod method = *model.matrix_method();
    const auto count = static_cast<std::ptrdiff_t>(todo.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      try {
        store.get(todo[static_cast<std::size_t>(i)], method);
      } catch (const Error&) {
        // Memoized; surfaces as a skip reason when scoring.
      }
    }
  }

  std::vector<std::optional<PairScore>> results(dataset.size());
  std::vector<std::string> failures(dataset.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      PairScore score = score_entry(dataset[idx], model, space, store, options.oov);
      score.entry = idx;
      results[idx] = score;
    } catch (const std::exception& e) {
      failures[idx] = e.what();
    }
  }

  EvaluationReport report;
  report.model = model;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (!results[i]) {
      report.skipped.push_back({i, failures[i]});
      continue;
    }
    if (results[i]->degenerate) {
      ++report.n_degenerate;
      if (options.exclude_degenerate) {
        report.skipped.push_back({i, "degenerate zero-norm similarity excluded"});
        continue;
      }
    }
    report.scores.push_back(*results[i]);
  }
  report.n_scored = report.scores.size();
  report.n_skipped = report.skipped.size();
  if (report.scores.empty()) {
    throw Error(ErrorCode::kDegenerate,
                fmt::format("model {}: every entry was skipped", model.id()));
  }

  std::vector<double> model_scores;
  std::vector<double> human_scores;
  if (options.aggregate == Aggregate::kPerJudgment) {
    for (const PairScore& s : report.scores) {
      model_scores.push_back(s.model_similarity);
      human_scores.push_back(dataset[s.entry].human_score);
    }
    report.means = high_low_means(report.scores, dataset);
  } else {
    std::vector<PairScore> representatives;
    aggregate_per_pair(report.scores, dataset, representatives, human_scores);
    for (const PairScore& s : representatives) {
      model_scores.push_back(s.model_similarity);
    }
    report.means = high_low_means(representatives, dataset);
  }
  report.n_observations = model_scores.size();
  try {
    report.rho = spearman_rho(model_scores, human_scores);
  } catch (const Error& e) {
    throw Error(e.code(), fmt::format("model {}: {}", model.id(), e.what()));
  }
  return report;
}

}  // namespace

std::vector<EvaluationReport> evaluate(std::span<const DatasetEntry> dataset,
                                       std::span<const ModelSpec> models,
                                       const SemanticSpace& space,
                                       const SvoTripleSet* triples,
                                       const EvalOptions& options) {
  if (dataset.empty()) {
    throw Error(ErrorCode::kDegenerate, "the dataset has no entries");
  }
  const std::set<ModelSpec> ordered(models.begin(), models.end());
  VerbMatrixStore store(space, triples, options.weighting, options.cache_dir);
  std::vector<EvaluationReport> reports;
  for (const ModelSpec& model : ordered) {
    reports.push_back(evaluate_model(dataset, model, space, store, options));
    store.clear();
  }
  return reports;
}

std::optional<UpperBound> upper_bound(std::span<const DatasetEntry> dataset) {
  // pair -> annotator -> (sum, count)
  std::map<PairKey, std::map<std::string, std::pair<double, std::size_t>>> judged;
  for (const auto& e : dataset) {
    auto& cell = judged[pair_key(e)][e.annotator];
    cell.first += e.human_score;
    ++cell.second;
  }
  const bool shared = std::any_of(judged.begin(), judged.end(),
                                  [](const auto& p) { return p.second.size() >= 2; });
  if (!shared) return std::nullopt;

  std::set<std::string> annotators;
  for (const auto& e : dataset) annotators.insert(e.annotator);

  double rho_sum = 0.0;
  std::size_t rho_n = 0;
  for (const std::string& a : annotators) {
    std::vector<double> own;
    std::vector<double> others;
    for (const auto& [key, by_annotator] : judged) {
      auto mine = by_annotator.find(a);
      if (mine == by_annotator.end() || by_annotator.size() < 2) continue;
      double sum = 0.0;
      std::size_t count = 0;
      for (const auto& [who, cell] : by_annotator) {
        if (who == a) continue;
        sum += cell.first / static_cast<double>(cell.second);
        ++count;
      }
      own.push_back(mine->second.first / static_cast<double>(mine->second.second));
      others.push_back(sum / static_cast<double>(count));
    }
    if (own.size() < 2) continue;
    try {
      rho_sum += spearman_rho(own, others);
      ++rho_n;
    } catch (const Error&) {
      // Constant judgments carry no rank information.
    }
  }
  if (rho_n == 0) return std::nullopt;

  UpperBound bound;
  double high_sum = 0.0;
  double low_sum = 0.0;
  std::size_t high_n = 0;
  std::size_t low_n = 0;
  for (const auto& e : dataset) {
    if (e.band == Band::kHigh) {
      high_sum += e.human_score;
      ++high_n;
    } else {
      low_sum += e.human_score;
      ++low_n;
    }
  }
  if (high_n > 0) bound.means.high = high_sum / static_cast<double>(high_n);
  if (low_n > 0) bound.means.low = low_sum / static_cast<double>(low_n);
  bound.rho = rho_sum / static_cast<double>(rho_n);
  bound.annotators = rho_n;
  return bound;
}

std::vector<ModelSpec> all_models() {
  return {ModelSpec::baseline(),
          ModelSpec::add(),
          ModelSpec::multiply(),
          ModelSpec::categorical(MatrixMethod::kIndirect),
          ModelSpec::categorical(MatrixMethod::kZeroDiag),
          ModelSpec::categorical(MatrixMethod::kOneDiag),
          ModelSpec::categorical(MatrixMethod::kKronSelf)};
}

}  // namespace tensorverb
