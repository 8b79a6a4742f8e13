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

#ifndef TENSORVERB_COMPOSE_H_
#define TENSORVERB_COMPOSE_H_

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "tensorverb/tensor.h"
#include "tensorverb/verbs.h"

namespace tensorverb {

enum class MeaningKind { kMatrix, kVector, kVerbOnly };

class SentenceMeaning {
 public:
  static SentenceMeaning matrix(DenseMatrix m) {
    return SentenceMeaning(MeaningKind::kMatrix, std::move(m));
  }
  static SentenceMeaning vector(SemanticVector v) {
    return SentenceMeaning(MeaningKind::kVector, std::move(v));
  }
  static SentenceMeaning verb_only(SemanticVector v) {
    return SentenceMeaning(MeaningKind::kVerbOnly, std::move(v));
  }

  MeaningKind kind() const { return kind_; }
  const DenseMatrix& as_matrix() const { return std::get<DenseMatrix>(payload_); }
  const SemanticVector& as_vector() const {
    return std::get<SemanticVector>(payload_);
  }

 private:
  SentenceMeaning(MeaningKind kind, std::variant<DenseMatrix, SemanticVector> p)
      : kind_(kind), payload_(std::move(p)) {}

  MeaningKind kind_;
  std::variant<DenseMatrix, SemanticVector> payload_;
};

enum class ModelName { kBaseline, kAdd, kMultiply, kCategorical };

// A composition model. The matrix method is present exactly when the model
// is categorical. Ordering follows the row order of the results table.
class ModelSpec {
 public:
  static ModelSpec baseline() { return ModelSpec(ModelName::kBaseline, {}); }
  static ModelSpec add() { return ModelSpec(ModelName::kAdd, {}); }
  static ModelSpec multiply() { return ModelSpec(ModelName::kMultiply, {}); }
  static ModelSpec categorical(MatrixMethod method) {
    return ModelSpec(ModelName::kCategorical, method);
  }
  // Throws kUsage when the method's presence does not match the name.
  static ModelSpec make(ModelName name, std::optional<MatrixMethod> method);
  // "baseline", "add", "multiply", or "categorical:<method>".
  static ModelSpec parse(std::string_view text);

  ModelName name() const { return name_; }
  const std::optional<MatrixMethod>& matrix_method() const { return method_; }

  // Stable identifier, e.g. "categorical:kron_self".
  std::string id() const;
  // Table row label, e.g. "v⊗v matrix".
  std::string label() const;

  friend auto operator<=>(const ModelSpec&, const ModelSpec&) = default;

 private:
  ModelSpec(ModelName name, std::optional<MatrixMethod> method)
      : name_(name), method_(method) {}

  ModelName name_;
  std::optional<MatrixMethod> method_;
};

// verb ⊙ (sub ⊗ obj). Throws kShape on dimension mismatch.
SentenceMeaning compose_categorical(const DenseMatrix& verb,
                                    const SemanticVector& subject,
                                    const SemanticVector& object);
inline SentenceMeaning compose_categorical(const VerbMatrix& verb,
                                           const SemanticVector& subject,
                                           const SemanticVector& object) {
  return compose_categorical(verb.matrix, subject, object);
}
SentenceMeaning compose_additive(const SemanticVector& verb,
                                 const SemanticVector& subject,
                                 const SemanticVector& object);
SentenceMeaning compose_multiplicative(const SemanticVector& verb,
                                       const SemanticVector& subject,
                                       const SemanticVector& object);
SentenceMeaning compose_baseline(const SemanticVector& verb);

// Frobenius cosine for matrix meanings, vector cosine otherwise. Throws
// kIncomparable when the kinds differ.
Cosine similarity(const SentenceMeaning& a, const SentenceMeaning& b);

}  // namespace tensorverb

#endif  // TENSORVERB_COMPOSE_H_
