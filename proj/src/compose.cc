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

#include "tensorverb/compose.h"

#include <fmt/core.h>

#include "tensorverb/error.h"

namespace tensorverb {

ModelSpec ModelSpec::make(ModelName name, std::optional<MatrixMethod> method) {
  if ((name == ModelName::kCategorical) != method.has_value()) {
    throw Error(ErrorCode::kUsage,
                name == ModelName::kCategorical
                    ? "the categorical model needs a matrix method"
                    : "a matrix method is only valid for the categorical model");
  }
  return ModelSpec(name, method);
}

ModelSpec ModelSpec::parse(std::string_view text) {
  if (text == "baseline") return baseline();
  if (text == "add" || text == "additive") return add();
  if (text == "multiply" || text == "multiplicative") return multiply();
  if (text == "categorical") {
    throw Error(ErrorCode::kUsage,
                "the categorical model needs a matrix method "
                "(categorical:<method>)");
  }
  std::string_view method_text = text;
  if (text.starts_with("categorical:")) method_text.remove_prefix(12);
  if (auto method = parse_method(method_text)) return categorical(*method);
  throw Error(ErrorCode::kUsage, fmt::format("unknown model '{}'", text));
}

std::string ModelSpec::id() const {
  switch (name_) {
    case ModelName::kBaseline:
      return "baseline";
    case ModelName::kAdd:
      return "add";
    case ModelName::kMultiply:
      return "multiply";
    case ModelName::kCategorical:
      return fmt::format("categorical:{}", method_name(*method_));
  }
  return {};
}

std::string ModelSpec::label() const {
  switch (name_) {
    case ModelName::kBaseline:
      return "Baseline";
    case ModelName::kAdd:
      return "Add";
    case ModelName::kMultiply:
      return "Multiply";
    case ModelName::kCategorical:
      break;
  }
  switch (*method_) {
    case MatrixMethod::kIndirect:
      return "Indirect matrix";
    case MatrixMethod::kZeroDiag:
      return "0-diag matrix";
    case MatrixMethod::kOneDiag:
      return "1-diag matrix";
    case MatrixMethod::kKronSelf:
      return "v⊗v matrix";
  }
  return {};
}

SentenceMeaning compose_categorical(const DenseMatrix& verb,
                                    const SemanticVector& subject,
                                    const SemanticVector& object) {
  if (verb.rows() != subject.size() || verb.cols() != object.size()) {
    throw Error(ErrorCode::kShape,
                fmt::format("verb matrix is {}x{} but subject/object have "
                            "lengths {}/{}",
                            verb.rows(), verb.cols(), subject.size(),
                            object.size()));
  }
  return SentenceMeaning::matrix(hadamard(verb, kron(subject, object)));
}

SentenceMeaning compose_additive(const SemanticVector& verb,
                                 const SemanticVector& subject,
                                 const SemanticVector& object) {
  return SentenceMeaning::vector(add(add(subject, verb), object));
}

SentenceMeaning compose_multiplicative(const SemanticVector& verb,
                                       const SemanticVector& subject,
                                       const SemanticVector& object) {
  return SentenceMeaning::vector(hadamard(hadamard(subject, verb), object));
}

SentenceMeaning compose_baseline(const SemanticVector& verb) {
  return SentenceMeaning::verb_only(verb);
}

Cosine similarity(const SentenceMeaning& a, const SentenceMeaning& b) {
  if (a.kind() != b.kind()) {
    throw Error(ErrorCode::kIncomparable,
                "cannot compare sentence meanings of different kinds");
  }
  if (a.kind() == MeaningKind::kMatrix) return cosine(a.as_matrix(), b.as_matrix());
  return cosine(a.as_vector(), b.as_vector());
}

}  // namespace tensorverb
