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

#ifndef TENSORVERB_VERBS_H_
#define TENSORVERB_VERBS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tensorverb/space.h"
#include "tensorverb/tensor.h"
#include "tensorverb/triples.h"

namespace tensorverb {

enum class MatrixMethod { kIndirect, kZeroDiag, kOneDiag, kKronSelf };

// Canonical names: "indirect", "zero_diag", "one_diag", "kron_self".
std::string_view method_name(MatrixMethod method);
// Also accepts hyphenated forms and "0-diag", "1-diag", "vv".
std::optional<MatrixMethod> parse_method(std::string_view name);

struct VerbMatrix {
  std::string verb;
  MatrixMethod method = MatrixMethod::kIndirect;
  DenseMatrix matrix;
};

enum class TripleWeighting {
  kTokens,  // each pair weighted by its corpus count
  kTypes,   // each distinct pair counted once
};

struct IndirectBuild {
  VerbMatrix matrix;
  std::size_t used_pairs = 0;
  std::size_t skipped_pairs = 0;
  // Distinct subjects/objects that had no vector, in first-seen order.
  std::vector<std::string> oov_words;
};

// Sum over the verb's (s, o, n) observations of n * kron(s, o). Pairs with an
// out-of-vocabulary argument are skipped and reported. Throws
// kNoObservations when the verb is absent or every pair was skipped.
IndirectBuild build_indirect(std::string_view verb, const SvoTripleSet& triples,
                             const SemanticSpace& space,
                             TripleWeighting weighting = TripleWeighting::kTokens);

// Verb vector on the diagonal, 0 elsewhere. Throws kOov.
VerbMatrix build_zero_diag(std::string_view verb, const SemanticSpace& space);
// Verb vector on the diagonal, 1 elsewhere. Throws kOov.
VerbMatrix build_one_diag(std::string_view verb, const SemanticSpace& space);
// kron(v, v). Throws kOov.
VerbMatrix build_kron_self(std::string_view verb, const SemanticSpace& space);

// Vector-level encoders shared by the builders above.
DenseMatrix diagonal_matrix(const SemanticVector& verb, double padding);
// Encodes a lexical verb vector by one of the three vector-based methods.
// Throws kUsage for kIndirect, which is not derived from the verb vector.
DenseMatrix encode_verb_vector(const SemanticVector& verb, MatrixMethod method);

// Dispatches on method. `triples` may be null unless method is kIndirect.
VerbMatrix build_verb_matrix(std::string_view verb, MatrixMethod method,
                             const SemanticSpace& space,
                             const SvoTripleSet* triples,
                             TripleWeighting weighting = TripleWeighting::kTokens);

void save_verb_matrix(const VerbMatrix& matrix, const std::filesystem::path& path);
VerbMatrix load_verb_matrix(const std::filesystem::path& path);

}  // namespace tensorverb

#endif  // TENSORVERB_VERBS_H_
