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

#include "tensorverb/verbs.h"

#include <fstream>
#include <iterator>
#include <unordered_set>

#include <fmt/core.h>

#include "tensorverb/decimal.h"
#include "tensorverb/error.h"
#include "tensorverb/kernels.h"

namespace tensorverb {

std::string_view method_name(MatrixMethod method) {
  switch (method) {
    case MatrixMethod::kIndirect:
      return "indirect";
    case MatrixMethod::kZeroDiag:
      return "zero_diag";
    case MatrixMethod::kOneDiag:
      return "one_diag";
    case MatrixMethod::kKronSelf:
      return "kron_self";
  }
  return "indirect";
}

std::optional<MatrixMethod> parse_method(std::string_view name) {
  if (name == "indirect") return MatrixMethod::kIndirect;
  if (name == "zero_diag" || name == "zero-diag" || name == "0-diag") {
    return MatrixMethod::kZeroDiag;
  }
  if (name == "one_diag" || name == "one-diag" || name == "1-diag") {
    return MatrixMethod::kOneDiag;
  }
  if (name == "kron_self" || name == "kron-self" || name == "vv") {
    return MatrixMethod::kKronSelf;
  }
  return std::nullopt;
}

IndirectBuild build_indirect(std::string_view verb, const SvoTripleSet& triples,
                             const SemanticSpace& space,
                             TripleWeighting weighting) {
  const auto* observations = triples.find(verb);
  if (observations == nullptr || observations->empty()) {
    throw Error(ErrorCode::kNoObservations,
                fmt::format("no subject/object observations for verb '{}'", verb));
  }
  const std::size_t r = space.dimension();
  std::vector<double> sum(r * r, 0.0);
  IndirectBuild build;
  std::unordered_set<std::string> reported;
  auto note_oov = [&](const std::string& word) {
    if (reported.insert(word).second) build.oov_words.push_back(word);
  };
  for (const auto& obs : *observations) {
    const SemanticVector* subject = space.find(obs.subject);
    const SemanticVector* object = space.find(obs.object);
    if (subject == nullptr || object == nullptr) {
      if (subject == nullptr) note_oov(obs.subject);
      if (object == nullptr) note_oov(obs.object);
      ++build.skipped_pairs;
      continue;
    }
    const double weight = weighting == TripleWeighting::kTokens
                              ? static_cast<double>(obs.count)
                              : 1.0;
    omp::accumulate_outer(weight, subject->weights(), object->weights(), sum);
    ++build.used_pairs;
  }
  if (build.used_pairs == 0) {
    throw Error(ErrorCode::kNoObservations,
                fmt::format("every subject/object pair of verb '{}' is out of "
                            "vocabulary",
                            verb));
  }
  build.matrix = {std::string(verb), MatrixMethod::kIndirect,
                  DenseMatrix(r, r, std::move(sum))};
  return build;
}

DenseMatrix diagonal_matrix(const SemanticVector& verb, double padding) {
  const std::size_t r = verb.size();
  std::vector<double> entries(r * r, padding);
  for (std::size_t i = 0; i < r; ++i) entries[i * r + i] = verb[i];
  return DenseMatrix(r, r, std::move(entries));
}

DenseMatrix encode_verb_vector(const SemanticVector& verb, MatrixMethod method) {
  switch (method) {
    case MatrixMethod::kZeroDiag:
      return diagonal_matrix(verb, 0.0);
    case MatrixMethod::kOneDiag:
      return diagonal_matrix(verb, 1.0);
    case MatrixMethod::kKronSelf:
      return kron(verb, verb);
    case MatrixMethod::kIndirect:
      break;
  }
  throw Error(ErrorCode::kUsage,
              "the indirect method is built from triples, not a verb vector");
}

VerbMatrix build_zero_diag(std::string_view verb, const SemanticSpace& space) {
  return {std::string(verb), MatrixMethod::kZeroDiag,
          diagonal_matrix(space.at(verb), 0.0)};
}

VerbMatrix build_one_diag(std::string_view verb, const SemanticSpace& space) {
  return {std::string(verb), MatrixMethod::kOneDiag,
          diagonal_matrix(space.at(verb), 1.0)};
}

VerbMatrix build_kron_self(std::string_view verb, const SemanticSpace& space) {
  const SemanticVector& v = space.at(verb);
  return {std::string(verb), MatrixMethod::kKronSelf, kron(v, v)};
}

VerbMatrix build_verb_matrix(std::string_view verb, MatrixMethod method,
                             const SemanticSpace& space,
                             const SvoTripleSet* triples,
                             TripleWeighting weighting) {
  switch (method) {
    case MatrixMethod::kIndirect:
      if (triples == nullptr) {
        throw Error(ErrorCode::kUsage, "the indirect method needs a triples file");
      }
      return build_indirect(verb, *triples, space, weighting).matrix;
    case MatrixMethod::kZeroDiag:
      return build_zero_diag(verb, space);
    case MatrixMethod::kOneDiag:
      return build_one_diag(verb, space);
    case MatrixMethod::kKronSelf:
      return build_kron_self(verb, space);
  }
  throw Error(ErrorCode::kUsage, "unknown matrix method");
}

// ---------------------------------------------------------------------------
// tensor-verb-matrix v1 files

namespace {

constexpr std::string_view kMatrixMagic = "tensor-verb-matrix v1";

[[noreturn]] void matrix_format_error(const std::filesystem::path& path,
                                      std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParse,
              fmt::format("{}:{}: {}", path.string(), line, what));
}

std::string_view field_value(std::string_view field, std::string_view key) {
  if (!field.starts_with(key) || field.size() <= key.size() ||
      field[key.size()] != '=') {
    return {};
  }
  return field.substr(key.size() + 1);
}

}  // namespace

void save_verb_matrix(const VerbMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("cannot write {}", path.string()));
  }
  const DenseMatrix& m = matrix.matrix;
  out << fmt::format("{}\tverb={}\tmethod={}\tdim={}\n", kMatrixMagic,
                     matrix.verb, method_name(matrix.method), m.rows());
  std::string line;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    line.clear();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) line += '\t';
      line += format_shortest(m(i, j));
    }
    line += '\n';
    out << line;
  }
  out.flush();
  if (!out) {
    throw Error(ErrorCode::kIo, fmt::format("write failed on {}", path.string()));
  }
}

VerbMatrix load_verb_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIo, fmt::format("cannot open {}", path.string()));
  }
  std::string line;
  if (!std::getline(in, line)) matrix_format_error(path, 1, "empty file");
  std::vector<std::string_view> header;
  {
    std::string_view rest(line);
    while (true) {
      const auto tab = rest.find('\t');
      header.push_back(rest.substr(0, tab));
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
  }
  if (header.size() != 4 || header[0] != kMatrixMagic) {
    if (!header.empty() && header[0].starts_with("tensor-verb-matrix") &&
        header[0] != kMatrixMagic) {
      throw Error(ErrorCode::kVersion,
                  fmt::format("{}: unsupported matrix format '{}'",
                              path.string(), header[0]));
    }
    matrix_format_error(path, 1, "bad header");
  }
  const std::string_view verb = field_value(header[1], "verb");
  const auto method = parse_method(field_value(header[2], "method"));
  const auto dim = parse_integer(field_value(header[3], "dim"));
  if (verb.empty() || !method || !dim || *dim < 1) {
    matrix_format_error(path, 1, "bad header fields");
  }
  const auto r = static_cast<std::size_t>(*dim);
  VerbMatrix result{std::string(verb), *method, {}};
  std::vector<double> entries;
  entries.reserve(r * r);
  for (std::size_t i = 0; i < r; ++i) {
    if (!std::getline(in, line) || in.eof()) {
      matrix_format_error(path, i + 2, "truncated matrix");
    }
    std::string_view rest(line);
    std::size_t cols = 0;
    while (true) {
      const auto tab = rest.find('\t');
      const auto value = parse_double(rest.substr(0, tab));
      if (!value) matrix_format_error(path, i + 2, "bad matrix entry");
      entries.push_back(*value);
      ++cols;
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (cols != r) {
      matrix_format_error(path, i + 2,
                          fmt::format("expected {} entries, found {}", r, cols));
    }
  }
  if (std::getline(in, line)) {
    matrix_format_error(path, r + 2, "trailing data after matrix");
  }
  result.matrix = DenseMatrix(r, r, std::move(entries));
  return result;
}

}  // namespace tensorverb
