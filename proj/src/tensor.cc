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

#include "tensorverb/tensor.h"

#include <cmath>
#include <string>

#include <fmt/core.h>

#include "tensorverb/error.h"
#include "tensorverb/kernels.h"

namespace tensorverb {
namespace {

void require_finite(std::span<const double> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i])) {
      throw Error(ErrorCode::kValidation,
                  fmt::format("{} entry {} is not finite", what, i));
    }
  }
}

void require_same_length(const SemanticVector& a, const SemanticVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kShape,
                fmt::format("length mismatch: {} vs {}", a.size(), b.size()));
  }
}

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShape,
                fmt::format("shape mismatch: {}x{} vs {}x{}", a.rows(),
                            a.cols(), b.rows(), b.cols()));
  }
}

// Fixed left-to-right order; results must not depend on thread count.
double sum_of_products(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Cosine normalized(double inner, double norm_a, double norm_b) {
  if (norm_a == 0.0 || norm_b == 0.0) return {0.0, true};
  return {inner / (norm_a * norm_b), false};
}

}  // namespace

SemanticVector::SemanticVector(std::vector<double> weights)
    : weights_(std::move(weights)) {
  require_finite(weights_, "vector");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols,
                         std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kShape,
                fmt::format("{}x{} matrix given {} entries", rows_, cols_,
                            entries_.size()));
  }
  require_finite(entries_, "matrix");
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw Error(ErrorCode::kShape, "ragged matrix literal");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  require_finite(entries_, "matrix");
}

DenseMatrix kron(const SemanticVector& a, const SemanticVector& b) {
  require_same_length(a, b);
  std::vector<double> out(a.size() * b.size());
  omp::outer(a.weights(), b.weights(), out);
  return DenseMatrix(a.size(), b.size(), std::move(out));
}

SemanticVector hadamard(const SemanticVector& a, const SemanticVector& b) {
  require_same_length(a, b);
  std::vector<double> out(a.size());
  omp::multiply(a.weights(), b.weights(), out);
  return SemanticVector(std::move(out));
}

DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  std::vector<double> out(a.entries().size());
  omp::multiply(a.entries(), b.entries(), out);
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

SemanticVector add(const SemanticVector& a, const SemanticVector& b) {
  require_same_length(a, b);
  std::vector<double> out(a.size());
  omp::add(a.weights(), b.weights(), out);
  return SemanticVector(std::move(out));
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  std::vector<double> out(a.entries().size());
  omp::add(a.entries(), b.entries(), out);
  return DenseMatrix(a.rows(), a.cols(), std::move(out));
}

SemanticVector scale(const SemanticVector& a, double factor) {
  std::vector<double> out(a.weights().begin(), a.weights().end());
  for (double& w : out) w *= factor;
  return SemanticVector(std::move(out));
}

double dot(const SemanticVector& a, const SemanticVector& b) {
  require_same_length(a, b);
  return sum_of_products(a.weights(), b.weights());
}

double norm(const SemanticVector& a) {
  return std::sqrt(sum_of_products(a.weights(), a.weights()));
}

double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b) {
  require_same_shape(a, b);
  return sum_of_products(a.entries(), b.entries());
}

double frobenius_norm(const DenseMatrix& a) {
  return std::sqrt(sum_of_products(a.entries(), a.entries()));
}

Cosine cosine(const SemanticVector& a, const SemanticVector& b) {
  const double inner = dot(a, b);
  return normalized(inner, norm(a), norm(b));
}

Cosine cosine(const DenseMatrix& a, const DenseMatrix& b) {
  const double inner = frobenius_inner(a, b);
  return normalized(inner, frobenius_norm(a), frobenius_norm(b));
}

}  // namespace tensorverb
