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

#ifndef TENSORVERB_TENSOR_H_
#define TENSORVERB_TENSOR_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace tensorverb {

// An r-dimensional row of real weights. Entries are always finite.
class SemanticVector {
 public:
  SemanticVector() = default;
  explicit SemanticVector(std::size_t dimension) : weights_(dimension, 0.0) {}
  explicit SemanticVector(std::vector<double> weights);
  SemanticVector(std::initializer_list<double> weights)
      : SemanticVector(std::vector<double>(weights)) {}

  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }
  double operator[](std::size_t i) const { return weights_[i]; }
  std::span<const double> weights() const { return weights_; }

  friend bool operator==(const SemanticVector&, const SemanticVector&) = default;

 private:
  std::vector<double> weights_;
};

// Row-major dense real matrix. Entries are always finite.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);
  // Row-by-row literal, e.g. DenseMatrix{{1, 2}, {3, 4}}.
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::span<const double> entries() const { return entries_; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(entries_).subspan(i * cols_, cols_);
  }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> entries_;
};

// Cosine value plus a flag set when either operand had zero norm, in which
// case the value is 0.
struct Cosine {
  double value = 0.0;
  bool degenerate = false;
};

DenseMatrix kron(const SemanticVector& a, const SemanticVector& b);
SemanticVector hadamard(const SemanticVector& a, const SemanticVector& b);
DenseMatrix hadamard(const DenseMatrix& a, const DenseMatrix& b);
SemanticVector add(const SemanticVector& a, const SemanticVector& b);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
SemanticVector scale(const SemanticVector& a, double factor);

double dot(const SemanticVector& a, const SemanticVector& b);
double norm(const SemanticVector& a);
double frobenius_inner(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm(const DenseMatrix& a);

Cosine cosine(const SemanticVector& a, const SemanticVector& b);
Cosine cosine(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace tensorverb

#endif  // TENSORVERB_TENSOR_H_
