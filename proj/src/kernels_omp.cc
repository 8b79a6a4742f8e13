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

#include "tensorverb/kernels.h"

#include <cstddef>

#include <omp.h>

namespace tensorverb {

namespace omp {

namespace {
// Below this many output elements the thread fork costs more than the loop.
constexpr std::ptrdiff_t kParallelThreshold = 1 << 14;
}  // namespace

void outer(std::span<const double> a, std::span<const double> b,
           std::span<double> out) {
  const auto rows = static_cast<std::ptrdiff_t>(a.size());
  const std::size_t cols = b.size();
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
#pragma omp parallel for schedule(static) \
    if (rows * static_cast<std::ptrdiff_t>(cols) >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    double* row = po + i * cols;
    const double ai = pa[i];
#pragma omp simd
    for (std::size_t j = 0; j < cols; ++j) row[j] = ai * pb[j];
  }
}

void accumulate_outer(double weight, std::span<const double> a,
                      std::span<const double> b, std::span<double> out) {
  const auto rows = static_cast<std::ptrdiff_t>(a.size());
  const std::size_t cols = b.size();
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
#pragma omp parallel for schedule(static) \
    if (rows * static_cast<std::ptrdiff_t>(cols) >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    double* row = po + i * cols;
    const double wa = weight * pa[i];
#pragma omp simd
    for (std::size_t j = 0; j < cols; ++j) row[j] += wa * pb[j];
  }
}

void multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
#pragma omp parallel for simd schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) po[i] = pa[i] * pb[i];
}

void add(std::span<const double> a, std::span<const double> b,
         std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const double* pa = a.data();
  const double* pb = b.data();
  double* po = out.data();
#pragma omp parallel for simd schedule(static) if (n >= kParallelThreshold)
  for (std::ptrdiff_t i = 0; i < n; ++i) po[i] = pa[i] + pb[i];
}

}  // namespace omp

void set_thread_limit(int threads) {
  omp_set_num_threads(threads > 0 ? threads : omp_get_num_procs());
}

int thread_limit() { return omp_get_max_threads(); }

}  // namespace tensorverb
