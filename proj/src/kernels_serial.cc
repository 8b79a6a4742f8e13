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

namespace tensorverb {

namespace serial {

void outer(std::span<const double> a, std::span<const double> b,
           std::span<double> out) {
  const std::size_t cols = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] = a[i] * b[j];
  }
}

void accumulate_outer(double weight, std::span<const double> a,
                      std::span<const double> b, std::span<double> out) {
  const std::size_t cols = b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double wa = weight * a[i];
    for (std::size_t j = 0; j < cols; ++j) out[i * cols + j] += wa * b[j];
  }
}

void multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
}

void add(std::span<const double> a, std::span<const double> b,
         std::span<double> out) {
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
}

}  // namespace serial

}  // namespace tensorverb
