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

#ifndef TENSORVERB_KERNELS_H_
#define TENSORVERB_KERNELS_H_

#include <span>

// Element-wise kernels over raw spans. The omp variants are what the public
// API calls; the serial variants are the reference they are tested against.
// Each output element is written by exactly one iteration with the same
// arithmetic in both variants, so results are bit-identical.
//
// Callers guarantee that span lengths agree.

namespace tensorverb {

namespace serial {

// out[i * b.size() + j] = a[i] * b[j]
void outer(std::span<const double> a, std::span<const double> b,
           std::span<double> out);
// out[i * b.size() + j] += weight * a[i] * b[j]
void accumulate_outer(double weight, std::span<const double> a,
                      std::span<const double> b, std::span<double> out);
void multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out);
void add(std::span<const double> a, std::span<const double> b,
         std::span<double> out);

}  // namespace serial

namespace omp {

void outer(std::span<const double> a, std::span<const double> b,
           std::span<double> out);
void accumulate_outer(double weight, std::span<const double> a,
                      std::span<const double> b, std::span<double> out);
void multiply(std::span<const double> a, std::span<const double> b,
              std::span<double> out);
void add(std::span<const double> a, std::span<const double> b,
         std::span<double> out);

}  // namespace omp

// Caps the number of OpenMP worker threads; 0 restores the runtime default.
void set_thread_limit(int threads);
int thread_limit();

}  // namespace tensorverb

#endif  // TENSORVERB_KERNELS_H_
