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

#ifndef TENSORVERB_STATS_H_
#define TENSORVERB_STATS_H_

#include <span>
#include <vector>

namespace tensorverb {

// 1-based ranks; tied values share the average of the positions they span.
std::vector<double> fractional_ranks(std::span<const double> values);

// Pearson correlation. Throws kDegenerate when either input is constant and
// kShape when lengths differ or are below 2.
double pearson(std::span<const double> x, std::span<const double> y);

// Spearman's rho: Pearson correlation of fractional ranks.
double spearman_rho(std::span<const double> x, std::span<const double> y);

}  // namespace tensorverb

#endif  // TENSORVERB_STATS_H_
