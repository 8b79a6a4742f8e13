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

#include "tensorverb/stats.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "tensorverb/error.h"
#include "test_util.h"

namespace tensorverb {
namespace {

using testing::closed_form_spearman;
using testing::oracle_spearman;

using Values = std::vector<double>;

TEST(RanksTest, AveragesTies) {
  EXPECT_EQ(fractional_ranks(Values{10, 30, 20}), (Values{1, 3, 2}));
  EXPECT_EQ(fractional_ranks(Values{1, 2, 2, 4}), (Values{1, 2.5, 2.5, 4}));
  EXPECT_EQ(fractional_ranks(Values{5, 5, 5}), (Values{2, 2, 2}));
  EXPECT_TRUE(fractional_ranks(Values{}).empty());
}

TEST(SpearmanTest, Examples) {
  EXPECT_EQ(spearman_rho(Values{1, 2, 3, 4}, Values{10, 20, 30, 40}), 1.0);
  EXPECT_EQ(spearman_rho(Values{1, 2, 3, 4}, Values{4, 3, 2, 1}), -1.0);
  // 3 / sqrt(10)
  EXPECT_NEAR(spearman_rho(Values{1, 2, 2, 4}, Values{1, 3, 2, 4}), 0.9486832980505138,
              1e-12);
}

TEST(SpearmanTest, Errors) {
  try {
    spearman_rho(Values{1, 2, 3}, Values{1, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kShape);
  }
  try {
    spearman_rho(Values{2, 2, 2}, Values{1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegenerate);
  }
  EXPECT_THROW(spearman_rho(Values{1}, Values{1}), Error);
  EXPECT_THROW(pearson(Values{1, 2}, Values{3, 3}), Error);
}

TEST(SpearmanTest, MatchesOracleOnRandomTiedLists) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + rng() % 40;
    Values x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = static_cast<double>(rng() % 5);
      y[i] = static_cast<double>(rng() % 7);
    }
    if (std::ranges::all_of(x, [&](double v) { return v == x[0]; }) ||
        std::ranges::all_of(y, [&](double v) { return v == y[0]; })) {
      continue;
    }
    EXPECT_NEAR(spearman_rho(x, y), oracle_spearman(x, y), 1e-12);
  }
}

TEST(SpearmanTest, ClosedFormWithoutTies) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    Values x(n), y(n);
    std::iota(x.begin(), x.end(), 0.0);
    std::iota(y.begin(), y.end(), 0.0);
    std::ranges::shuffle(x, rng);
    std::ranges::shuffle(y, rng);
    EXPECT_NEAR(spearman_rho(x, y), closed_form_spearman(x, y), 1e-12);
  }
}

TEST(SpearmanTest, Properties) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 25;
    const Values x = testing::random_weights(rng, n, -5, 5);
    const Values y = testing::random_weights(rng, n, -5, 5);
    const double rho = spearman_rho(x, y);
    EXPECT_EQ(spearman_rho(x, x), 1.0);
    EXPECT_EQ(rho, spearman_rho(y, x));
    EXPECT_GE(rho, -1.0);
    EXPECT_LE(rho, 1.0);
    Values transformed(n);
    std::ranges::transform(x, transformed.begin(),
                           [](double v) { return std::exp(v) + 3.0; });
    EXPECT_EQ(spearman_rho(transformed, y), rho);
  }
}

}  // namespace
}  // namespace tensorverb
