// Copyright 2026 The Morphseg Authors.
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


#include "morphseg/rng.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "morphseg/errors.h"

namespace morphseg {
namespace {

TEST(PoissonTest, MeanOfRawDraws) {
  Rng rng(42);
  PoissonSampler sampler(5.5);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) sum += sampler.Draw(rng);
  double mean = sum / n;
  EXPECT_GE(mean, 5.4);
  EXPECT_LE(mean, 5.6);
}

TEST(PoissonTest, PositiveDrawsSkipZero) {
  Rng rng(1);
  PoissonSampler sampler(0.5);
  for (int i = 0; i < 10000; ++i) EXPECT_GE(sampler.DrawPositive(rng), 1);
}

TEST(PoissonTest, RejectsBadLambda) {
  EXPECT_THROW(PoissonSampler(0.0), Error);
  EXPECT_THROW(PoissonSampler(-1.0), Error);
  EXPECT_THROW(PoissonSampler(1000.0), Error);
}

TEST(RngTest, DeterministicAndInRange) {
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.Next(), b.Next());
  for (int i = 0; i < 1000; ++i) {
    EXPECT_LT(a.Below(13), 13u);
    double u = a.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RngTest, ShuffleIsPermutation) {
  Rng rng(3);
  std::vector<int> v(50);
  std::iota(v.begin(), v.end(), 0);
  rng.Shuffle(&v);
  std::vector<int> sorted = v;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 50; ++i) EXPECT_EQ(sorted[i], i);
}

}  // namespace
}  // namespace morphseg
