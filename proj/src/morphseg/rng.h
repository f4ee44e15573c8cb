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

#ifndef MORPHSEG_RNG_H_
#define MORPHSEG_RNG_H_

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace morphseg {

// Seeded generator. The engine output sequence is fixed by the standard;
// the derived uniform and bounded draws are computed here so that results do
// not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). n must be positive.
  uint64_t Below(uint64_t n) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    uint64_t x;
    do {
      x = Next();
    } while (x >= limit);
    return x % n;
  }

  template <typename T>
  void Shuffle(std::vector<T> *items) {
    for (size_t i = items->size(); i > 1; --i) {
      size_t j = Below(i);
      std::swap((*items)[i - 1], (*items)[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Poisson sampler by sequential inversion of the CDF.
class PoissonSampler {
 public:
  explicit PoissonSampler(double lambda);

  double lambda() const { return lambda_; }

  // One raw draw; zero is a possible outcome.
  int Draw(Rng &rng) const;

  // A draw conditioned on being at least one (zeros are redrawn).
  int DrawPositive(Rng &rng) const;

 private:
  double lambda_;
  std::vector<double> cdf_;
};

}  // namespace morphseg

#endif  // MORPHSEG_RNG_H_
