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

#include <cmath>

#include "morphseg/errors.h"

namespace morphseg {

PoissonSampler::PoissonSampler(double lambda) : lambda_(lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda) || lambda > 500.0) {
    Fail(ErrorCode::kInvalidArgument, "Poisson lambda must be in (0, 500]");
  }
  // Tabulate the CDF until the tail mass is negligible.
  double p = std::exp(-lambda);
  double cum = p;
  cdf_.push_back(cum);
  for (int k = 1; cum < 1.0 - 1e-15 && k < 4096; ++k) {
    p *= lambda / k;
    cum += p;
    cdf_.push_back(cum);
  }
}

int PoissonSampler::Draw(Rng &rng) const {
  double u = rng.Uniform();
  // Linear scan: the expected number of steps is about lambda.
  for (size_t k = 0; k < cdf_.size(); ++k) {
    if (u < cdf_[k]) return static_cast<int>(k);
  }
  return static_cast<int>(cdf_.size());
}

int PoissonSampler::DrawPositive(Rng &rng) const {
  for (;;) {
    int k = Draw(rng);
    if (k > 0) return k;
  }
}

}  // namespace morphseg
