// Copyright 2026 The smpec Authors
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

#ifndef SMPEC_SRC_STATIONARITY_HPP_
#define SMPEC_SRC_STATIONARITY_HPP_

#include "smpec/model.hpp"

namespace smpec::internal {

enum class CombinationMode {
  // Generator weights a >= 0 with sum(a) = scale.
  kConvex,
  // Generator weights a >= 0, unconstrained sum.
  kConic,
};

struct StationarityFit {
  // Element of the subdifferential box of f.
  Vector u;
  // Generator weights.
  Vector a;
  // Normal-cone weights.
  Vector nu;
  // || u + G a + N nu ||.
  double residual = 0.0;
};

// min || u + G a + N nu || over u in the box, nu >= 0 and the generator
// weights a restricted by mode. N holds the normal-cone generators.
StationarityFit fit_stationarity(const ConvexObjective::SubdifferentialBox& box,
                                 const Matrix& G, const Matrix& N,
                                 CombinationMode mode, double scale = 1.0);

}  // namespace smpec::internal

#endif  // SMPEC_SRC_STATIONARITY_HPP_
