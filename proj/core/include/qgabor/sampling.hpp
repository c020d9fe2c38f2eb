// SPDX-License-Identifier: Apache-2.0
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef QGABOR_SAMPLING_HPP_
#define QGABOR_SAMPLING_HPP_

// Seeded random signals and window families. Values are drawn from raw
// mt19937_64 output, so a seed gives the same data on every platform.

#include <cstdint>
#include <random>

#include "qgabor/signal.hpp"

namespace qgabor {

using Rng = std::mt19937_64;

// Uniform in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

// Components uniform in [-1, 1).
Quaternion random_quaternion(Rng& rng);

// Each point of `box` is kept with probability `density`; kept points get a
// random quaternion (or a random nonzero real when `real_only`). Never
// returns the zero signal for a nonempty box.
FiniteSignal random_signal(Rng& rng, const IndexBox& box, double density = 1.0,
                           bool real_only = false);

// L random real windows supported in `box`.
WindowFamily random_real_family(Rng& rng, const GaborParams& params, const IndexBox& box,
                                double density = 0.6);

}  // namespace qgabor

#endif  // QGABOR_SAMPLING_HPP_
