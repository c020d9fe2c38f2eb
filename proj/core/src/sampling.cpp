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

#include "qgabor/sampling.hpp"

#include <stdexcept>
#include <vector>

namespace qgabor {

double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int uniform_int(Rng& rng, int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

Quaternion random_quaternion(Rng& rng) {
  const double a0 = uniform(rng, -1.0, 1.0);
  const double a1 = uniform(rng, -1.0, 1.0);
  const double a2 = uniform(rng, -1.0, 1.0);
  const double a3 = uniform(rng, -1.0, 1.0);
  return {a0, a1, a2, a3};
}

namespace {

Quaternion random_value(Rng& rng, bool real_only) {
  if (!real_only) return random_quaternion(rng);
  // Bounded away from zero so the point stays in the support.
  const double mag = uniform(rng, 0.1, 1.0);
  return uniform(rng, 0.0, 1.0) < 0.5 ? -mag : mag;
}

}  // namespace

FiniteSignal random_signal(Rng& rng, const IndexBox& box, double density, bool real_only) {
  if (box.empty()) return {};
  std::vector<SignalEntry> e;
  for (Index2 k : box.points()) {
    if (uniform(rng, 0.0, 1.0) < density) e.push_back({k, random_value(rng, real_only)});
  }
  if (e.empty()) {
    const Index2 k{uniform_int(rng, box.lo.k1, box.hi.k1), uniform_int(rng, box.lo.k2, box.hi.k2)};
    e.push_back({k, random_value(rng, real_only)});
  }
  return FiniteSignal(std::move(e));
}

WindowFamily random_real_family(Rng& rng, const GaborParams& params, const IndexBox& box,
                                double density) {
  std::vector<FiniteSignal> w;
  w.reserve(static_cast<std::size_t>(params.L()));
  for (int l = 0; l < params.L(); ++l) w.push_back(random_signal(rng, box, density, true));
  return {params, std::move(w)};
}

}  // namespace qgabor
