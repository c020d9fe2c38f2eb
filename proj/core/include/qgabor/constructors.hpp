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


#ifndef QGABOR_CONSTRUCTORS_HPP_
#define QGABOR_CONSTRUCTORS_HPP_

// Explicit window constructions built from indicator functions of products
// of consecutive runs in N_N, and structural predicates for orthonormal
// Gabor bases.

#include <cstdint>
#include <optional>

#include "qgabor/frame_analysis.hpp"
#include "qgabor/signal.hpp"

namespace qgabor {

// Parseval family for L = K^2 and N^2 < L M^2. N_N is split into runs
// [rM, (r+1)M), r < R = floor(N/M), plus the remainder [RM, N). Window
// (r, r') is (1/M) chi_{I_r x I_r'}; indices past the last run are empty.
// Windows are ordered lexicographically in (r, r').
WindowFamily build_parseval(int L, int M, int N);

// Orthonormal basis for M | N: K = N/M runs of length M, L = K^2.
WindowFamily build_onb(int M, int N);

struct OnbExistence {
  bool exists = false;
  std::optional<int> L;
};
// An orthonormal basis G(g, L, M, N) exists iff N^2 / M^2 is a perfect
// square integer, i.e. iff M | N.
OnbExistence onb_existence(int M, int N);

// Integer square root test; false for L < 1.
bool perfect_square_check(long long L);

struct OnbCheck {
  bool holds = false;
  bool parseval = false;
  bool ratio_ok = false;  // N^2 == L M^2
  bool orthonormal_sample = false;
  double max_gram_error = 0.0;
  std::size_t sampled_atoms = 0;
  // "row_criterion" for real windows, "enumeration" otherwise.
  std::string parseval_method;
};
// Parseval plus N^2 = L M^2, with a spot check of atom orthonormality on a
// seeded sample of distinct (l, m, n).
OnbCheck onb_check(const WindowFamily& w, double tol = kDefaultTolerance,
                   std::size_t sample = 20, std::uint64_t seed = 0);

// |frame_functional(w, h) - ||h||^2| <= tol ||h||^2 for `trials` random
// quaternion h supported on a box covering a few periods. Works for
// quaternion windows, where no exact criterion is available.
bool empirical_parseval(const WindowFamily& w, int trials, std::uint64_t seed,
                        double tol = kDefaultTolerance);

}  // namespace qgabor

#endif  // QGABOR_CONSTRUCTORS_HPP_
