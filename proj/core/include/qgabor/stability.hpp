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


#ifndef QGABOR_STABILITY_HPP_
#define QGABOR_STABILITY_HPP_

// Perturbation of frames. If {u_i} is a frame with bounds A <= B and
// sum_i |<u_i - v_i, u>|^2 <= R ||u||^2 with R < A, then {v_i} is a frame
// with bounds A (1 - sqrt(R/A))^2 and B (1 + sqrt(R/B))^2.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qgabor/frame_analysis.hpp"
#include "qgabor/signal.hpp"

namespace qgabor {

struct PerturbedBounds {
  bool applicable = false;  // R < A
  std::optional<double> lower;
  std::optional<double> upper;
};
// Throws std::invalid_argument unless 0 < A <= B and R >= 0.
PerturbedBounds perturbed_bounds(double A, double B, double R);

struct StabilityReport {
  double R = 0.0;
  double A = 0.0;
  double B = 0.0;
  bool applicable = false;
  std::optional<double> new_lower;
  std::optional<double> new_upper;
  std::string bounds_source;  // "supplied", "narrow_support" or "row_sum_sufficient"
};

// R = M^2 max_k sum_p |(sum_l M_{g_l - h_l}(k) M_{g_l - h_l}^t(k))_{0,p}|.
double perturbation_R(const WindowFamily& g, const WindowFamily& h);

// Frame bounds of g default to the exact narrow-support bounds, then to the
// row-sum sufficient bounds. Throws std::invalid_argument when no bounds are
// available or A <= 0.
StabilityReport stability_verdict(const WindowFamily& g, const WindowFamily& h,
                                  std::optional<double> A = std::nullopt,
                                  std::optional<double> B = std::nullopt);

struct PerturbationFunctionalCheck {
  bool holds = true;
  double R = 0.0;
  double max_ratio = 0.0;  // max functional(g - h, u) / ||u||^2
  // max |functional(g - h, u) - sum |c_g - c_h|^2| over the trials.
  double identity_error = 0.0;
};
// functional(g - h, u) <= R ||u||^2 for random quaternion u.
PerturbationFunctionalCheck perturbation_functional_check(const WindowFamily& g,
                                                          const WindowFamily& h, int trials,
                                                          std::uint64_t seed,
                                                          double tol = kDefaultTolerance);

// Finite real frames: optimal bounds of {u_i} in R^d are the extremal
// eigenvalues of sum_i u_i u_i^t. Each vector must have length d.
FrameBounds finite_frame_bounds(std::span<const std::vector<double>> vectors, std::size_t d);

// Smallest R with sum_i |<u_i - v_i, x>|^2 <= R ||x||^2 for all x.
double finite_perturbation_R(std::span<const std::vector<double>> u,
                             std::span<const std::vector<double>> v, std::size_t d);

}  // namespace qgabor

#endif  // QGABOR_STABILITY_HPP_
