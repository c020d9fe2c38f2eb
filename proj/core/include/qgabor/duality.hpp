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


#ifndef QGABOR_DUALITY_HPP_
#define QGABOR_DUALITY_HPP_

// Dual Gabor systems. G and H are dual when every inner product is
// reconstructed by the mixed coefficient sum
//
//   <f, phi> = sum_{l,n,m} <f, E T g_l> <E T h_l, phi>.
//
// For real windows this holds iff row 0 of sum_l M_{g_l}(k) M_{h_l}^t(k)
// equals (1/M^2) [p = 0] for every k.

#include <cstdint>
#include <optional>
#include <stdexcept>

#include "qgabor/frame_analysis.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/signal.hpp"

namespace qgabor {

// Raised when two independent evaluations of the same quantity disagree.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct DualCheck {
  bool holds = false;
  std::optional<RowViolation> violation;
};
// Real windows, same parameters.
DualCheck dual_check(const WindowFamily& g, const WindowFamily& h,
                     double tol = kDefaultTolerance);

// sum_{l,n,m} <f, E T g_l> <E T h_l, phi> by enumerating coefficients.
Quaternion mixed_sum_direct(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                            const FiniteSignal& phi);

// M^2 sum_k sum_p G(k)_{0,p} conj(f(k)) phi(k + pM), with G the aggregate of
// (g, h). Real windows only.
Quaternion mixed_sum_closed_form(const WindowFamily& g, const WindowFamily& h,
                                 const FiniteSignal& f, const FiniteSignal& phi);

// Direct value; throws ConsistencyError when the closed form differs by more
// than 1e-9 (relative to max(1, |direct|)).
Quaternion mixed_sum(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                     const FiniteSignal& phi);

struct ReconstructionCheck {
  bool holds = true;
  int trials = 0;
  std::optional<int> failed_trial;
  Quaternion value;
  Quaternion expected;
};
// mixed_sum(g, h, f, phi) == <f, phi> for random quaternion f, phi supported
// on [0, N + M]^2.
ReconstructionCheck reconstruction_check(const WindowFamily& g, const WindowFamily& h,
                                         int trials, std::uint64_t seed,
                                         double tol = kDefaultTolerance);

struct ExponentialBasisCheck {
  bool holds = false;
  double max_error = 0.0;
};
// The M^2 sequences (1/M) e^{2 pi i m1 k1/M} e^{2 pi j m2 k2/M} on N_M^2 are
// orthonormal.
ExponentialBasisCheck periodic_exponential_basis_check(int M, double tol = 1e-10);

// Canonical dual S^{-1} g_l of a narrow-support frame.
WindowFamily canonical_dual_narrow(const WindowFamily& w);

}  // namespace qgabor

#endif  // QGABOR_DUALITY_HPP_
