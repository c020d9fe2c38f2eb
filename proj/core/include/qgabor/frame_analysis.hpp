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

#ifndef QGABOR_FRAME_ANALYSIS_HPP_
#define QGABOR_FRAME_ANALYSIS_HPP_

// Frame, Bessel and Parseval decision procedures for Gabor systems
// G(g, L, M, N).
//
// All per-k scans visit k in N_N^2 only: the aggregate
// sum_l M_{g_l}(k) M_{g_l}^t(k) is N Z^2-periodic, so this is exhaustive.
// Sufficient and exact criteria need real-valued windows; for quaternion
// windows only the necessary diagonal condition is available.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qgabor/signal.hpp"

namespace qgabor {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Verdict { frame, bessel_only, not_frame, inconclusive };

enum class Criterion {
  necessary_diagonal,
  row_sum_sufficient,
  narrow_support,
  parseval_rows,
  operator_inequality,
};

std::string_view to_string(Verdict v);
std::string_view to_string(Criterion c);

// Extremal data at one k in N_N^2 (diagonal value, eigenvalue range, ...),
// already multiplied by M^2 so it is on the scale of frame bounds.
struct KDiagnostic {
  Index2 k;
  double lower = 0.0;
  double upper = 0.0;
};

struct FrameReport {
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  Criterion method = Criterion::necessary_diagonal;
  std::vector<KDiagnostic> diagnostics;
  std::optional<Index2> witness;
  std::string note;
};

// A/M^2 <= (sum_l M_{g_l}(k) M_{g_l}^*(k))_{0,0} <= B/M^2 for all k in N_N^2.
// Necessary for frame bounds A <= B; valid for quaternion windows.
struct DiagonalCondition {
  bool holds = true;
  std::vector<KDiagnostic> values;  // lower == upper == diagonal (unscaled)
  std::optional<Index2> witness;    // first violating k
};
DiagonalCondition necessary_diagonal(const WindowFamily& w, double A, double B,
                                     double tol = kDefaultTolerance);

// Parameter test N^2 <= L M^2 and the norm identity sum_l ||g_l||^2 = N^2/M^2,
// both necessary for a Parseval frame.
struct ParsevalNecessary {
  bool ratio_ok = false;
  double norm_sum = 0.0;
  double expected_norm_sum = 0.0;
  bool norm_sum_ok = false;
};
ParsevalNecessary parseval_necessary(const WindowFamily& w, double tol = kDefaultTolerance);

// B = M^2 max_k sum_p |(sum_l M_{g_l}(k) M_{g_l}^t(k))_{0,p}|. Always finite
// for finitely supported windows. Real windows only.
double bessel_bound_sufficient(const WindowFamily& w);

// Bessel bound for any windows, quaternion valued included, from
// Cauchy-Schwarz: M^2 sum_l |supp g_l| max_k sum_n |g_l(k - nN)|^2.
double bessel_bound_cauchy_schwarz(const WindowFamily& w);

struct FrameBounds {
  double lower = 0.0;
  double upper = 0.0;
};

// Row-dominance bounds: B as above and
//   A = M^2 min_k sum_l [ G_l(k)_{0,0} - sum_{p != 0} |G_l(k)_{0,p}| ].
// Returns nullopt when A <= 0 (criterion inconclusive, not a disproof).
std::optional<FrameBounds> frame_bounds_sufficient(const WindowFamily& w);

// Narrow-support case: every window real with supp_width < M. The frame
// operator is pointwise multiplication by M^2 D(k), D(k) = G(k)_{0,0}, and the
// optimal bounds are M^2 min D and M^2 max D.
//
// supp_width only measures spans inside a single row or column, so it does
// not rule out two support points offset by a multiple of M in both
// coordinates; those give nonzero off-diagonal entries G(k)_{0,p}. The
// bounding box of every window must therefore also have extent < M.
struct NarrowSupportFrame {
  FrameReport report;
  // D(k) for k in N_N^2, row-major (index k1 * N + k2).
  std::vector<double> diagonal;
  std::function<FiniteSignal(const FiniteSignal&)> apply_S;
  // Throws std::domain_error when D vanishes somewhere.
  std::function<FiniteSignal(const FiniteSignal&)> apply_S_inverse;
};
NarrowSupportFrame narrow_support_frame(const WindowFamily& w,
                                        std::optional<double> A = std::nullopt,
                                        std::optional<double> B = std::nullopt,
                                        double tol = kDefaultTolerance);

// True iff every window is real with bounding-box extent < M.
bool is_narrow_support(const WindowFamily& w);

// Parseval iff G(k)_{0,p} = (1/M^2) [p = 0] for all k in N_N^2 and all p.
struct ParsevalCheck {
  bool holds = false;
  std::optional<Index2> violation_k;
  std::optional<Index2> violation_p;
  double violation_value = 0.0;
  double expected_value = 0.0;
};
ParsevalCheck parseval_check(const WindowFamily& w, double tol = kDefaultTolerance);

// Bounds from the extremal eigenvalues of principal truncations of G(k),
// p, p' in [-R, R]^2. Truncation can only raise the smallest and lower the
// largest eigenvalue, so lower is an over-estimate of the optimal lower
// frame bound and upper an under-estimate of the optimal upper one. R grows
// from `radius` until both move by less than `tol` or `max_radius` is hit.
struct OperatorInequalityBounds {
  double lower = 0.0;
  double upper = 0.0;
  bool converged = false;
  int radius = 0;
  std::vector<KDiagnostic> per_k;
};
OperatorInequalityBounds operator_inequality_bounds(const WindowFamily& w, int radius = 1,
                                                    double tol = 1e-8, int max_radius = 4);

// min / max of frame_functional(w, h) / ||h||^2 over random quaternion h
// supported in [-r, r]^2.
struct RayleighRange {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
};
RayleighRange empirical_rayleigh(const WindowFamily& w, int trials, int support_radius,
                                 std::uint64_t seed);

struct AnalysisOptions {
  double tol = kDefaultTolerance;
  int radius = 1;
  int max_radius = 4;
  double convergence_tol = 1e-8;
};

// Frame decision combining the criteria above; exact criteria (narrow
// support) take precedence over sufficient bounds, which take precedence
// over truncated eigenvalue estimates.
FrameReport analyze_frame(const WindowFamily& w, const AnalysisOptions& options = {});

}  // namespace qgabor

#endif  // QGABOR_FRAME_ANALYSIS_HPP_
