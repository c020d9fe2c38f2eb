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

#ifndef QGABOR_MATRIX_FN_HPP_
#define QGABOR_MATRIX_FN_HPP_

// Matrix-valued functions of a window.
//
// For a signal h the bi-infinite matrix M_h(k) has entries
//
//   (M_h(k))_{p,n} = h(k + pM - nN),   p, n in Z^2,
//
// and the products that drive every frame criterion are
//
//   (M_g(k) M_h^*(k))_{p,p'} = sum_n g(k + pM - nN) conj(h(k + p'M - nN)).
//
// For finitely supported signals only finitely many n contribute, so every
// entry is an exact finite sum. The aggregate over a family is
// G(k) = sum_l M_{g_l}(k) M_{h_l}^*(k); it is N Z^2-periodic in k, which is
// why per-k scans elsewhere only visit k in N_N^2.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qgabor/quaternion.hpp"
#include "qgabor/signal.hpp"

namespace qgabor {

// Whether the right factor is conjugate-transposed (M_h^*) or only
// transposed (M_h^t). They coincide for real windows.
enum class Adjoint { conjugate, transpose };

// transpose when both families are real valued, conjugate otherwise.
Adjoint natural_adjoint(const WindowFamily& g, const WindowFamily& h);

// (M_g(k) M_h^{*|t}(k))_{p,p'}, summing over the finitely many contributing n.
Quaternion product_entry(const FiniteSignal& g, const FiniteSignal& h, Index2 k, Index2 p,
                         Index2 pp, int M, int N, Adjoint adjoint = Adjoint::conjugate);

using SparseRow = std::map<Index2, Quaternion>;

// Box of column indices p outside of which row 0 of sum_l M_{g_l} M_{h_l}^*
// vanishes identically, for every k. Computed from support bounding boxes:
// an entry needs points a in supp(g_l), b in supp(h_l) with b - a = pM.
// Empty when every window pair is empty.
IndexBox row_cutoff(const WindowFamily& g, const WindowFamily& h);

// Row 0 of the aggregate at k, evaluated from the defining sum for every p in
// `window` (zeros included). Uses the natural adjoint of the pair.
SparseRow aggregate_row0(const WindowFamily& g, const WindowFamily& h, Index2 k,
                         const IndexBox& window);

// Row 0 of the aggregate at k, holding exactly the p that receive a
// contribution. Built by pairing support points directly instead of scanning
// a p window; agrees with aggregate_row0 on row_cutoff().
SparseRow correlation_row(const WindowFamily& g, const WindowFamily& h, Index2 k);

// (sum_l M_{g_l}(k) M_{g_l}^*(k))_{0,0} = sum_l sum_n |g_l(k - nN)|^2.
// Valid for quaternion-valued windows.
double diagonal(const WindowFamily& w, Index2 k);

// First (k, p) with k in N_N^2 where row 0 of sum_l M_{g_l} M_{h_l}^t
// differs from (1/M^2) [p = 0] by more than tol.
struct RowViolation {
  Index2 k;
  Index2 p;
  Quaternion value;
  double expected = 0.0;
};
std::optional<RowViolation> first_row_violation(const WindowFamily& g, const WindowFamily& h,
                                                double tol);

// Principal truncation of the aggregate over p, p' in [-R, R]^2.
class AggregateMatrix {
 public:
  using Key = std::pair<Index2, Index2>;

  AggregateMatrix(Index2 k, int radius, std::map<Key, Quaternion> entries);

  Index2 k() const { return k_; }
  int radius() const { return radius_; }
  // Row/column indices in lexicographic order.
  const std::vector<Index2>& index_window() const { return index_; }
  std::size_t dimension() const { return index_.size(); }

  // Stored nonzero entries, keyed by (p, p').
  const std::map<Key, Quaternion>& entries() const { return entries_; }
  Quaternion entry(Index2 p, Index2 pp) const;

  // Real parts as a dense row-major dimension() x dimension() matrix.
  std::vector<double> dense_real() const;

 private:
  Index2 k_;
  int radius_;
  std::vector<Index2> index_;
  std::map<Key, Quaternion> entries_;
};

// sum_l M_{g_l}(k) M_{h_l}^{*|t}(k) truncated to [-R, R]^2.
AggregateMatrix aggregate_truncated(const WindowFamily& g, const WindowFamily& h, Index2 k,
                                    int radius, Adjoint adjoint);

// sum_l M_{g_l}(k) M_{g_l}^t(k) truncated to [-R, R]^2; real, symmetric.
// Throws std::invalid_argument for non-real windows.
AggregateMatrix aggregate_truncated(const WindowFamily& w, Index2 k, int radius);

// Closed form of the frame functional for real windows and finite h:
//   F1 = M^2 sum_k |h(k)|^2 G(k)_{0,0}
//   F2 = M^2 sum_k sum_{p != 0} conj(h(k)) h(k + pM) G(k)_{0,p}
// F2 is returned as a quaternion; its imaginary part vanishes up to rounding.
struct FunctionalDecomposition {
  double f1 = 0.0;
  Quaternion f2;
  double total() const { return f1 + f2.real(); }
};
FunctionalDecomposition decompose_functional(const WindowFamily& w, const FiniteSignal& h);

}  // namespace qgabor

#endif  // QGABOR_MATRIX_FN_HPP_
