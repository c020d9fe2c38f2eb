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

#ifndef QGABOR_GABOR_OPS_HPP_
#define QGABOR_GABOR_OPS_HPP_

#include <vector>

#include "qgabor/quaternion.hpp"
#include "qgabor/signal.hpp"

namespace qgabor {

// e^{2 pi i r / M} and e^{2 pi j r / M} for r in N_M, looked up by exponent
// modulo M so that phases of large arguments stay exact roots of unity.
class PhaseTable {
 public:
  explicit PhaseTable(int M);

  int M() const { return M_; }
  // e^{2 pi i e / M} for any integer exponent e.
  const Quaternion& i_phase(long long e) const { return i_[reduce(e)]; }
  // e^{2 pi j e / M} for any integer exponent e.
  const Quaternion& j_phase(long long e) const { return j_[reduce(e)]; }

 private:
  std::size_t reduce(long long e) const {
    long long r = e % M_;
    if (r < 0) r += M_;
    return static_cast<std::size_t>(r);
  }

  int M_;
  std::vector<Quaternion> i_;
  std::vector<Quaternion> j_;
};

// T_{nN} f (k) = f(k - nN).
FiniteSignal translate(const FiniteSignal& f, Index2 n, int N);

// E_{m/M} f (k) = e^{2 pi i m1 k1 / M} f(k) e^{2 pi j m2 k2 / M}.
// The i-phase multiplies on the left, the j-phase on the right; E_{m/M} is
// therefore not right H-linear. Requires 0 <= m1, m2 < M.
FiniteSignal modulate(const FiniteSignal& f, Index2 m, int M);

// E_{m/M} T_{nN} g.
FiniteSignal atom(const FiniteSignal& g, Index2 m, Index2 n, const GaborParams& params);

// <E_{m/M} T_{nN} g, h>
//   = sum_k e^{-2 pi j m2 k2/M} conj(g(k - nN)) e^{-2 pi i m1 k1/M} h(k).
// This is the only place the factor order of an analysis coefficient is
// written down; everything else calls it.
Quaternion coeff(const FiniteSignal& g, Index2 m, Index2 n, const FiniteSignal& h,
                 const GaborParams& params);

// Translations n whose shifted support box (box_g + nN) meets box_h. Every
// other n contributes exactly zero to analysis sums.
IndexBox contributing_translations(const IndexBox& box_g, const IndexBox& box_h, int N);

struct AtomIndex {
  int l = 0;
  Index2 m;
  Index2 n;

  friend constexpr auto operator<=>(const AtomIndex&, const AtomIndex&) = default;
};

struct AnalysisCoefficient {
  AtomIndex index;
  Quaternion value;
};

// Transform operator theta h restricted to the atoms whose support meets
// supp(h), ordered by (l, n, m).
std::vector<AnalysisCoefficient> analysis(const WindowFamily& w, const FiniteSignal& h);

// sum_{l, n, m} |<E_{m/M} T_{nN} g_l, h>|^2.
double frame_functional(const WindowFamily& w, const FiniteSignal& h);

// S h = sum_{l, n, m} (E_{m/M} T_{nN} g_l) <E_{m/M} T_{nN} g_l, h>, atoms
// multiplied on the right by their coefficient.
FiniteSignal frame_operator_apply(const WindowFamily& w, const FiniteSignal& h);

// M if M divides k, else 0.
double char_sum(int M, long long k);

}  // namespace qgabor

#endif  // QGABOR_GABOR_OPS_HPP_
