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

#include "qgabor/gabor_ops.hpp"

#include <map>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qgabor {

PhaseTable::PhaseTable(int M) : M_(M) {
  if (M <= 0) throw std::invalid_argument("PhaseTable: M must be positive");
  i_.reserve(static_cast<std::size_t>(M));
  j_.reserve(static_cast<std::size_t>(M));
  for (int r = 0; r < M; ++r) {
    const double theta = 2.0 * std::numbers::pi * r / M;
    i_.push_back(exp_i(theta));
    j_.push_back(exp_j(theta));
  }
}

FiniteSignal translate(const FiniteSignal& f, Index2 n, int N) {
  std::vector<SignalEntry> e(f.entries().begin(), f.entries().end());
  const Index2 shift = n * N;
  for (auto& x : e) x.k = x.k + shift;
  return FiniteSignal(std::move(e));
}

namespace {

void check_modulation(Index2 m, int M) {
  if (M <= 0 || m.k1 < 0 || m.k1 >= M || m.k2 < 0 || m.k2 >= M) {
    throw std::invalid_argument("modulation index (" + std::to_string(m.k1) + ", " +
                                std::to_string(m.k2) + ") outside N_M^2 for M=" +
                                std::to_string(M));
  }
}

FiniteSignal modulate_with(const FiniteSignal& f, Index2 m, const PhaseTable& phases) {
  std::vector<SignalEntry> e(f.entries().begin(), f.entries().end());
  for (auto& x : e) {
    x.q = phases.i_phase(static_cast<long long>(m.k1) * x.k.k1) * x.q *
          phases.j_phase(static_cast<long long>(m.k2) * x.k.k2);
  }
  return FiniteSignal(std::move(e));
}

// Points a of supp(g) whose translate a + nN lands in supp(h), paired with
// h(a + nN). The analysis coefficient of every modulation of T_{nN} g only
// depends on these pairs.
struct Overlap {
  Index2 k;
  Quaternion g_conj;
  Quaternion h;
};

std::vector<Overlap> overlap(const FiniteSignal& g, Index2 n, int N, const FiniteSignal& h) {
  std::vector<Overlap> out;
  const Index2 shift = n * N;
  for (const auto& e : g.entries()) {
    const Index2 k = e.k + shift;
    const Quaternion hk = h(k);
    if (!hk.is_zero()) out.push_back({k, e.q.conj(), hk});
  }
  return out;
}

Quaternion coefficient_from_overlap(const std::vector<Overlap>& ov, Index2 m,
                                    const PhaseTable& phases) {
  Quaternion c;
  for (const auto& o : ov) {
    c += phases.j_phase(-static_cast<long long>(m.k2) * o.k.k2) * o.g_conj *
         phases.i_phase(-static_cast<long long>(m.k1) * o.k.k1) * o.h;
  }
  return c;
}

template <typename Visit>
void for_each_coefficient(const WindowFamily& w, const FiniteSignal& h, Visit&& visit) {
  if (h.empty()) return;
  const int M = w.M();
  const int N = w.N();
  const PhaseTable phases(M);
  const IndexBox hb = h.bounding_box();
  for (int l = 0; l < w.L(); ++l) {
    const FiniteSignal& g = w.window(l);
    if (g.empty()) continue;
    for (Index2 n : contributing_translations(g.bounding_box(), hb, N).points()) {
      const auto ov = overlap(g, n, N, h);
      if (ov.empty()) continue;
      for (int m1 = 0; m1 < M; ++m1) {
        for (int m2 = 0; m2 < M; ++m2) {
          visit(AtomIndex{l, {m1, m2}, n}, coefficient_from_overlap(ov, {m1, m2}, phases));
        }
      }
    }
  }
}

}  // namespace

FiniteSignal modulate(const FiniteSignal& f, Index2 m, int M) {
  check_modulation(m, M);
  return modulate_with(f, m, PhaseTable(M));
}

FiniteSignal atom(const FiniteSignal& g, Index2 m, Index2 n, const GaborParams& params) {
  check_modulation(m, params.M());
  return modulate_with(translate(g, n, params.N()), m, PhaseTable(params.M()));
}

Quaternion coeff(const FiniteSignal& g, Index2 m, Index2 n, const FiniteSignal& h,
                 const GaborParams& params) {
  check_modulation(m, params.M());
  return coefficient_from_overlap(overlap(g, n, params.N(), h), m, PhaseTable(params.M()));
}

IndexBox contributing_translations(const IndexBox& box_g, const IndexBox& box_h, int N) {
  if (box_g.empty() || box_h.empty()) return {{0, 0}, {-1, -1}};
  // (box_g + nN) meets box_h  <=>  h.lo - g.hi <= nN <= h.hi - g.lo per axis.
  return {{ceil_div(box_h.lo.k1 - box_g.hi.k1, N), ceil_div(box_h.lo.k2 - box_g.hi.k2, N)},
          {floor_div(box_h.hi.k1 - box_g.lo.k1, N), floor_div(box_h.hi.k2 - box_g.lo.k2, N)}};
}

std::vector<AnalysisCoefficient> analysis(const WindowFamily& w, const FiniteSignal& h) {
  std::vector<AnalysisCoefficient> out;
  for_each_coefficient(w, h, [&](const AtomIndex& idx, const Quaternion& c) {
    out.push_back({idx, c});
  });
  return out;
}

double frame_functional(const WindowFamily& w, const FiniteSignal& h) {
  double total = 0.0;
  for_each_coefficient(w, h, [&](const AtomIndex&, const Quaternion& c) { total += c.norm2(); });
  return total;
}

FiniteSignal frame_operator_apply(const WindowFamily& w, const FiniteSignal& h) {
  const PhaseTable phases(w.M());
  const int N = w.N();
  std::map<Index2, Quaternion> acc;
  for_each_coefficient(w, h, [&](const AtomIndex& idx, const Quaternion& c) {
    if (c.is_zero()) return;
    const Index2 shift = idx.n * N;
    for (const auto& e : w.window(idx.l).entries()) {
      const Index2 k = e.k + shift;
      acc[k] += phases.i_phase(static_cast<long long>(idx.m.k1) * k.k1) * e.q *
                phases.j_phase(static_cast<long long>(idx.m.k2) * k.k2) * c;
    }
  });
  std::vector<SignalEntry> e;
  e.reserve(acc.size());
  for (const auto& [k, q] : acc) e.push_back({k, q});
  return FiniteSignal(std::move(e));
}

double char_sum(int M, long long k) {
  if (M <= 0) throw std::invalid_argument("char_sum: M must be positive");
  return k % M == 0 ? static_cast<double>(M) : 0.0;
}

}  // namespace qgabor
