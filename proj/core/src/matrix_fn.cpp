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

#include "qgabor/matrix_fn.hpp"

#include <stdexcept>

namespace qgabor {

namespace {

Quaternion adjoint_of(const Quaternion& q, Adjoint adjoint) {
  return adjoint == Adjoint::conjugate ? q.conj() : q;
}

bool divisible(Index2 v, int d) { return v.k1 % d == 0 && v.k2 % d == 0; }

Index2 exact_div(Index2 v, int d) { return {v.k1 / d, v.k2 / d}; }

}  // namespace

Adjoint natural_adjoint(const WindowFamily& g, const WindowFamily& h) {
  return g.is_real() && h.is_real() ? Adjoint::transpose : Adjoint::conjugate;
}

Quaternion product_entry(const FiniteSignal& g, const FiniteSignal& h, Index2 k, Index2 p,
                         Index2 pp, int M, int N, Adjoint adjoint) {
  // Each a in supp(g) fixes the unique n with k + pM - nN = a (if any);
  // the partner point is then k + p'M - nN = a + (p' - p)M.
  Quaternion s;
  const Index2 row_point = k + p * M;
  const Index2 offset = (pp - p) * M;
  for (const auto& e : g.entries()) {
    if (!divisible(row_point - e.k, N)) continue;
    const Quaternion hb = h(e.k + offset);
    if (!hb.is_zero()) s += e.q * adjoint_of(hb, adjoint);
  }
  return s;
}

IndexBox row_cutoff(const WindowFamily& g, const WindowFamily& h) {
  require_same_params(g, h, "row_cutoff");
  const int M = g.M();
  IndexBox box{{0, 0}, {-1, -1}};
  for (int l = 0; l < g.L(); ++l) {
    const FiniteSignal& gl = g.window(l);
    const FiniteSignal& hl = h.window(l);
    if (gl.empty() || hl.empty()) continue;
    const IndexBox gb = gl.bounding_box();
    const IndexBox hb = hl.bounding_box();
    box = box.hull({{ceil_div(hb.lo.k1 - gb.hi.k1, M), ceil_div(hb.lo.k2 - gb.hi.k2, M)},
                    {floor_div(hb.hi.k1 - gb.lo.k1, M), floor_div(hb.hi.k2 - gb.lo.k2, M)}});
  }
  return box;
}

SparseRow aggregate_row0(const WindowFamily& g, const WindowFamily& h, Index2 k,
                         const IndexBox& window) {
  require_same_params(g, h, "aggregate_row0");
  const Adjoint adjoint = natural_adjoint(g, h);
  SparseRow row;
  for (Index2 p : window.points()) {
    Quaternion s;
    for (int l = 0; l < g.L(); ++l) {
      s += product_entry(g.window(l), h.window(l), k, {0, 0}, p, g.M(), g.N(), adjoint);
    }
    row.emplace(p, s);
  }
  return row;
}

SparseRow correlation_row(const WindowFamily& g, const WindowFamily& h, Index2 k) {
  require_same_params(g, h, "correlation_row");
  const Adjoint adjoint = natural_adjoint(g, h);
  const int M = g.M();
  const int N = g.N();
  SparseRow row;
  for (int l = 0; l < g.L(); ++l) {
    const FiniteSignal& hl = h.window(l);
    for (const auto& a : g.window(l).entries()) {
      if (!divisible(k - a.k, N)) continue;
      for (const auto& b : hl.entries()) {
        const Index2 d = b.k - a.k;
        if (!divisible(d, M)) continue;
        row[exact_div(d, M)] += a.q * adjoint_of(b.q, adjoint);
      }
    }
  }
  return row;
}

double diagonal(const WindowFamily& w, Index2 k) {
  double s = 0.0;
  for (const auto& g : w.windows()) {
    for (const auto& e : g.entries()) {
      if (divisible(k - e.k, w.N())) s += e.q.norm2();
    }
  }
  return s;
}

std::optional<RowViolation> first_row_violation(const WindowFamily& g, const WindowFamily& h,
                                                double tol) {
  require_same_params(g, h, "row criterion");
  const double target = 1.0 / (static_cast<double>(g.M()) * g.M());
  for (Index2 k : residues(g.N())) {
    const SparseRow row = correlation_row(g, h, k);
    const auto zero = row.find({0, 0});
    const Quaternion d = zero == row.end() ? Quaternion{} : zero->second;
    if (distance(d, target) > tol) return RowViolation{k, {0, 0}, d, target};
    for (const auto& [p, v] : row) {
      if (p == Index2{0, 0}) continue;
      if (v.abs() > tol) return RowViolation{k, p, v, 0.0};
    }
  }
  return std::nullopt;
}

AggregateMatrix::AggregateMatrix(Index2 k, int radius, std::map<Key, Quaternion> entries)
    : k_(k), radius_(radius), index_(IndexBox::square(radius).points()),
      entries_(std::move(entries)) {
  if (radius < 0) throw std::invalid_argument("AggregateMatrix: radius must be >= 0");
}

Quaternion AggregateMatrix::entry(Index2 p, Index2 pp) const {
  const auto it = entries_.find({p, pp});
  return it == entries_.end() ? Quaternion{} : it->second;
}

std::vector<double> AggregateMatrix::dense_real() const {
  const std::size_t n = index_.size();
  const int side = 2 * radius_ + 1;
  auto pos = [&](Index2 p) {
    return static_cast<std::size_t>((p.k1 + radius_) * side + (p.k2 + radius_));
  };
  std::vector<double> out(n * n, 0.0);
  for (const auto& [key, v] : entries_) out[pos(key.first) * n + pos(key.second)] = v.real();
  return out;
}

AggregateMatrix aggregate_truncated(const WindowFamily& g, const WindowFamily& h, Index2 k,
                                    int radius, Adjoint adjoint) {
  require_same_params(g, h, "aggregate_truncated");
  if (radius < 0) throw std::invalid_argument("aggregate_truncated: radius must be >= 0");
  const int M = g.M();
  const int N = g.N();
  const IndexBox window = IndexBox::square(radius);
  std::map<AggregateMatrix::Key, Quaternion> entries;
  for (int l = 0; l < g.L(); ++l) {
    const FiniteSignal& hl = h.window(l);
    for (Index2 p : window.points()) {
      const Index2 row_point = k + p * M;
      for (const auto& a : g.window(l).entries()) {
        if (!divisible(row_point - a.k, N)) continue;
        for (const auto& b : hl.entries()) {
          const Index2 d = b.k - a.k;
          if (!divisible(d, M)) continue;
          const Index2 pp = p + exact_div(d, M);
          if (!window.contains(pp)) continue;
          entries[{p, pp}] += a.q * adjoint_of(b.q, adjoint);
        }
      }
    }
  }
  std::erase_if(entries, [](const auto& kv) { return kv.second.is_zero(); });
  return {k, radius, std::move(entries)};
}

AggregateMatrix aggregate_truncated(const WindowFamily& w, Index2 k, int radius) {
  require_real(w, "aggregate_truncated");
  return aggregate_truncated(w, w, k, radius, Adjoint::transpose);
}

FunctionalDecomposition decompose_functional(const WindowFamily& w, const FiniteSignal& h) {
  require_real(w, "decompose_functional");
  const int M = w.M();
  const double M2 = static_cast<double>(M) * M;
  FunctionalDecomposition out;
  for (const auto& e : h.entries()) {
    const SparseRow row = correlation_row(w, w, e.k);
    for (const auto& [p, v] : row) {
      const double r = v.real();
      if (p == Index2{0, 0}) {
        out.f1 += M2 * e.q.norm2() * r;
      } else {
        const Quaternion partner = h(e.k + p * M);
        if (!partner.is_zero()) out.f2 += e.q.conj() * partner * (M2 * r);
      }
    }
  }
  return out;
}

}  // namespace qgabor
