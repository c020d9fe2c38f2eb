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


#include "qgabor/oracle.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <stdexcept>

namespace qgabor::oracle {

namespace {

using Pointwise = std::map<Index2, Quaternion>;

// E_{m/M} T_{nN} g evaluated at every point of its support.
Pointwise materialize(const FiniteSignal& g, Index2 m, Index2 n, int M, int N) {
  Pointwise out;
  const double w = 2.0 * std::numbers::pi / M;
  for (const auto& e : g.entries()) {
    const Index2 k{e.k.k1 + n.k1 * N, e.k.k2 + n.k2 * N};
    const double t1 = w * m.k1 * k.k1;
    const double t2 = w * m.k2 * k.k2;
    const Quaternion left(std::cos(t1), std::sin(t1), 0.0, 0.0);
    const Quaternion right(std::cos(t2), 0.0, std::sin(t2), 0.0);
    out[k] = left * e.q * right;
  }
  return out;
}

Quaternion inner_with_signal(const Pointwise& a, const FiniteSignal& h) {
  Quaternion s;
  for (const auto& [k, v] : a) s += v.conj() * h(k);
  return s;
}

Quaternion signal_with_inner(const FiniteSignal& f, const Pointwise& a) {
  Quaternion s;
  for (const auto& [k, v] : a) s += f(k).conj() * v;
  return s;
}

bool divides(int N, int v) { return v % N == 0; }

// Translations n for which T_{nN} g meets supp(h), found by pairing points.
std::set<Index2> meeting_translations(const FiniteSignal& g, const FiniteSignal& h, int N) {
  std::set<Index2> out;
  for (const auto& a : g.entries()) {
    for (const auto& b : h.entries()) {
      const int d1 = b.k.k1 - a.k.k1;
      const int d2 = b.k.k2 - a.k.k2;
      if (divides(N, d1) && divides(N, d2)) out.insert({d1 / N, d2 / N});
    }
  }
  return out;
}

void require_match(const WindowFamily& g, const WindowFamily& h) {
  if (!(g.params() == h.params())) throw std::invalid_argument("oracle: parameter mismatch");
}

}  // namespace

double frame_functional(const WindowFamily& w, const FiniteSignal& h) {
  const int M = w.M();
  double total = 0.0;
  for (int l = 0; l < w.L(); ++l) {
    for (Index2 n : meeting_translations(w.window(l), h, w.N())) {
      for (int m1 = 0; m1 < M; ++m1) {
        for (int m2 = 0; m2 < M; ++m2) {
          const Quaternion c =
              inner_with_signal(materialize(w.window(l), {m1, m2}, n, M, w.N()), h);
          total += c.norm2();
        }
      }
    }
  }
  return total;
}

std::vector<std::vector<Quaternion>> gram(const WindowFamily& w, const std::vector<AtomId>& atoms) {
  std::vector<Pointwise> mats;
  mats.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (a.l < 0 || a.l >= w.L()) throw std::invalid_argument("oracle::gram: window index out of range");
    mats.push_back(materialize(w.window(a.l), a.m, a.n, w.M(), w.N()));
  }
  std::vector<std::vector<Quaternion>> out(atoms.size(), std::vector<Quaternion>(atoms.size()));
  for (std::size_t r = 0; r < atoms.size(); ++r) {
    for (std::size_t c = 0; c < atoms.size(); ++c) {
      Quaternion s;
      for (const auto& [k, v] : mats[r]) {
        const auto it = mats[c].find(k);
        if (it != mats[c].end()) s += v.conj() * it->second;
      }
      out[r][c] = s;
    }
  }
  return out;
}

Quaternion mixed_sum(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                     const FiniteSignal& phi) {
  require_match(g, h);
  const int M = g.M();
  const int N = g.N();
  Quaternion total;
  for (int l = 0; l < g.L(); ++l) {
    const std::set<Index2> nf = meeting_translations(g.window(l), f, N);
    const std::set<Index2> nphi = meeting_translations(h.window(l), phi, N);
    for (Index2 n : nf) {
      if (!nphi.contains(n)) continue;
      for (int m1 = 0; m1 < M; ++m1) {
        for (int m2 = 0; m2 < M; ++m2) {
          const Quaternion a = signal_with_inner(f, materialize(g.window(l), {m1, m2}, n, M, N));
          const Quaternion b = inner_with_signal(materialize(h.window(l), {m1, m2}, n, M, N), phi);
          total += a * b;
        }
      }
    }
  }
  return total;
}

}  // namespace qgabor::oracle
