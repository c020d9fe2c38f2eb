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


#include "qgabor/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qgabor/gabor_ops.hpp"
#include "qgabor/sampling.hpp"

namespace qgabor {

namespace {

struct Run {
  int begin;
  int end;  // exclusive
};

std::vector<Run> runs(int M, int N) {
  std::vector<Run> out;
  int start = 0;
  for (; start + M <= N; start += M) out.push_back({start, start + M});
  if (start < N) out.push_back({start, N});
  return out;
}

WindowFamily product_windows(int K, int M, int N) {
  const std::vector<Run> rs = runs(M, N);
  std::vector<FiniteSignal> windows;
  windows.reserve(static_cast<std::size_t>(K) * K);
  const double value = 1.0 / M;
  for (int r = 0; r < K; ++r) {
    for (int rp = 0; rp < K; ++rp) {
      if (r < static_cast<int>(rs.size()) && rp < static_cast<int>(rs.size())) {
        const Run a = rs[static_cast<std::size_t>(r)];
        const Run b = rs[static_cast<std::size_t>(rp)];
        windows.push_back(FiniteSignal::indicator({{a.begin, b.begin}, {a.end - 1, b.end - 1}}, value));
      } else {
        windows.emplace_back();
      }
    }
  }
  return {GaborParams(K * K, M, N), std::move(windows)};
}

long long isqrt(long long v) {
  auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

bool perfect_square_check(long long L) {
  if (L < 1) return false;
  const long long r = isqrt(L);
  return r * r == L;
}

WindowFamily build_parseval(int L, int M, int N) {
  const GaborParams params(L, M, N);
  if (!perfect_square_check(L)) {
    throw std::invalid_argument("build_parseval: L=" + std::to_string(L) +
                                " is not a perfect square");
  }
  const long long lhs = static_cast<long long>(N) * N;
  const long long rhs = static_cast<long long>(L) * M * M;
  if (lhs >= rhs) {
    throw std::invalid_argument("build_parseval: need N^2 < L M^2, got N^2=" +
                                std::to_string(lhs) + ", L M^2=" + std::to_string(rhs) +
                                (lhs == rhs ? " (use build_onb for equality)" : ""));
  }
  return product_windows(static_cast<int>(isqrt(L)), params.M(), params.N());
}

WindowFamily build_onb(int M, int N) {
  const GaborParams check(1, M, N);
  if (N % M != 0) {
    throw std::invalid_argument(
        "build_onb: no Gabor orthonormal basis for M=" + std::to_string(M) +
        ", N=" + std::to_string(N) + ": N^2 = L M^2 has no perfect-square solution L since M does not divide N");
  }
  const int K = N / M;
  return product_windows(K, M, N);
}

OnbExistence onb_existence(int M, int N) {
  if (M <= 0 || N <= 0 || N % M != 0) return {};
  const int K = N / M;
  return {true, K * K};
}

bool empirical_parseval(const WindowFamily& w, int trials, std::uint64_t seed, double tol) {
  Rng rng(seed);
  const int span = w.N() + w.M();
  const IndexBox box{{-span, -span}, {span, span}};
  for (int t = 0; t < trials; ++t) {
    const FiniteSignal h = random_signal(rng, box, uniform(rng, 0.05, 0.5));
    const double e = h.norm2();
    if (std::abs(frame_functional(w, h) - e) > tol * e) return false;
  }
  return true;
}

OnbCheck onb_check(const WindowFamily& w, double tol, std::size_t sample, std::uint64_t seed) {
  OnbCheck out;
  const long long N = w.N();
  const long long M = w.M();
  out.ratio_ok = N * N == static_cast<long long>(w.L()) * M * M;
  if (w.is_real()) {
    out.parseval_method = "row_criterion";
    out.parseval = parseval_check(w, tol).holds;
  } else {
    out.parseval_method = "enumeration";
    out.parseval = empirical_parseval(w, 50, seed, tol);
  }

  // Distinct atoms drawn from l in N_L, m in N_M^2, n in [-1, 1]^2.
  Rng rng(seed);
  std::set<AtomIndex> picked;
  const std::size_t universe = static_cast<std::size_t>(w.L()) * M * M * 9;
  const std::size_t want = std::min(sample, universe);
  while (picked.size() < want) {
    picked.insert(AtomIndex{uniform_int(rng, 0, w.L() - 1),
                            {uniform_int(rng, 0, w.M() - 1), uniform_int(rng, 0, w.M() - 1)},
                            {uniform_int(rng, -1, 1), uniform_int(rng, -1, 1)}});
  }
  std::vector<FiniteSignal> atoms;
  for (const auto& a : picked) atoms.push_back(atom(w.window(a.l), a.m, a.n, w.params()));
  out.sampled_atoms = atoms.size();
  for (std::size_t a = 0; a < atoms.size(); ++a) {
    for (std::size_t b = a; b < atoms.size(); ++b) {
      const Quaternion expected = a == b ? 1.0 : 0.0;
      out.max_gram_error = std::max(out.max_gram_error, distance(inner(atoms[a], atoms[b]), expected));
    }
  }
  out.orthonormal_sample = out.max_gram_error <= tol;
  out.holds = out.parseval && out.ratio_ok && out.orthonormal_sample;
  return out;
}

}  // namespace qgabor
