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


#include "qgabor/duality.hpp"

#include <algorithm>
#include <map>
#include <numbers>
#include <string>

#include "qgabor/gabor_ops.hpp"
#include "qgabor/sampling.hpp"

namespace qgabor {

DualCheck dual_check(const WindowFamily& g, const WindowFamily& h, double tol) {
  require_same_params(g, h, "dual_check");
  require_real(g, "dual_check");
  require_real(h, "dual_check");
  DualCheck out;
  out.violation = first_row_violation(g, h, tol);
  out.holds = !out.violation.has_value();
  return out;
}

Quaternion mixed_sum_direct(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                            const FiniteSignal& phi) {
  require_same_params(g, h, "mixed_sum");
  std::map<AtomIndex, Quaternion> from_f;
  for (const auto& c : analysis(g, f)) from_f.emplace(c.index, c.value);
  Quaternion total;
  for (const auto& c : analysis(h, phi)) {
    const auto it = from_f.find(c.index);
    if (it == from_f.end()) continue;
    // <f, a> = conj(<a, f>).
    total += it->second.conj() * c.value;
  }
  return total;
}

Quaternion mixed_sum_closed_form(const WindowFamily& g, const WindowFamily& h,
                                 const FiniteSignal& f, const FiniteSignal& phi) {
  require_same_params(g, h, "mixed_sum");
  require_real(g, "mixed_sum");
  require_real(h, "mixed_sum");
  const int M = g.M();
  const double M2 = static_cast<double>(M) * M;
  Quaternion total;
  for (const auto& e : f.entries()) {
    for (const auto& [p, v] : correlation_row(g, h, e.k)) {
      const Quaternion partner = phi(e.k + p * M);
      if (!partner.is_zero()) total += e.q.conj() * partner * (M2 * v.real());
    }
  }
  return total;
}

Quaternion mixed_sum(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                     const FiniteSignal& phi) {
  const Quaternion direct = mixed_sum_direct(g, h, f, phi);
  const Quaternion closed = mixed_sum_closed_form(g, h, f, phi);
  const double gap = distance(direct, closed);
  if (gap > 1e-9 * std::max(1.0, direct.abs())) {
    throw ConsistencyError("mixed_sum: direct and closed-form evaluations differ by " +
                           std::to_string(gap));
  }
  return direct;
}

ReconstructionCheck reconstruction_check(const WindowFamily& g, const WindowFamily& h,
                                         int trials, std::uint64_t seed, double tol) {
  require_same_params(g, h, "reconstruction_check");
  if (trials < 1) throw std::invalid_argument("reconstruction_check: trials must be >= 1");
  Rng rng(seed);
  const int side = g.N() + g.M();
  const IndexBox box{{0, 0}, {side, side}};
  ReconstructionCheck out;
  for (int t = 0; t < trials; ++t) {
    const FiniteSignal f = random_signal(rng, box, uniform(rng, 0.2, 0.8));
    const FiniteSignal phi = random_signal(rng, box, uniform(rng, 0.2, 0.8));
    const Quaternion value = mixed_sum(g, h, f, phi);
    const Quaternion expected = inner(f, phi);
    out.trials = t + 1;
    if (distance(value, expected) > tol * std::max(1.0, f.norm() * phi.norm())) {
      out.holds = false;
      out.failed_trial = t;
      out.value = value;
      out.expected = expected;
      return out;
    }
  }
  return out;
}

ExponentialBasisCheck periodic_exponential_basis_check(int M, double tol) {
  if (M < 1) throw std::invalid_argument("periodic_exponential_basis_check: M must be >= 1");
  const double two_pi = 2.0 * std::numbers::pi;
  std::vector<FiniteSignal> basis;
  for (int m1 = 0; m1 < M; ++m1) {
    for (int m2 = 0; m2 < M; ++m2) {
      std::vector<SignalEntry> e;
      for (Index2 k : residues(M)) {
        e.push_back({k, exp_i(two_pi * m1 * k.k1 / M) * (1.0 / M) * exp_j(two_pi * m2 * k.k2 / M)});
      }
      basis.emplace_back(std::move(e));
    }
  }
  ExponentialBasisCheck out;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Quaternion expected = a == b ? 1.0 : 0.0;
      out.max_error = std::max(out.max_error, distance(inner(basis[a], basis[b]), expected));
    }
  }
  out.holds = out.max_error <= tol;
  return out;
}

WindowFamily canonical_dual_narrow(const WindowFamily& w) {
  const NarrowSupportFrame frame = narrow_support_frame(w);
  std::vector<FiniteSignal> duals;
  duals.reserve(static_cast<std::size_t>(w.L()));
  for (const auto& g : w.windows()) duals.push_back(frame.apply_S_inverse(g));
  return {w.params(), std::move(duals)};
}

}  // namespace qgabor
