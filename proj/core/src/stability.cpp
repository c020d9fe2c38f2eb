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


#include "qgabor/stability.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "qgabor/gabor_ops.hpp"
#include "qgabor/sampling.hpp"
#include "qgabor/symmetric_eigen.hpp"

namespace qgabor {

PerturbedBounds perturbed_bounds(double A, double B, double R) {
  if (!(A > 0.0)) throw std::invalid_argument("perturbed_bounds: need A > 0");
  if (B < A) throw std::invalid_argument("perturbed_bounds: need A <= B");
  if (R < 0.0) throw std::invalid_argument("perturbed_bounds: need R >= 0");
  PerturbedBounds out;
  out.applicable = R < A;
  if (out.applicable) {
    const double lo = 1.0 - std::sqrt(R / A);
    const double hi = 1.0 + std::sqrt(R / B);
    out.lower = A * lo * lo;
    out.upper = B * hi * hi;
  }
  return out;
}

double perturbation_R(const WindowFamily& g, const WindowFamily& h) {
  require_same_params(g, h, "perturbation_R");
  require_real(g, "perturbation_R");
  require_real(h, "perturbation_R");
  return bessel_bound_sufficient(g - h);
}

StabilityReport stability_verdict(const WindowFamily& g, const WindowFamily& h,
                                  std::optional<double> A, std::optional<double> B) {
  StabilityReport out;
  out.R = perturbation_R(g, h);
  if (A && B) {
    out.bounds_source = "supplied";
  } else {
    std::optional<FrameBounds> fb;
    if (is_narrow_support(g)) {
      const FrameReport rep = narrow_support_frame(g).report;
      if (rep.verdict == Verdict::frame) {
        fb = FrameBounds{*rep.lower_bound, *rep.upper_bound};
        out.bounds_source = "narrow_support";
      }
    } else if ((fb = frame_bounds_sufficient(g))) {
      out.bounds_source = "row_sum_sufficient";
    }
    if (!fb) {
      throw std::invalid_argument(
          "stability_verdict: no certified frame bounds for g; supply A and B");
    }
    if (A || B) out.bounds_source += "+supplied";
    if (!A) A = fb->lower;
    if (!B) B = fb->upper;
  }
  if (!(*A > 0.0)) throw std::invalid_argument("stability_verdict: need A > 0");
  out.A = *A;
  out.B = *B;
  const PerturbedBounds pb = perturbed_bounds(out.A, out.B, out.R);
  out.applicable = pb.applicable;
  out.new_lower = pb.lower;
  out.new_upper = pb.upper;
  return out;
}

PerturbationFunctionalCheck perturbation_functional_check(const WindowFamily& g,
                                                          const WindowFamily& h, int trials,
                                                          std::uint64_t seed, double tol) {
  if (trials < 1) throw std::invalid_argument("perturbation_functional_check: trials must be >= 1");
  PerturbationFunctionalCheck out;
  out.R = perturbation_R(g, h);
  const WindowFamily diff = g - h;
  Rng rng(seed);
  const int span = g.N() + g.M();
  const IndexBox box{{-span, -span}, {span, span}};
  for (int t = 0; t < trials; ++t) {
    const FiniteSignal u = random_signal(rng, box, uniform(rng, 0.1, 0.6));
    const double energy = u.norm2();
    const double functional = frame_functional(diff, u);

    // Coefficients of the difference atoms, formed as differences of atoms.
    std::map<AtomIndex, Quaternion> coeffs;
    for (const auto& c : analysis(g, u)) coeffs[c.index] += c.value;
    for (const auto& c : analysis(h, u)) coeffs[c.index] -= c.value;
    double split = 0.0;
    for (const auto& [idx, c] : coeffs) split += c.norm2();

    out.identity_error = std::max(out.identity_error, std::abs(functional - split));
    out.max_ratio = std::max(out.max_ratio, functional / energy);
    if (functional > out.R * energy + tol * energy * std::max(1.0, out.R)) out.holds = false;
  }
  if (out.identity_error > tol * std::max(1.0, out.R)) out.holds = false;
  return out;
}

namespace {

std::vector<double> gram_operator(std::span<const std::vector<double>> vectors, std::size_t d) {
  std::vector<double> s(d * d, 0.0);
  for (const auto& u : vectors) {
    if (u.size() != d) throw std::invalid_argument("finite frame: vector length differs from d");
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) s[a * d + b] += u[a] * u[b];
    }
  }
  return s;
}

}  // namespace

FrameBounds finite_frame_bounds(std::span<const std::vector<double>> vectors, std::size_t d) {
  const auto ev = extremal_eigenvalues(gram_operator(vectors, d), d);
  return {ev.min, ev.max};
}

double finite_perturbation_R(std::span<const std::vector<double>> u,
                             std::span<const std::vector<double>> v, std::size_t d) {
  if (u.size() != v.size()) throw std::invalid_argument("finite_perturbation_R: size mismatch");
  std::vector<std::vector<double>> diff(u.size(), std::vector<double>(d));
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].size() != d || v[i].size() != d) {
      throw std::invalid_argument("finite_perturbation_R: vector length differs from d");
    }
    for (std::size_t a = 0; a < d; ++a) diff[i][a] = u[i][a] - v[i][a];
  }
  return extremal_eigenvalues(gram_operator(diff, d), d).max;
}

}  // namespace qgabor
