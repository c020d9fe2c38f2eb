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

#include "qgabor/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qgabor {

std::vector<double> symmetric_eigenvalues(std::span<const double> a, std::size_t n, double tol,
                                          int max_sweeps) {
  if (a.size() != n * n) throw std::invalid_argument("symmetric_eigenvalues: size mismatch");
  if (n == 0) return {};

  // Symmetrize from the upper triangle.
  std::vector<double> m(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m[i * n + j] = m[j * n + i] = a[i * n + j];
  }
  auto at = [&](std::size_t i, std::size_t j) -> double& { return m[i * n + j]; };

  double total = 0.0;
  for (double x : m) total += x * x;
  const double threshold = tol * tol * std::max(total, 1e-300);

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    }
    if (off <= threshold) {
      std::vector<double> ev(n);
      for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
      std::sort(ev.begin(), ev.end());
      return ev;
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double app = at(p, p);
        const double aqq = at(q, q);
        // Rotation annihilating (p, q); the smaller root keeps |angle| <= pi/4.
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          at(r, p) = at(p, r) = c * arp - s * arq;
          at(r, q) = at(q, r) = s * arp + c * arq;
        }
        at(p, p) = app - t * apq;
        at(q, q) = aqq + t * apq;
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  throw std::runtime_error("symmetric_eigenvalues: Jacobi iteration did not converge");
}

ExtremalEigenvalues extremal_eigenvalues(std::span<const double> a, std::size_t n) {
  const auto ev = symmetric_eigenvalues(a, n);
  if (ev.empty()) return {};
  return {ev.front(), ev.back()};
}

}  // namespace qgabor
