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

#ifndef QGABOR_SYMMETRIC_EIGEN_HPP_
#define QGABOR_SYMMETRIC_EIGEN_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace qgabor {

// Eigenvalues of a real symmetric n x n matrix (row-major), ascending.
//
// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// tol times the Frobenius norm of the input. Only the upper triangle is read.
// Throws std::invalid_argument on a size mismatch and std::runtime_error if
// max_sweeps is exhausted.
std::vector<double> symmetric_eigenvalues(std::span<const double> a, std::size_t n,
                                          double tol = 1e-14, int max_sweeps = 64);

struct ExtremalEigenvalues {
  double min = 0.0;
  double max = 0.0;
};

ExtremalEigenvalues extremal_eigenvalues(std::span<const double> a, std::size_t n);

}  // namespace qgabor

#endif  // QGABOR_SYMMETRIC_EIGEN_HPP_
