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


#ifndef QGABOR_ORACLE_HPP_
#define QGABOR_ORACLE_HPP_

// Brute-force reference evaluations. Deliberately slow and self-contained:
// this file uses only quaternion arithmetic and FiniteSignal, never the
// operator or criterion modules it is used to validate.

#include <vector>

#include "qgabor/quaternion.hpp"
#include "qgabor/signal.hpp"

namespace qgabor::oracle {

struct AtomId {
  int l = 0;
  Index2 m;
  Index2 n;
};

// Every atom E_{m/M} T_{nN} g_l is materialized pointwise and paired with h
// through the conjugate-left inner product.
double frame_functional(const WindowFamily& w, const FiniteSignal& h);

// Pairwise <atom_a, atom_b>, row a, column b.
std::vector<std::vector<Quaternion>> gram(const WindowFamily& w, const std::vector<AtomId>& atoms);

// sum_{l,n,m} <f, atom of g> <atom of h, phi>.
Quaternion mixed_sum(const WindowFamily& g, const WindowFamily& h, const FiniteSignal& f,
                     const FiniteSignal& phi);

}  // namespace qgabor::oracle

#endif  // QGABOR_ORACLE_HPP_
