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


#include <gtest/gtest.h>

#include "qgabor/constructors.hpp"
#include "qgabor/gabor_ops.hpp"
#include "qgabor/matrix_fn.hpp"
#include "qgabor/sampling.hpp"
#include "test_support.hpp"

namespace qgabor {
namespace {

using testing::near;

WindowFamily random_quaternion_family(Rng& rng, const GaborParams& params, const IndexBox& box) {
  std::vector<FiniteSignal> ws;
  for (int l = 0; l < params.L(); ++l) ws.push_back(random_signal(rng, box, 0.6));
  return {params, std::move(ws)};
}

TEST(MatrixFn, ProductEntryExamples) {
  const FiniteSignal g = FiniteSignal::delta({0, 0});
  EXPECT_EQ(product_entry(g, g, {0, 0}, {0, 0}, {0, 0}, 2, 1), Quaternion(1.0));
  EXPECT_EQ(product_entry(g, g, {0, 0}, {0, 0}, {1, 0}, 2, 1), Quaternion());
}

TEST(MatrixFn, ProductEntryAdjointSymmetry) {
  Rng rng(1);
  for (int t = 0; t < 30; ++t) {
    const int M = uniform_int(rng, 1, 3);
    const int N = uniform_int(rng, 1, 3);
    const FiniteSignal g = random_signal(rng, {{0, 0}, {3, 3}}, 0.6);
    const FiniteSignal h = random_signal(rng, {{-1, 0}, {2, 3}}, 0.6);
    const Index2 k{uniform_int(rng, -3, 3), uniform_int(rng, -3, 3)};
    const Index2 p{uniform_int(rng, -1, 1), uniform_int(rng, -1, 1)};
    const Index2 pp{uniform_int(rng, -1, 1), uniform_int(rng, -1, 1)};
    EXPECT_TRUE(near(product_entry(g, h, k, p, pp, M, N), conj(product_entry(h, g, k, pp, p, M, N)), 1e-12));
  }
}

TEST(MatrixFn, OnbRow) {
  const WindowFamily w = build_onb(5, 10);
  const IndexBox window = IndexBox::square(2);
  for (Index2 k : residues(10)) {
    const SparseRow row = aggregate_row0(w, w, k, window);
    for (const auto& [p, v] : row) {
      EXPECT_TRUE(near(v, p == Index2{0, 0} ? 1.0 / 25.0 : 0.0, 1e-15)) << k << ' ' << p;
    }
  }
}

TEST(MatrixFn, PointWindowRow) {
  const WindowFamily w = testing::point_family();
  const SparseRow row = aggregate_row0(w, w, {0, 0}, IndexBox::square(2));
  for (const auto& [p, v] : row) EXPECT_EQ(v, Quaternion(p == Index2{0, 0} ? 1.0 : 0.0));
}

TEST(MatrixFn, CorrelationRowMatchesDefinitionInsideCutoff) {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const GaborParams params(uniform_int(rng, 1, 3), uniform_int(rng, 1, 4), uniform_int(rng, 1, 4));
    const bool real = t % 2 == 0;
    const WindowFamily g = real ? random_real_family(rng, params, {{0, 0}, {5, 5}})
                                : random_quaternion_family(rng, params, {{0, 0}, {4, 4}});
    const WindowFamily h = real ? random_real_family(rng, params, {{-1, 0}, {4, 5}})
                                : random_quaternion_family(rng, params, {{-1, 0}, {3, 4}});
    const IndexBox cutoff = row_cutoff(g, h);
    const IndexBox wide{cutoff.lo - Index2{2, 2}, cutoff.hi + Index2{2, 2}};
    for (Index2 k : residues(params.N())) {
      const SparseRow exact = correlation_row(g, h, k);
      const SparseRow defined = aggregate_row0(g, h, k, wide);
      for (const auto& [p, v] : defined) {
        const auto it = exact.find(p);
        const Quaternion e = it == exact.end() ? Quaternion() : it->second;
        EXPECT_TRUE(near(v, e, 1e-12));
        if (!cutoff.contains(p)) EXPECT_EQ(v, Quaternion()) << "nonzero outside cutoff at " << p;
      }
      for (const auto& [p, v] : exact) EXPECT_TRUE(cutoff.contains(p));
    }
  }
}

TEST(MatrixFn, Periodicity) {
  Rng rng(3);
  const GaborParams params(2, 3, 2);
  const WindowFamily w = random_real_family(rng, params, {{0, 0}, {4, 4}});
  for (Index2 k : residues(2)) {
    const AggregateMatrix base = aggregate_truncated(w, k, 2);
    for (Index2 q : IndexBox::square(2).points()) {
      const AggregateMatrix shifted = aggregate_truncated(w, k + q * 2, 2);
      EXPECT_EQ(base.entries().size(), shifted.entries().size());
      for (const auto& [key, v] : base.entries()) {
        EXPECT_TRUE(near(v, shifted.entry(key.first, key.second), 1e-12));
      }
    }
  }
}

TEST(MatrixFn, TruncationIsSymmetricWithDiagonalEnergies) {
  Rng rng(4);
  const GaborParams params(2, 2, 3);
  const WindowFamily w = random_real_family(rng, params, {{0, 0}, {3, 3}});
  const AggregateMatrix m = aggregate_truncated(w, {1, 2}, 2);
  for (Index2 p : m.index_window()) {
    double d = 0.0;
    for (const auto& g : w.windows()) {
      for (const auto& e : g.entries()) {
        const Index2 r = Index2{1, 2} + p * 2 - e.k;
        if (r.k1 % 3 == 0 && r.k2 % 3 == 0) d += e.q.norm2();
      }
    }
    EXPECT_NEAR(m.entry(p, p).real(), d, 1e-12);
    for (Index2 pp : m.index_window()) EXPECT_TRUE(near(m.entry(p, pp), m.entry(pp, p), 1e-12));
  }
  const std::vector<double> dense = m.dense_real();
  ASSERT_EQ(dense.size(), m.dimension() * m.dimension());
  EXPECT_THROW(aggregate_truncated(w, {0, 0}, -1), std::invalid_argument);
}

TEST(MatrixFn, ShiftLaw) {
  Rng rng(5);
  const int M = 3;
  const GaborParams params(1, M, 4);
  const WindowFamily w = random_real_family(rng, params, {{0, 0}, {5, 5}});
  const Index2 k{1, 0};
  for (Index2 q : IndexBox::square(1).points()) {
    const AggregateMatrix at_k = aggregate_truncated(w, k, 3);
    const AggregateMatrix at_shift = aggregate_truncated(w, k + q * M, 2);
    for (Index2 p : at_shift.index_window()) {
      for (Index2 pp : at_shift.index_window()) {
        EXPECT_TRUE(near(at_k.entry(p + q, pp + q), at_shift.entry(p, pp), 1e-12));
      }
    }
  }
}

TEST(MatrixFn, RealAggregateRejectsQuaternionWindows) {
  const WindowFamily w(GaborParams(1, 2, 1), {FiniteSignal::delta({0, 0}, Quaternion::unit_i())});
  EXPECT_THROW(aggregate_truncated(w, {0, 0}, 1), std::invalid_argument);
  EXPECT_THROW(decompose_functional(w, FiniteSignal::delta({0, 0})), std::invalid_argument);
}

TEST(MatrixFn, FunctionalDecompositionMatchesEnumeration) {
  Rng rng(6);
  for (int t = 0; t < 60; ++t) {
    const GaborParams params(uniform_int(rng, 1, 4), uniform_int(rng, 1, 5), uniform_int(rng, 1, 5));
    const WindowFamily w = random_real_family(rng, params, {{0, 0}, {6, 6}});
    const FiniteSignal h = random_signal(rng, IndexBox::square(uniform_int(rng, 0, 8)), uniform(rng, 0.1, 0.9));
    const FunctionalDecomposition d = decompose_functional(w, h);
    const double f = frame_functional(w, h);
    EXPECT_NEAR(d.total(), f, 1e-9 * std::max(1.0, f));
    EXPECT_NEAR(std::sqrt(d.f2.imag_norm2()), 0.0, 1e-9 * std::max(1.0, f));
  }
}

}  // namespace
}  // namespace qgabor
