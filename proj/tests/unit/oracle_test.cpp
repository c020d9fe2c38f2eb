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
#include "qgabor/duality.hpp"
#include "qgabor/gabor_ops.hpp"
#include "qgabor/oracle.hpp"
#include "qgabor/sampling.hpp"
#include "test_support.hpp"

namespace qgabor {
namespace {

using testing::near;

WindowFamily random_family(Rng& rng, bool real) {
  const GaborParams params(uniform_int(rng, 1, 3), uniform_int(rng, 1, 4), uniform_int(rng, 1, 4));
  if (real) return random_real_family(rng, params, {{0, 0}, {4, 4}});
  std::vector<FiniteSignal> ws;
  for (int l = 0; l < params.L(); ++l) ws.push_back(random_signal(rng, {{0, 0}, {3, 3}}, 0.5));
  return {params, std::move(ws)};
}

TEST(Oracle, FrameFunctionalMatchesOperatorModule) {
  Rng rng(1);
  for (int t = 0; t < 200; ++t) {
    const WindowFamily w = random_family(rng, t % 2 == 0);
    const FiniteSignal h = random_signal(rng, IndexBox::square(uniform_int(rng, 0, 5)), 0.4);
    const double reference = oracle::frame_functional(w, h);
    EXPECT_NEAR(frame_functional(w, h), reference, 1e-9 * std::max(1.0, reference));
  }
}

TEST(Oracle, FrameFunctionalSmallCases) {
  const WindowFamily point = testing::single(FiniteSignal::delta({0, 0}), 2, 1);
  EXPECT_EQ(oracle::frame_functional(point, FiniteSignal()), 0.0);
  EXPECT_NEAR(oracle::frame_functional(point, FiniteSignal::delta({0, 0})), 4.0, 1e-12);
  // One window, N large enough that only n = 0 meets h: the sum is over m only.
  const FiniteSignal g({{{0, 0}, 1.0}, {{1, 0}, 0.5}});
  const WindowFamily single = testing::single(g, 2, 50);
  const FiniteSignal h({{{0, 0}, Quaternion(0, 1, 0, 0)}, {{1, 0}, 2.0}});
  double expected = 0.0;
  for (int m1 = 0; m1 < 2; ++m1) {
    for (int m2 = 0; m2 < 2; ++m2) expected += inner(atom(g, {m1, m2}, {0, 0}, single.params()), h).norm2();
  }
  EXPECT_NEAR(oracle::frame_functional(single, h), expected, 1e-12);
}

TEST(Oracle, GramOfOrthonormalBasis) {
  const WindowFamily w = build_onb(5, 10);
  Rng rng(2);
  std::vector<oracle::AtomId> ids;
  while (ids.size() < 10) {
    oracle::AtomId a{uniform_int(rng, 0, 3), {uniform_int(rng, 0, 4), uniform_int(rng, 0, 4)},
                     {uniform_int(rng, -1, 1), uniform_int(rng, -1, 1)}};
    bool seen = false;
    for (const auto& b : ids) seen = seen || (a.l == b.l && a.m == b.m && a.n == b.n);
    if (!seen) ids.push_back(a);
  }
  const auto gram = oracle::gram(w, ids);
  for (std::size_t r = 0; r < ids.size(); ++r) {
    for (std::size_t c = 0; c < ids.size(); ++c) EXPECT_TRUE(near(gram[r][c], r == c ? 1.0 : 0.0, 1e-9));
  }
  ids.push_back(ids[0]);
  const auto dup = oracle::gram(w, ids);
  EXPECT_TRUE(near(dup[0][ids.size() - 1], 1.0, 1e-9));
}

TEST(Oracle, GramOfEmptyWindowIsZero) {
  const WindowFamily w = build_parseval(16, 3, 5);
  const auto gram = oracle::gram(w, {{15, {1, 1}, {0, 0}}, {0, {0, 0}, {0, 0}}});
  EXPECT_EQ(gram[0][0], Quaternion());
  EXPECT_EQ(gram[0][1], Quaternion());
  EXPECT_THROW(oracle::gram(w, {{16, {0, 0}, {0, 0}}}), std::invalid_argument);
}

TEST(Oracle, MixedSumMatchesDuality) {
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const GaborParams params(uniform_int(rng, 1, 3), uniform_int(rng, 1, 3), uniform_int(rng, 1, 4));
    const WindowFamily g = random_real_family(rng, params, {{0, 0}, {3, 3}});
    const WindowFamily h = random_real_family(rng, params, {{0, 0}, {3, 3}});
    const FiniteSignal f = random_signal(rng, IndexBox::square(3), 0.4);
    const FiniteSignal phi = random_signal(rng, IndexBox::square(3), 0.4);
    const Quaternion reference = oracle::mixed_sum(g, h, f, phi);
    EXPECT_TRUE(near(mixed_sum(g, h, f, phi), reference, 1e-9 * std::max(1.0, reference.abs())));
  }
  const WindowFamily p = build_parseval(4, 3, 5);
  EXPECT_EQ(oracle::mixed_sum(p, p, FiniteSignal(), FiniteSignal()), Quaternion());
  const FiniteSignal f = random_signal(rng, IndexBox::square(4), 0.5);
  const FiniteSignal phi = random_signal(rng, IndexBox::square(4), 0.5);
  EXPECT_TRUE(near(oracle::mixed_sum(p, p, f, phi), inner(f, phi), 1e-9));
}

}  // namespace
}  // namespace qgabor
