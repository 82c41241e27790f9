// Copyright 2026 The fgc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "fgc/min_cut.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

TEST(MinCut, Triangle) {
  const Multigraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_DOUBLE_EQ(min_cut(g, Capacities::uniform(3, 1.0)).value, 2.0);
}

TEST(MinCut, FourCycleAgreesWithAllSevenBipartitions) {
  const Multigraph g = testing::cycle(4);
  const Capacities caps = Capacities::uniform(4, 1.0);
  ASSERT_EQ(testing::all_sides(4).size(), 7U);
  EXPECT_DOUBLE_EQ(testing::brute_min_cut(g, caps), 2.0);
  EXPECT_DOUBLE_EQ(min_cut(g, caps).value, 2.0);
}

TEST(MinCut, ParallelEdges) {
  const Multigraph g(2, {{0, 1}, {0, 1}, {1, 0}});
  const MinCutResult r = min_cut(g, Capacities({6.0, 2.0, 2.0}));
  EXPECT_DOUBLE_EQ(r.value, 10.0);
  EXPECT_EQ(r.cut, Cut::from_side(2, {1}));
}

TEST(MinCut, DisconnectedGraphIsAnError) {
  try {
    min_cut(Multigraph(4, {{0, 1}, {2, 3}}), Capacities::uniform(2, 1.0));
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }
}

TEST(MinCut, ReturnedCutHasReturnedValue) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Multigraph g = testing::random_connected_graph(rng, n, n + static_cast<int>(rng() % 12));
    std::vector<double> values;
    for (int e = 0; e < g.edge_count(); ++e) values.push_back(static_cast<double>(rng() % 5) * 0.5);
    const Capacities caps(values);
    const MinCutResult r = min_cut(g, caps);
    EXPECT_NEAR(r.value, testing::brute_min_cut(g, caps), 1e-12);
    EXPECT_DOUBLE_EQ(cut_capacity(g, caps, r.cut), r.value);
  }
}

}  // namespace
}  // namespace fgc
