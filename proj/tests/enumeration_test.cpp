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

#include "fgc/cut_enumeration.hpp"
#include "fgc/exact.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

std::vector<Cut> cuts_of(const std::vector<WeightedCut>& list) {
  std::vector<Cut> out;
  for (const WeightedCut& w : list) out.push_back(w.cut);
  return out;
}

EnumerationOptions exhaustive() {
  EnumerationOptions o;
  o.mode = EnumerationMode::kExhaustive;
  return o;
}

EnumerationOptions contraction(std::uint64_t seed = 1) {
  EnumerationOptions o;
  o.mode = EnumerationMode::kContraction;
  o.fail_probability = 1e-6;
  o.seed = seed;
  return o;
}

TEST(Enumeration, FourCycleBelowThree) {
  const Multigraph g = testing::cycle(4);
  const auto cuts = enumerate_cuts_below(g, Capacities::uniform(4, 1.0), 3.0, exhaustive());
  ASSERT_EQ(cuts.size(), 6U);
  for (const WeightedCut& w : cuts) EXPECT_DOUBLE_EQ(w.capacity, 2.0);
  for (const WeightedCut& w : cuts) EXPECT_NE(w.cut, Cut::from_side(4, {1, 3}));
}

TEST(Enumeration, ThresholdAtMinCutIsEmpty) {
  const Multigraph g = testing::cycle(5);
  EXPECT_TRUE(enumerate_cuts_below(g, Capacities::uniform(5, 1.0), 2.0, exhaustive()).empty());
  EXPECT_TRUE(enumerate_cuts_below(g, Capacities::uniform(5, 1.0), 2.0, contraction()).empty());
}

TEST(Enumeration, CycleArcCount) {
  for (int n = 3; n <= 12; ++n) {
    const Multigraph g = testing::cycle(n);
    const Capacities caps = Capacities::uniform(n, 1.0);
    // Oracle: cuts of capacity exactly 2 are the contiguous arcs.
    long long brute = 0;
    for (std::uint64_t side : testing::all_sides(n)) brute += testing::side_capacity(g, caps, side) < 2.5;
    EXPECT_EQ(brute, n * (n - 1) / 2);
    EXPECT_EQ(static_cast<long long>(enumerate_cuts_below(g, caps, 2.0 + 1e-3, exhaustive()).size()), brute);
  }
}

TEST(Enumeration, ExhaustiveLimitIsExplicit) {
  EnumerationOptions o = exhaustive();
  o.exhaustive_limit = 5;
  try {
    enumerate_cuts_below(testing::cycle(6), Capacities::uniform(6, 1.0), 3.0, o);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
    EXPECT_NE(std::string(e.what()).find("instance too large for exhaustive mode"), std::string::npos);
  }
}

TEST(Enumeration, OutputIsSortedAndDuplicateFree) {
  std::mt19937_64 rng(5);
  const Multigraph g = testing::random_connected_graph(rng, 8, 16);
  const Capacities caps = Capacities::uniform(g.edge_count(), 1.0);
  const auto cuts = enumerate_cuts_below(g, caps, 6.0, exhaustive());
  for (std::size_t i = 1; i < cuts.size(); ++i) {
    EXPECT_LE(cuts[i - 1].capacity, cuts[i].capacity);
    EXPECT_NE(cuts[i - 1].cut, cuts[i].cut);
  }
}

TEST(Enumeration, ContractionMatchesExhaustive) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 6);
    const Multigraph g = testing::random_connected_graph(rng, n, n + 3 + static_cast<int>(rng() % 6));
    std::vector<double> values;
    for (int e = 0; e < g.edge_count(); ++e) values.push_back(1.0 + static_cast<double>(rng() % 3));
    const Capacities caps(values);
    const double lambda = testing::brute_min_cut(g, caps);
    const double threshold = lambda * 1.6;
    EXPECT_EQ(cuts_of(enumerate_cuts_below(g, caps, threshold, contraction(trial))),
              cuts_of(enumerate_cuts_below(g, caps, threshold, exhaustive())))
        << "trial " << trial;
  }
}

TEST(Enumeration, ContractionRejectsLargeAlpha) {
  EnumerationOptions o = contraction();
  o.alpha_max = 2.0;
  try {
    enumerate_cuts_below(testing::cycle(6), Capacities::uniform(6, 1.0), 5.0, o);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(CountCuts, CycleAlphaOne) {
  for (int n = 4; n <= 10; ++n) {
    EXPECT_EQ(count_cuts_at_most(testing::cycle(n), Capacities::uniform(n, 1.0), 1.0), n * (n - 1) / 2);
  }
}

TEST(CountCuts, FourCycleAlphaTwoCountsEverything) {
  EXPECT_EQ(count_cuts_at_most(testing::cycle(4), Capacities::uniform(4, 1.0), 2.0), 7);
}

TEST(CountCuts, AtLeastOneAndBoundedByPowerOfN) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const Multigraph g = testing::random_connected_graph(rng, n, n + static_cast<int>(rng() % 10));
    const Capacities caps = Capacities::uniform(g.edge_count(), 1.0);
    for (double alpha : {1.0, 1.5, 2.0}) {
      const long long count = count_cuts_at_most(g, caps, alpha);
      EXPECT_GE(count, 1);
      EXPECT_LE(static_cast<double>(count), std::pow(static_cast<double>(n), 2.0 * alpha));
    }
  }
}

TEST(CountCuts, VertexLimit) {
  EXPECT_THROW(count_cuts_at_most(testing::cycle(8), Capacities::uniform(8, 1.0), 1.0, 6), FgcError);
}

}  // namespace
}  // namespace fgc
