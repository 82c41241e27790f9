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

#include "fgc/feasibility.hpp"
#include "fgc/generator.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

using testing::two_vertex;

FeasibilityOptions forced(CheckMode mode) {
  FeasibilityOptions o;
  o.mode = mode;
  return o;
}

TEST(Direct, TwoVertexSelections) {
  const FgcInstance inst = two_vertex();
  EXPECT_TRUE(is_feasible_direct(inst, EdgeSelection::from_ids(3, {0})).feasible);
  const FeasibilityVerdict lone = is_feasible_direct(inst, EdgeSelection::from_ids(3, {1}));
  EXPECT_FALSE(lone.feasible);
  ASSERT_TRUE(lone.witness.has_value());
  EXPECT_EQ(*lone.witness, Cut::from_side(2, {1}));
  EXPECT_TRUE(is_feasible_direct(inst, EdgeSelection::from_ids(3, {1, 2})).feasible);
}

TEST(Capacitated, TwoVertexSafeEdge) {
  const FgcInstance inst = two_vertex();
  const EdgeSelection f = EdgeSelection::from_ids(3, {0});
  EXPECT_DOUBLE_EQ(cut_capacity(inst.graph, selection_capacities(inst, f), Cut::from_side(2, {1})), 2.0);
  EXPECT_EQ(max_violating_capacity(1, 1), 1);
  EXPECT_TRUE(is_feasible(inst, f).feasible);
}

TEST(Capacitated, GadgetSetReachesThresholdYetFails) {
  const FgcInstance inst = testing::gadget();
  const EdgeSelection f = EdgeSelection::all(4);
  EXPECT_DOUBLE_EQ(cut_capacity(inst.graph, selection_capacities(inst, f), Cut::from_side(2, {1})), 12.0);
  for (CheckMode mode : {CheckMode::kExhaustive, CheckMode::kContraction}) {
    const FeasibilityVerdict v = is_feasible(inst, f, forced(mode));
    EXPECT_FALSE(v.feasible);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_EQ(*v.witness, Cut::from_side(2, {1}));
  }
}

TEST(Capacitated, FullSetOnValidInstanceIsFeasible) {
  for (const FgcInstance& inst : testing::make_corpus(40, 99)) {
    EXPECT_TRUE(is_feasible(inst, EdgeSelection::all(inst.edge_count())).feasible);
  }
}

TEST(Capacitated, AgreesWithDirectInBothModes) {
  std::mt19937_64 rng(2024);
  const auto corpus = testing::make_corpus(60, 7);
  for (const FgcInstance& inst : corpus) {
    for (int k = 0; k < 4; ++k) {
      const EdgeSelection f = testing::random_selection(rng, inst.edge_count(), 0.4 + 0.15 * k);
      const bool expected = testing::brute_feasible(inst, f);
      EXPECT_EQ(is_feasible_direct(inst, f).feasible, expected);
      EXPECT_EQ(is_feasible(inst, f, forced(CheckMode::kExhaustive)).feasible, expected);
      EXPECT_EQ(is_feasible(inst, f, forced(CheckMode::kContraction)).feasible, expected);
    }
  }
}

TEST(Capacitated, WitnessIsAlwaysUncovered) {
  std::mt19937_64 rng(4);
  for (const FgcInstance& inst : testing::make_corpus(40, 8)) {
    const EdgeSelection f = testing::random_selection(rng, inst.edge_count(), 0.5);
    const FeasibilityVerdict v = is_feasible(inst, f);
    if (!v.feasible) {
      EXPECT_FALSE(cut_covered(inst, tally_cut(inst, f, *v.witness)));
    }
  }
}

TEST(Monotonicity, SupersetsOfFeasibleSetsStayFeasible) {
  std::mt19937_64 rng(31);
  for (const FgcInstance& inst : testing::make_corpus(40, 12)) {
    EdgeSelection f = testing::random_selection(rng, inst.edge_count(), 0.5);
    bool was_feasible = is_feasible(inst, f).feasible;
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
      f.insert(e);
      const bool now = is_feasible(inst, f).feasible;
      if (was_feasible) {
        EXPECT_TRUE(now);
      }
      was_feasible = now;
    }
    EXPECT_TRUE(was_feasible);
  }
}

TEST(Validate, AcceptsAndRejects) {
  EXPECT_NO_THROW(validate_instance(two_vertex(1, 1)));
  EXPECT_NO_THROW(validate_instance(two_vertex(1, 3)));

  const FgcInstance single = testing::make_instance(2, {{0, 1}}, {testing::S}, {1.0}, 2, 0);
  try {
    validate_instance(single);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInfeasibleEdgeSet);
  }

  FgcInstance disconnected =
      testing::make_instance(4, {{0, 1}, {2, 3}}, {testing::S, testing::S}, {1.0, 1.0}, 1, 0);
  try {
    validate_instance(disconnected);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDisconnected);
  }

  FgcInstance negative = two_vertex();
  negative.cost[1] = -1.0;
  try {
    validate_instance(negative);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeCost);
  }

  FgcInstance bad_p = two_vertex();
  bad_p.p = 0;
  EXPECT_THROW(validate_instance(bad_p), FgcError);
}

TEST(Direct, VertexLimit) {
  const FgcInstance inst = testing::make_instance(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}},
                                                  std::vector<EdgeKind>(7, testing::S),
                                                  std::vector<double>(7, 1.0), 1, 0);
  EXPECT_THROW(is_feasible_direct(inst, EdgeSelection::all(7), 6), FgcError);
}

TEST(Capacitated, LargeInstanceUsesContraction) {
  GeneratorParams params;
  params.n = 24;
  params.m = 60;
  params.p = 1;
  params.q = 1;
  params.seed = 5;
  const FgcInstance inst = gen_random(params);
  const FeasibilityVerdict v = is_feasible(inst, EdgeSelection::all(inst.edge_count()));
  EXPECT_TRUE(v.feasible);
  EXPECT_EQ(v.mode, EnumerationMode::kContraction);
}

}  // namespace
}  // namespace fgc
