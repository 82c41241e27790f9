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
#include <tuple>

#include "fgc/exact.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

TEST(ExactOpt, TwoVertex) {
  const FgcInstance inst = testing::two_vertex();
  EXPECT_DOUBLE_EQ(testing::brute_opt(inst), 2.0);
  const ExactResult r = exact_opt(inst);
  EXPECT_DOUBLE_EQ(r.best_cost, 2.0);
  EXPECT_EQ(r.best_selection.ids(), (std::vector<EdgeId>{1, 2}));
}

TEST(ExactOpt, TwoVertexExpensiveSecondUnsafe) {
  const FgcInstance inst = testing::two_vertex(1, 1, 10.0);
  EXPECT_DOUBLE_EQ(testing::brute_opt(inst), 5.0);
  const ExactResult r = exact_opt(inst);
  EXPECT_DOUBLE_EQ(r.best_cost, 5.0);
  EXPECT_EQ(r.best_selection.ids(), (std::vector<EdgeId>{0}));
}

TEST(ExactOpt, TriangleIsASpanningTree) {
  const ExactResult r = exact_opt(testing::triangle());
  EXPECT_DOUBLE_EQ(r.best_cost, 2.0);
  // Lexicographically smallest of the three spanning trees.
  EXPECT_EQ(r.best_selection.ids(), (std::vector<EdgeId>{0, 1}));
}

TEST(ExactOpt, MatchesSubsetEnumeration) {
  for (const FgcInstance& inst : testing::make_corpus(60, 33, {7, 14, 3, 4})) {
    const ExactResult r = exact_opt(inst);
    EXPECT_NEAR(r.best_cost, testing::brute_opt(inst), 1e-9);
    EXPECT_TRUE(testing::brute_feasible(inst, r.best_selection));
    EXPECT_TRUE(is_feasible(inst, r.best_selection).feasible);
  }
}

TEST(ExactOpt, SizeLimit) {
  ExactOptions o;
  o.edge_limit = 2;
  try {
    exact_opt(testing::two_vertex(), o);
    FAIL();
  } catch (const FgcError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
  }
}

TEST(BruteSeparation, ExtremePoints) {
  const FgcInstance inst = testing::make_corpus(1, 2).front();
  EXPECT_TRUE(separate_bruteforce(inst, FractionalSolution::constant(inst.edge_count(), 1.0), 0.0).empty());
  const auto rows = separate_bruteforce(inst, FractionalSolution::constant(inst.edge_count(), 0.0), 0.0);
  const long long k = static_cast<long long>(inst.p) * (inst.p + inst.q);
  int empty_j = 0;
  for (const ScoredRow& s : rows) {
    if (s.row.j_edges.empty()) {
      ++empty_j;
      EXPECT_DOUBLE_EQ(s.violation, static_cast<double>(k));
    }
  }
  EXPECT_EQ(empty_j, (1 << (inst.vertex_count() - 1)) - 1);
  EXPECT_DOUBLE_EQ(rows.front().violation, static_cast<double>(k));
}

TEST(BruteSeparation, GadgetRows) {
  const FgcInstance inst = testing::gadget();
  const FractionalSolution ones = FractionalSolution::constant(4, 1.0);
  // Oracle: a in {0, 1}, b in {0..3}. For a = 0 the violation is
  // 2(6 - b) - (12 - 3b) = b; for a = 1 it is (5 - b) - (3 - b) = 2.
  ASSERT_EQ(candidate_j_sets(inst, Cut::from_side(2, {1}), ones).size(), 8U);
  const auto rows = separate_bruteforce(inst, ones, 0.0);
  std::vector<std::tuple<int, int, double>> got;
  for (const ScoredRow& s : rows) got.emplace_back(s.row.a, s.row.b, s.violation);
  const std::vector<std::tuple<int, int, double>> expected = {
      {0, 3, 3.0}, {0, 2, 2.0}, {1, 0, 2.0}, {1, 1, 2.0}, {1, 2, 2.0}, {1, 3, 2.0}, {0, 1, 1.0}};
  EXPECT_EQ(got, expected);
}

TEST(BruteSeparation, VertexLimit) {
  const Multigraph g = testing::cycle(13);
  FgcInstance inst;
  inst.graph = g;
  inst.kind.assign(13, testing::S);
  inst.cost.assign(13, 1.0);
  inst.p = 1;
  EXPECT_THROW(separate_bruteforce(inst, FractionalSolution::constant(13, 1.0), 0.0), FgcError);
}

}  // namespace
}  // namespace fgc
