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

#include "fgc/generator.hpp"
#include "fgc/min_cut.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

GeneratorParams example() {
  GeneratorParams params;
  params.n = 6;
  params.m = 14;
  params.safe_fraction = 0.5;
  params.cost_min = 1.0;
  params.cost_max = 10.0;
  params.p = 1;
  params.q = 1;
  params.seed = 7;
  return params;
}

TEST(Generator, ProducesValidInstances) {
  const FgcInstance inst = gen_random(example());
  EXPECT_NO_THROW(validate_instance(inst));
  EXPECT_GE(inst.edge_count(), 14);
  for (double c : inst.cost) {
    EXPECT_GE(c, 1.0);
    EXPECT_LE(c, 10.0);
  }
}

TEST(Generator, DeterministicGivenSeed) {
  EXPECT_EQ(gen_random(example()), gen_random(example()));
  GeneratorParams other = example();
  other.seed = 8;
  EXPECT_FALSE(gen_random(example()) == gen_random(other));
}

TEST(Generator, RepairAddsOnlyUnsafeEdges) {
  GeneratorParams params = example();
  params.p = 3;
  params.q = 4;
  params.m = 8;
  params.safe_fraction = 0.3;
  const FgcInstance inst = gen_random(params);
  EXPECT_NO_THROW(validate_instance(inst));
  for (EdgeId e = params.m; e < inst.edge_count(); ++e) EXPECT_FALSE(inst.is_safe(e));
}

TEST(Generator, AllSafeMeansPEdgeConnected) {
  GeneratorParams params = example();
  params.safe_fraction = 1.0;
  params.p = 2;
  params.q = 3;
  std::mt19937_64 rng(1);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    params.seed = seed;
    const FgcInstance inst = gen_random(params);
    for (int trial = 0; trial < 10; ++trial) {
      // Repair may append unsafe edges; keep F on the safe ones.
      EdgeSelection f = testing::random_selection(rng, inst.edge_count(), 0.7);
      for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        if (!inst.is_safe(e)) f.erase(e);
      }
      std::vector<double> unit;
      for (EdgeId e = 0; e < inst.edge_count(); ++e) unit.push_back(f.contains(e) ? 1.0 : 0.0);
      const bool two_connected = min_cut(inst.graph, Capacities(unit)).value >= 2.0;
      EXPECT_EQ(is_feasible(inst, f).feasible, two_connected);
    }
  }
}

TEST(Generator, RejectsUnsatisfiableParameters) {
  GeneratorParams params = example();
  params.n = 2;
  params.m = 0;
  EXPECT_THROW(gen_random(params), FgcError);
  params = example();
  params.safe_fraction = 1.5;
  EXPECT_THROW(gen_random(params), FgcError);
  params = example();
  params.cost_min = 5;
  params.cost_max = 1;
  EXPECT_THROW(gen_random(params), FgcError);
}

}  // namespace
}  // namespace fgc
