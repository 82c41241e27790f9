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

#include <filesystem>

#include "fgc/io.hpp"
#include "test_util.hpp"

namespace fgc {
namespace {

ErrorCode code_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const FgcError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::kContractViolation;
}

std::string message_of(std::string_view text) {
  try {
    parse_instance(text);
  } catch (const FgcError& e) {
    return e.what();
  }
  return "";
}

TEST(Parse, TwoVertexWithComments) {
  const FgcInstance inst = parse_instance(
      "# two parallel unsafe edges and one safe edge\n"
      "fgc 1\n"
      "p 1\nq 1   # tolerance\n"
      "nodes 2\n"
      "edge 0 1 S 5\n"
      "edge 0 1 U 1\n"
      "edge 0 1 U 1.0\n");
  EXPECT_EQ(inst, testing::two_vertex());
}

TEST(Parse, RoundTripIsIdentity) {
  for (const FgcInstance& inst : testing::make_corpus(30, 17)) {
    const std::string text = serialize_instance(inst);
    const FgcInstance again = parse_instance(text);
    EXPECT_EQ(again, inst);
    EXPECT_EQ(serialize_instance(again), text);
    EXPECT_EQ(parse_instance_json(instance_to_json(inst).dump()), inst);
  }
}

TEST(Parse, SelfLoop) {
  EXPECT_EQ(code_of("fgc 1\np 1\nq 0\nnodes 2\nedge 0 0 S 1\n"), ErrorCode::kSelfLoop);
}

TEST(Parse, MissingKeyIsNamed) {
  EXPECT_EQ(code_of("fgc 1\nq 0\nnodes 2\nedge 0 1 S 1\n"), ErrorCode::kSyntax);
  EXPECT_NE(message_of("fgc 1\nq 0\nnodes 2\nedge 0 1 S 1\n").find("missing key 'p'"), std::string::npos);
}

TEST(Parse, SyntaxErrorsCarryTheLine) {
  const std::string bad = "fgc 1\np 1\nq 0\nnodes 2\nedge 0 1 X 1\n";
  EXPECT_EQ(code_of(bad), ErrorCode::kSyntax);
  EXPECT_NE(message_of(bad).find("line 5:"), std::string::npos);
  EXPECT_EQ(code_of("fgc 2\n"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("fgc 1\np one\n"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("fgc 1\np 1\np 1\n"), ErrorCode::kSyntax);
  EXPECT_EQ(code_of("fgc 1\nwidth 3\n"), ErrorCode::kSyntax);
}

TEST(Parse, RangeErrors) {
  EXPECT_EQ(code_of("fgc 1\np 0\nq 0\nnodes 2\nedge 0 1 S 1\n"), ErrorCode::kRange);
  EXPECT_EQ(code_of("fgc 1\np 1\nq 0\nnodes 2\nedge 0 2 S 1\n"), ErrorCode::kRange);
  EXPECT_EQ(code_of("fgc 1\np 1\nq 0\nnodes 2\nedge 0 1 S -1\n"), ErrorCode::kRange);
}

TEST(Parse, InstanceInvariants) {
  EXPECT_EQ(code_of("fgc 1\np 2\nq 0\nnodes 2\nedge 0 1 S 1\n"), ErrorCode::kInfeasibleEdgeSet);
  EXPECT_EQ(code_of("fgc 1\np 1\nq 0\nnodes 3\nedge 0 1 S 1\n"), ErrorCode::kDisconnected);
  EXPECT_NO_THROW(parse_instance("fgc 1\np 1\nq 0\nnodes 3\nedge 0 1 S 1\n", false));
}

TEST(Json, Errors) {
  auto code = [](std::string_view text) {
    try {
      parse_instance_json(text);
    } catch (const FgcError& e) {
      return e.code();
    }
    return ErrorCode::kContractViolation;
  };
  EXPECT_EQ(code("{"), ErrorCode::kSyntax);
  EXPECT_EQ(code(R"({"format":"fgc","version":1,"q":0,"nodes":2,"edges":[]})"), ErrorCode::kSyntax);
  EXPECT_EQ(code(R"({"format":"fgc","version":1,"p":1,"q":0,"nodes":2,"edges":[{"u":0,"v":0,"kind":"S","cost":1}]})"),
            ErrorCode::kSelfLoop);
}

TEST(Files, SaveAndLoadBothFormats) {
  const auto dir = std::filesystem::temp_directory_path() / "fgc_io_test";
  std::filesystem::create_directories(dir);
  const FgcInstance inst = testing::make_corpus(1, 3).front();
  for (const char* name : {"a.fgc", "a.json"}) {
    const std::string path = (dir / name).string();
    save_instance(path, inst);
    EXPECT_EQ(load_instance(path), inst);
  }
  EXPECT_THROW(load_instance((dir / "missing.fgc").string()), FgcError);
}

}  // namespace
}  // namespace fgc
