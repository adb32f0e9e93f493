// Copyright 2026 The GKG Authors.
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

#include "gkg/validate.h"

#include <gtest/gtest.h>

#include "gkg/format.h"
#include "support/test_util.h"

namespace gkg {
namespace {

using testing::Id;

TypeHierarchy Types() {
  TypeHierarchy h;
  for (const char *t : {"core:Human", "ont:Birth", "ont:Time", "ont:Date"}) {
    h.AddType(Id(t));
  }
  return h;
}

TEST(ValidateTest, EmptyGraphIsValid) {
  EXPECT_TRUE(ValidateGraph(GroundedGraph(), TypeHierarchy()).ok());
}

TEST(ValidateTest, WorkedGraphIsValid) {
  GkgDocument doc = ParseGkg(testing::ReadTestData("worked_en.gkg"));
  ValidationReport r = ValidateGraph(doc.graph, doc.hierarchy);
  EXPECT_TRUE(r.ok()) << r.ToTsv();
}

TEST(ValidateTest, UnknownTypeTarget) {
  GroundedGraph g;
  g.AddNode({Id("ex:x"), NodeKind::kContinuant, Id("ont:Missing"), {}});
  ValidationReport r = ValidateGraph(g, Types());
  ASSERT_EQ(r.issues.size(), 1u);
  EXPECT_EQ(r.issues[0].kind, IssueKind::kUnknownTypeTarget);
  EXPECT_EQ(r.issues[0].subject, "ex:x");
}

TEST(ValidateTest, NodeTypingRules) {
  GroundedGraph g;
  g.AddNode({Id("ex:untyped"), NodeKind::kContinuant, {}, {}});
  g.AddNode({Id("core:Human"), NodeKind::kType, Id("ont:Birth"), {}});
  g.AddNode({Id("ex:lit"), NodeKind::kContinuant, Id("core:Human"), "x"});
  g.AddNode({Id("ex:nolit"), NodeKind::kValue, Id("ont:Date"), {}});
  ValidationReport r = ValidateGraph(g, Types());
  EXPECT_EQ(r.Count(IssueKind::kUntypedNode), 1u);
  EXPECT_EQ(r.Count(IssueKind::kTypedTypeNode), 1u);
  EXPECT_EQ(r.Count(IssueKind::kLiteralOnNonValue), 1u);
  EXPECT_EQ(r.Count(IssueKind::kMissingLiteral), 1u);
}

TEST(ValidateTest, ReportIsSortedAndDeterministic) {
  GroundedGraph g;
  g.AddNode({Id("ex:b"), NodeKind::kContinuant, {}, {}});
  g.AddNode({Id("ex:a"), NodeKind::kContinuant, {}, {}});
  ValidationReport r1 = ValidateGraph(g, Types());
  ValidationReport r2 = ValidateGraph(g, Types());
  EXPECT_EQ(r1.ToTsv(), r2.ToTsv());
  ASSERT_EQ(r1.issues.size(), 2u);
  EXPECT_EQ(r1.issues[0].subject, "ex:a");
  EXPECT_EQ(r1.ToTsv().substr(0, 11), "UntypedNode");
}

TEST(ValidateTest, NormalizeDropsRepeats) {
  ValidationReport r;
  r.issues.push_back({IssueKind::kHierarchy, "b", "x", 2});
  r.issues.push_back({IssueKind::kHierarchy, "a", "x", 1});
  r.issues.push_back({IssueKind::kHierarchy, "b", "x", 3});
  r.Normalize();
  ASSERT_EQ(r.issues.size(), 2u);
  EXPECT_EQ(r.issues[0].subject, "a");
}

}  // namespace
}  // namespace gkg
