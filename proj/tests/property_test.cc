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

// Fuzzed build sequences against the closed relation vocabulary and the
// signature table.

#include <gtest/gtest.h>

#include "gkg/graph.h"
#include "gkg/type_hierarchy.h"
#include "gkg/validate.h"
#include "support/generators.h"

namespace gkg {
namespace {

struct FuzzStats {
  int accepted = 0;
  int rejected = 0;
};

FuzzStats FuzzEdges(std::uint64_t seed, int insertions) {
  testing::Gen gen(seed);
  GroundedGraph g;
  TypeHierarchy h;
  std::vector<NodeId> ids;
  NodeId type = NodeId::Parse("ty:T");
  h.AddType(type);
  for (int i = 0; i < 12; ++i) {
    NodeKind kind = kAllNodeKinds[gen.Below(kAllNodeKinds.size())];
    NodeId id = NodeId::Parse("n:" + std::to_string(i));
    if (kind == NodeKind::kType) {
      id = NodeId::Parse("ty:" + std::to_string(i));
      h.AddType(id);
      g.AddNode({id, kind, std::nullopt, std::nullopt});
    } else {
      std::optional<std::string> literal;
      if (kind == NodeKind::kValue) literal = gen.Word();
      g.AddNode({id, kind, type, literal});
    }
    ids.push_back(id);
  }
  FuzzStats stats;
  for (int i = 0; i < insertions; ++i) {
    const NodeId &s = gen.Pick(ids);
    const NodeId &o = gen.Pick(ids);
    Relation r = kAllRelations[gen.Below(kAllRelations.size())];
    bool allowed = SignatureAllows(r, g.node(s).kind, g.node(o).kind);
    std::size_t before = g.edges().size();
    try {
      g.AddEdge(s, r, o);
      EXPECT_TRUE(allowed);
      ++stats.accepted;
    } catch (const SignatureViolation &e) {
      EXPECT_FALSE(allowed);
      EXPECT_EQ(e.relation(), r);
      EXPECT_EQ(g.edges().size(), before);
      ++stats.rejected;
    }
    // A dangling endpoint is always refused.
    EXPECT_THROW(g.AddEdge(s, r, NodeId::Parse("n:missing")), Error);
  }
  for (const Edge &e : g.edges()) {
    EXPECT_NE(std::find(kAllRelations.begin(), kAllRelations.end(), e.relation),
              kAllRelations.end());
  }
  EXPECT_EQ(ValidateGraph(g, h).Count(IssueKind::kSignatureViolation), 0u);
  return stats;
}

TEST(PropertyTest, ClosedVocabularyAndSignatures) {
  FuzzStats total;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    FuzzStats s = FuzzEdges(seed, 100);
    total.accepted += s.accepted;
    total.rejected += s.rejected;
  }
  EXPECT_EQ(total.accepted + total.rejected, 2000);
  EXPECT_GT(total.accepted, 0);
  EXPECT_GT(total.rejected, 0);
}

TEST(PropertyTest, IsACyclesAlwaysRejected) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    testing::Gen gen(seed);
    TypeHierarchy h;
    std::vector<NodeId> types = {RootType()};
    for (int i = 0; i < 10; ++i) {
      NodeId t = NodeId::Parse("t:" + std::to_string(i));
      h.AddType(t, gen.Pick(types));
      types.push_back(t);
    }
    for (int k = 0; k < 20; ++k) {
      const NodeId &a = gen.Pick(types);
      const NodeId &b = gen.Pick(types);
      bool cycle = h.IsSubtype(b, a);
      try {
        if (!h.Parents(a).contains(b)) h.AddParent(a, b);
        ASSERT_FALSE(cycle);
      } catch (const Error &e) {
        ASSERT_TRUE(cycle);
        ASSERT_EQ(e.code(), ErrorCode::kCycleWouldForm);
      }
    }
    // Still acyclic: only the reflexive pairs are mutual.
    for (const NodeId &a : types) {
      for (const NodeId &b : types) {
        if (a != b) ASSERT_FALSE(h.IsSubtype(a, b) && h.IsSubtype(b, a));
      }
    }
  }
}

}  // namespace
}  // namespace gkg
