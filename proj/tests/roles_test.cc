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

#include "gkg/roles.h"

#include <gtest/gtest.h>

#include <set>

#include "gkg/format.h"
#include "support/generators.h"
#include "support/test_util.h"

namespace gkg {
namespace {

using testing::Id;

struct Fixture {
  TypeHierarchy h;
  GroundedGraph g;
  RoleConceptDef teacher{"Teacher", Id("core:Human"), Relation::kHasAgent,
                         Id("ont:Teaching")};
};

Fixture Teaching() {
  Fixture f;
  f.h.AddType(Id("core:Human"));
  f.h.AddType(Id("ont:Adult"), Id("core:Human"));
  f.h.AddType(Id("ont:Activity"));
  f.h.AddType(Id("ont:Teaching"), Id("ont:Activity"));
  f.g.AddNode({Id("ex:x"), NodeKind::kContinuant, Id("core:Human"), {}});
  f.g.AddNode({Id("ex:o"), NodeKind::kOccurrent, Id("ont:Teaching"), {}});
  f.g.AddEdge(Id("ex:o"), Relation::kHasAgent, Id("ex:x"));
  return f;
}

TEST(RolesTest, AgentOfTeachingIsTeacher) {
  Fixture f = Teaching();
  auto roles = InferRoleLabels(f.g, f.h, std::span(&f.teacher, 1));
  ASSERT_EQ(roles.size(), 1u);
  EXPECT_EQ(roles[0], (RoleLabel{Id("ex:x"), "Teacher"}));
}

TEST(RolesTest, NoAgentEdgeNoRole) {
  Fixture f = Teaching();
  f.g.RemoveEdge({Id("ex:o"), Relation::kHasAgent, Id("ex:x")});
  EXPECT_TRUE(InferRoleLabels(f.g, f.h, std::span(&f.teacher, 1)).empty());
}

TEST(RolesTest, NoOccurrentsNoRoles) {
  Fixture f = Teaching();
  f.g.RemoveNode(Id("ex:o"));
  EXPECT_TRUE(InferRoleLabels(f.g, f.h, std::span(&f.teacher, 1)).empty());
}

TEST(RolesTest, SubtypeOfBaseQualifies) {
  Fixture f = Teaching();
  f.g.AddNode({Id("ex:y"), NodeKind::kContinuant, Id("ont:Adult"), {}});
  f.g.AddEdge(Id("ex:o"), Relation::kHasAgent, Id("ex:y"));
  auto roles = InferRoleLabels(f.g, f.h, std::span(&f.teacher, 1));
  EXPECT_EQ(roles.size(), 2u);
  EXPECT_EQ(roles[1].entity, Id("ex:y"));
}

TEST(RolesTest, WrongRelationDoesNotQualify) {
  Fixture f = Teaching();
  f.g.RemoveEdge({Id("ex:o"), Relation::kHasAgent, Id("ex:x")});
  f.g.AddEdge(Id("ex:o"), Relation::kHasObject, Id("ex:x"));
  EXPECT_TRUE(InferRoleLabels(f.g, f.h, std::span(&f.teacher, 1)).empty());
}

TEST(RolesTest, BadDefinitions) {
  Fixture f = Teaching();
  RoleConceptDef bad = f.teacher;
  bad.via = Relation::kHasProp;
  try {
    CheckRoleDefinition(bad, f.h);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidRoleRelation);
  }
  bad = f.teacher;
  bad.base_type = Id("ont:Nope");
  try {
    InferRoleLabels(f.g, f.h, std::span(&bad, 1));
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownType);
  }
}

TEST(RolesTest, FixtureFileRoles) {
  GkgDocument doc = ParseGkg(testing::ReadTestData("teaching.gkg"));
  std::vector<RoleConceptDef> defs(doc.decls.roles.begin(), doc.decls.roles.end());
  auto roles = InferRoleLabels(doc.graph, doc.hierarchy, defs);
  ASSERT_EQ(roles.size(), 1u);
  EXPECT_EQ(roles[0].role, "Teacher");
}

// Brute force over (entity, def, occurrent) with explicit closure, plus a
// monotonicity check under random edge additions.
TEST(RolesTest, MatchesBruteForceAndIsMonotone) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    testing::Gen gen(seed);
    Fixture f = Teaching();
    std::vector<NodeId> types = {Id("core:Human"), Id("ont:Adult"),
                                 Id("ont:Activity"), Id("ont:Teaching")};
    std::vector<NodeId> people, events;
    for (int i = 0; i < 4; ++i) {
      NodeId p = NodeId::Parse("p:" + std::to_string(i));
      f.g.AddNode({p, NodeKind::kContinuant, gen.Pick(types), {}});
      people.push_back(p);
      NodeId e = NodeId::Parse("o:" + std::to_string(i));
      f.g.AddNode({e, NodeKind::kOccurrent, gen.Pick(types), {}});
      events.push_back(e);
    }
    std::vector<RoleConceptDef> defs = {
        f.teacher,
        {"Learner", Id("core:Human"), Relation::kHasObject, Id("ont:Teaching")},
        {"Participant", Id("core:Entity"), Relation::kParticipantIn,
         Id("ont:Activity")}};
    std::vector<Relation> rels = {Relation::kHasAgent, Relation::kHasObject,
                                  Relation::kParticipantIn};
    std::set<RoleLabel> previous;
    for (int step = 0; step < 8; ++step) {
      f.g.AddEdge(gen.Pick(events), gen.Pick(rels), gen.Pick(people));
      std::set<RoleLabel> expected;
      for (const auto &[id, node] : f.g.nodes()) {
        if (node.kind != NodeKind::kContinuant) continue;
        for (const RoleConceptDef &d : defs) {
          for (const auto &[oid, o] : f.g.nodes()) {
            if (o.kind != NodeKind::kOccurrent) continue;
            if (f.h.IsSubtype(*node.inst_of, d.base_type) &&
                f.h.IsSubtype(*o.inst_of, d.occurrent_type) &&
                f.g.HasEdge({oid, d.via, id})) {
              expected.insert({id, d.role_name});
            }
          }
        }
      }
      auto got = InferRoleLabels(f.g, f.h, defs);
      ASSERT_EQ(std::set<RoleLabel>(got.begin(), got.end()), expected);
      ASSERT_TRUE(std::is_sorted(got.begin(), got.end()));
      ASSERT_TRUE(std::includes(expected.begin(), expected.end(),
                                previous.begin(), previous.end()));
      previous = expected;
    }
  }
}

}  // namespace
}  // namespace gkg
