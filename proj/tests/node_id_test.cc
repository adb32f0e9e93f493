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

#include "gkg/node_id.h"

#include <gtest/gtest.h>

#include <unordered_set>

#include "gkg/error.h"

namespace gkg {
namespace {

TEST(NodeIdTest, ParsesNamespaceAndLocal) {
  NodeId id = NodeId::Parse("ex:rw");
  EXPECT_EQ(id.str(), "ex:rw");
  EXPECT_EQ(id.ns(), "ex");
  EXPECT_EQ(id.local(), "rw");
}

TEST(NodeIdTest, LocalKeepsLaterColons) {
  NodeId id = NodeId::Parse("ev:Birth#a:b");
  EXPECT_EQ(id.ns(), "ev");
  EXPECT_EQ(id.local(), "Birth#a:b");
}

TEST(NodeIdTest, RejectsMalformed) {
  for (const char *bad : {"", "rw", ":rw", "ex:", "ex rw:x", "ex:r w",
                          "ex:\x7f", "ex:caf\xc3\xa9"}) {
    EXPECT_FALSE(NodeId::IsValid(bad)) << bad;
    EXPECT_FALSE(NodeId::TryParse(bad).has_value());
    try {
      NodeId::Parse(bad);
      ADD_FAILURE() << "accepted " << bad;
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kInvalidNodeId);
    }
  }
}

TEST(NodeIdTest, OrdersBytewise) {
  EXPECT_LT(NodeId::Parse("a:B"), NodeId::Parse("a:a"));
  EXPECT_LT(NodeId::Parse("a:a"), NodeId::Parse("b:a"));
  EXPECT_EQ(NodeId::Parse("a:a"), NodeId::Parse("a:a"));
}

TEST(NodeIdTest, Hashable) {
  std::unordered_set<NodeId> ids = {NodeId::Parse("a:x"), NodeId::Parse("a:x"),
                                    NodeId::Parse("a:y")};
  EXPECT_EQ(ids.size(), 2u);
}

TEST(NodeIdTest, RootType) { EXPECT_EQ(RootType().str(), "core:Entity"); }

}  // namespace
}  // namespace gkg
