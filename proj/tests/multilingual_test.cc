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

#include "gkg/multilingual.h"

#include <gtest/gtest.h>

#include "gkg/format.h"
#include "support/test_util.h"

namespace gkg {
namespace {

using testing::Id;
using testing::ReadTestData;

TEST(RenderTest, FrenchLabelsSameEdges) {
  GkgDocument doc = ParseGkg(ReadTestData("worked_fr.gkg"));
  LabeledView v = Render(doc.graph, doc.labels, "fr");
  EXPECT_EQ(v.edges.size(), 5u);
  EXPECT_EQ(v.node_labels.at(Id("ex:birth1")), "naissance");
  EXPECT_EQ(v.relation_glosses.at(Relation::kParticipantIn), "participe à");
  EXPECT_EQ(v.relation_glosses.at(Relation::kIsA), "isA");
}

TEST(RenderTest, FallbackChain) {
  GkgDocument doc = ParseGkg(ReadTestData("worked_en.gkg"));
  LabeledView fr = Render(doc.graph, doc.labels, "fr");
  EXPECT_EQ(fr.node_labels.at(Id("ex:rw")), "Roger Waters");  // en fallback
  EXPECT_EQ(fr.node_labels.at(Id("ex:t1")), "t1");           // local part
  LabeledView bare = Render(doc.graph, LabelTable(), "en");
  for (const auto &[id, label] : bare.node_labels) EXPECT_EQ(label, id.local());
}

TEST(RenderTest, Serialization) {
  GkgDocument doc = ParseGkg(ReadTestData("worked_fr.gkg"));
  std::string tsv = SerializeView(Render(doc.graph, doc.labels, "fr"));
  EXPECT_NE(tsv.find("ex:birth1\tnaissance\n"), std::string::npos);
  EXPECT_NE(tsv.find("\n\n"), std::string::npos);
  EXPECT_NE(tsv.find("naissance\tparticipe à\tRoger Waters\n"), std::string::npos);
}

TEST(IsoTest, LanguagesAreIsomorphic) {
  GkgDocument en = ParseGkg(ReadTestData("worked_en.gkg"));
  GkgDocument fr = ParseGkg(ReadTestData("worked_fr.gkg"));
  GkgDocument ar = ParseGkg(ReadTestData("worked_ar.gkg"));
  LabeledView v[] = {Render(en.graph, en.labels, "en"),
                     Render(fr.graph, fr.labels, "fr"),
                     Render(ar.graph, ar.labels, "ar")};
  for (const auto &x : v) {
    for (const auto &y : v) EXPECT_TRUE(CheckIsomorphic(x, y).isomorphic);
  }
}

TEST(IsoTest, ExtraEdgeIsWitnessed) {
  GkgDocument doc = ParseGkg(ReadTestData("worked_en.gkg"));
  LabeledView v1 = Render(doc.graph, doc.labels, "en");
  LabeledView v2 = v1;
  v2.edges.insert({Id("ex:t1"), Relation::kHasValue, Id("ex:v2")});
  IsoCheck c = CheckIsomorphic(v1, v2);
  EXPECT_FALSE(c.isomorphic);
  EXPECT_EQ(c.witness, "edge only in second: ex:t1 hasValue ex:v2");
  EXPECT_EQ(CheckIsomorphic(v2, v1).witness,
            "edge only in first: ex:t1 hasValue ex:v2");
  v2 = v1;
  v2.node_labels.emplace(Id("ex:zz"), "zz");
  EXPECT_EQ(CheckIsomorphic(v1, v2).witness, "node only in second: ex:zz");
  EXPECT_TRUE(CheckIsomorphic(v1, v1).isomorphic);
  EXPECT_TRUE(CheckIsomorphic(v1, v1).witness.empty());
}

}  // namespace
}  // namespace gkg
