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

#include "gkg/alignment.h"

#include <gtest/gtest.h>

#include <cmath>

#include "gkg/eval.h"
#include "gkg/format.h"
#include "support/basis_provider.h"
#include "support/generators.h"
#include "support/test_util.h"

namespace gkg {
namespace {

using testing::Id;

AlignmentConfig Config(std::shared_ptr<const EmbeddingProvider> p) {
  AlignmentConfig cfg;
  cfg.provider = std::move(p);
  cfg.essential_events = {Id("ont:Birth")};
  return cfg;
}

AlignmentConfig HashConfig() {
  return Config(std::make_shared<HashEmbeddingProvider>(42, 64));
}

double PairScore(const GkgDocument &a, const GkgDocument &b,
                 const AlignmentConfig &cfg) {
  auto sa = BuildEntitySignature(a.graph, a.hierarchy, a.labels, Id("ex:rw"), cfg);
  auto sb = BuildEntitySignature(b.graph, b.hierarchy, b.labels, Id("ex:rw"), cfg);
  return SignatureSimilarity(sa, sb, cfg);
}

TEST(SignatureTest, WorkedEntityHasFourSlots) {
  GkgDocument doc = ParseGkg(WorkedExampleGkg());
  auto sig = BuildEntitySignature(doc.graph, doc.hierarchy, doc.labels,
                                  Id("ex:rw"), HashConfig());
  std::vector<std::string> keys;
  for (const auto &[k, v] : sig.slots) {
    keys.push_back(k.ToString());
    EXPECT_NEAR(v.Norm(), 1.0, 1e-12);
  }
  EXPECT_EQ(keys, (std::vector<std::string>{"name", "type",
                                            "fact:ont:Birth/ont:Location",
                                            "fact:ont:Birth/ont:Time"}));
}

TEST(SignatureTest, BareEntityHasNameAndType) {
  GkgDocument doc = ParseGkg("T core:Human -\nN ex:x C core:Human\n");
  auto sig = BuildEntitySignature(doc.graph, doc.hierarchy, doc.labels,
                                  Id("ex:x"), HashConfig());
  EXPECT_EQ(sig.slots.size(), 2u);
  EXPECT_TRUE(sig.Has({SlotClass::kName, {}, {}}));
  EXPECT_TRUE(sig.Has({SlotClass::kType, {}, {}}));
}

TEST(SignatureTest, IdDoesNotEnterSignature) {
  GkgDocument a = ParseGkg(WorkedExampleGkg());
  std::string text = WorkedExampleGkg();
  for (size_t p; (p = text.find("ex:rw")) != std::string::npos;) {
    text.replace(p, 5, "kb:person7");
  }
  GkgDocument b = ParseGkg(text);
  auto cfg = HashConfig();
  auto sa = BuildEntitySignature(a.graph, a.hierarchy, a.labels, Id("ex:rw"), cfg);
  auto sb = BuildEntitySignature(b.graph, b.hierarchy, b.labels,
                                 Id("kb:person7"), cfg);
  EXPECT_EQ(sa.slots, sb.slots);
}

TEST(SignatureTest, Errors) {
  GkgDocument doc = ParseGkg(WorkedExampleGkg());
  auto code = [&](const char *id) {
    try {
      BuildEntitySignature(doc.graph, doc.hierarchy, doc.labels, Id(id),
                           HashConfig());
    } catch (const Error &e) {
      return e.code();
    }
    return ErrorCode::kIo;
  };
  EXPECT_EQ(code("ex:birth1"), ErrorCode::kNotAContinuant);
  EXPECT_EQ(code("ex:nobody"), ErrorCode::kUnknownNode);
}

TEST(SimilarityTest, SlotArithmetic) {
  AlignmentConfig cfg = HashConfig();
  auto unit = [](std::size_t i) {
    Vector v(4);
    v[i] = 1;
    return v;
  };
  EntitySignature a, b;
  SlotKey keys[4] = {{SlotClass::kName, {}, {}},
                     {SlotClass::kType, {}, {}},
                     {SlotClass::kFact, Id("ont:Birth"), Id("ont:Time")},
                     {SlotClass::kFact, Id("ont:Birth"), Id("ont:Location")}};
  for (int i = 0; i < 4; ++i) a.slots[keys[i]] = b.slots[keys[i]] = unit(i);
  EXPECT_NEAR(SignatureSimilarity(a, b, cfg), 1.0, 1e-12);
  b.slots[keys[3]] = unit(0);
  EXPECT_NEAR(SignatureSimilarity(a, b, cfg), 0.75, 1e-12);
  b.slots[keys[3]] = -unit(3);  // clamps to 0
  EXPECT_NEAR(SignatureSimilarity(a, b, cfg), 0.75, 1e-12);
  b.slots.erase(keys[3]);  // present on one side only
  EXPECT_NEAR(SignatureSimilarity(a, b, cfg), 0.75, 1e-12);
  cfg.weights[SlotClass::kFact] = 2.0;
  EXPECT_NEAR(SignatureSimilarity(a, b, cfg), 4.0 / 6.0, 1e-12);
}

TEST(SimilarityTest, RenamedEntityUnderBasis) {
  AlignmentConfig cfg = Config(std::make_shared<testing::BasisProvider>(32));
  GkgDocument a = ParseGkg(WorkedExampleGkg());
  GkgDocument b = ParseGkg(WorkedExampleGkg("George Roger Waters"));
  EXPECT_NEAR(PairScore(a, b, cfg), (2 / std::sqrt(6.0) + 3) / 4, 1e-12);
}

TEST(SimilarityTest, ChangedLocationUnderBasis) {
  AlignmentConfig cfg = Config(std::make_shared<testing::BasisProvider>(32));
  GkgDocument a = ParseGkg(WorkedExampleGkg("Roger Waters", "London"));
  GkgDocument b = ParseGkg(WorkedExampleGkg("Roger Waters", "Chelsea"));
  EXPECT_NEAR(PairScore(a, b, cfg), 0.75, 1e-12);
}

// Hash provider values pinned by tests/oracles/hash_oracle.py.
TEST(SimilarityTest, HashProviderMatchesOracle) {
  GkgDocument base = ParseGkg(WorkedExampleGkg());
  EXPECT_NEAR(PairScore(base, ParseGkg(WorkedExampleGkg("George Roger Waters")),
                        HashConfig()),
              0.965690, 1e-6);
  EXPECT_NEAR(PairScore(ParseGkg(WorkedExampleGkg("Roger Waters", "London")),
                        ParseGkg(WorkedExampleGkg("Roger Waters", "Chelsea")),
                        HashConfig()),
              0.75, 1e-6);
}

TEST(AlignTest, SelfAlignmentIsIdentity) {
  GkgDocument doc = ParseGkg(testing::ReadTestData("obama_r1.gkg"));
  AlignmentResult r = Align(doc.graph, doc.graph, doc.hierarchy, doc.labels,
                            doc.labels, HashConfig());
  ASSERT_EQ(r.matches.size(), 1u);
  EXPECT_EQ(r.matches[0].a, r.matches[0].b);
  EXPECT_NEAR(r.matches[0].score, 1.0, 1e-12);
  EXPECT_TRUE(r.unmatched_a.empty());
}

TEST(AlignTest, RenamedMatchesChangedFactDoesNot) {
  GkgDocument a = ParseGkg(WorkedExampleGkg());
  GkgDocument renamed = ParseGkg(WorkedExampleGkg("George Roger Waters"));
  GkgDocument moved = ParseGkg(WorkedExampleGkg("Roger Waters", "Chelsea"));
  AlignmentConfig cfg = HashConfig();
  AlignmentResult r1 =
      Align(a.graph, renamed.graph, a.hierarchy, a.labels, renamed.labels, cfg);
  ASSERT_EQ(r1.matches.size(), 1u);
  EXPECT_GE(r1.matches[0].score, 0.9);
  AlignmentResult r2 =
      Align(a.graph, moved.graph, a.hierarchy, a.labels, moved.labels, cfg);
  EXPECT_TRUE(r2.matches.empty());
  EXPECT_EQ(r2.unmatched_a, std::vector<NodeId>{Id("ex:rw")});
  EXPECT_EQ(r2.unmatched_b, std::vector<NodeId>{Id("ex:rw")});
}

TEST(AlignTest, TypeIncompatiblePairsAreNotScored) {
  GkgDocument a = ParseGkg("T core:Human -\nT ont:City -\nN ex:x C core:Human\n");
  GkgDocument b = ParseGkg("T core:Human -\nT ont:City -\nN ex:x C ont:City\n");
  AlignmentConfig cfg = HashConfig();
  cfg.threshold = 0.01;
  AlignmentResult r = Align(a.graph, b.graph, a.hierarchy, a.labels, b.labels, cfg);
  EXPECT_TRUE(r.matches.empty());
}

TEST(AlignTest, NearTiesAreAmbiguous) {
  // Two B entities with the same signature compete for one A entity.
  std::string common = "T core:Human -\n";
  GkgDocument a = ParseGkg(common + "N ex:x C core:Human\nL ex:x en Sam\n");
  GkgDocument b = ParseGkg(common +
                           "N ex:y C core:Human\nL ex:y en Sam\n"
                           "N ex:z C core:Human\nL ex:z en Sam\n");
  AlignmentResult r =
      Align(a.graph, b.graph, a.hierarchy, a.labels, b.labels, HashConfig());
  EXPECT_TRUE(r.matches.empty());
  ASSERT_EQ(r.ambiguous.size(), 1u);
  EXPECT_EQ(r.ambiguous[0].a, Id("ex:x"));
  EXPECT_GE(r.ambiguous[0].candidates.size(), 2u);
  EXPECT_NE(SerializeAlignment(r).find("AMBIG"), std::string::npos);
}

TEST(AlignTest, SerializationRoundTrip) {
  AlignmentResult r;
  r.matches = {{Id("a:1"), Id("b:1"), 0.95432}, {Id("a:2"), Id("b:9"), 1.0}};
  std::string tsv = SerializeAlignment(r);
  EXPECT_EQ(tsv, "a:1\tb:1\t0.9543\tMATCH\na:2\tb:9\t1.0000\tMATCH\n");
  auto back = ParseAlignment(tsv);
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[1].b, Id("b:9"));
}

TEST(AlignTest, ConfigChecks) {
  AlignmentConfig cfg;
  EXPECT_THROW(cfg.Check(), Error);
  cfg = HashConfig();
  cfg.threshold = 0;
  EXPECT_THROW(cfg.Check(), Error);
  cfg = HashConfig();
  cfg.weights[SlotClass::kName] = -1;
  EXPECT_THROW(cfg.Check(), Error);
}

TEST(FlatAlignTest, DiagonalFirst) {
  HashEmbeddingProvider p(42, 64);
  std::vector<FlatTriple> t = {{"RogerWaters", "LivesIn", "London"},
                               {"RogerWaters", "PlaceOfResidence", "Chelsea"}};
  auto scores = FlatAlign(t, t, p);
  ASSERT_EQ(scores.size(), 4u);
  EXPECT_NEAR(scores[0].cosine, 1.0, 1e-12);
  EXPECT_NEAR(scores[1].cosine, 1.0, 1e-12);
  EXPECT_EQ(scores[0].index_a, scores[0].index_b);
  EXPECT_LT(scores[2].cosine, 1.0);
}

// Random graph pairs: symmetry of the match set, monotone threshold,
// determinism.
TEST(AlignTest, RandomPairsProperties) {
  auto cfg = HashConfig();
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    GkgDocument a = testing::RandomDocument(seed);
    GkgDocument b = a;
    testing::Gen gen(seed * 7919);
    // Perturb some labels in b.
    for (const NodeId &id : b.graph.NodesOfKind(NodeKind::kContinuant)) {
      if (gen.Coin(40)) b.labels.Assign(id, "en", gen.Label());
    }
    cfg.essential_events = a.decls.essential;
    cfg.threshold = 0.6;
    AlignmentResult ab =
        Align(a.graph, b.graph, a.hierarchy, a.labels, b.labels, cfg);
    AlignmentResult ba =
        Align(b.graph, a.graph, a.hierarchy, b.labels, a.labels, cfg);
    std::set<std::pair<NodeId, NodeId>> m1, m2;
    for (const Match &m : ab.matches) m1.emplace(m.a, m.b);
    for (const Match &m : ba.matches) m2.emplace(m.b, m.a);
    ASSERT_EQ(m1, m2) << "seed " << seed;
    for (double t : {0.7, 0.8, 0.9, 1.0}) {
      AlignmentConfig hi = cfg;
      hi.threshold = t;
      AlignmentResult r =
          Align(a.graph, b.graph, a.hierarchy, a.labels, b.labels, hi);
      for (const Match &m : r.matches) {
        ASSERT_GE(m.score, t);
        ASSERT_TRUE(m1.contains({m.a, m.b})) << "seed " << seed << " t " << t;
      }
    }
    ASSERT_EQ(SerializeAlignment(ab),
              SerializeAlignment(
                  Align(a.graph, b.graph, a.hierarchy, a.labels, b.labels, cfg)));
  }
}

}  // namespace
}  // namespace gkg
