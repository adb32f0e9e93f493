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

#ifndef GKG_ALIGNMENT_H_
#define GKG_ALIGNMENT_H_

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gkg/embedding.h"
#include "gkg/graph.h"
#include "gkg/labels.h"
#include "gkg/roles.h"
#include "gkg/schema.h"
#include "gkg/type_hierarchy.h"

namespace gkg {

enum class SlotClass { kName, kType, kFact, kRoles };

// `fact` slots are keyed by (event type, attribute type); the other
// classes have a single slot each.
struct SlotKey {
  SlotClass cls = SlotClass::kName;
  NodeId event_type;
  NodeId attr_type;

  std::string ToString() const;
  friend auto operator<=>(const SlotKey &, const SlotKey &) = default;
};

struct EntitySignature {
  std::map<SlotKey, Vector> slots;

  bool Has(const SlotKey &key) const { return slots.contains(key); }
};

struct AlignmentConfig {
  std::shared_ptr<const EmbeddingProvider> provider;
  double threshold = 0.9;
  double ambiguity_band = 0.02;
  std::map<SlotClass, double> weights = {{SlotClass::kName, 1.0},
                                         {SlotClass::kType, 1.0},
                                         {SlotClass::kFact, 1.0},
                                         {SlotClass::kRoles, 1.0}};
  // Language whose labels feed the name slot.
  std::string pivot_lang = "en";
  // Event types whose attributes enter signatures.
  std::set<NodeId> essential_events;
  std::vector<RoleConceptDef> roles;

  // Throws kInvalidArgument for a missing provider, a threshold outside
  // (0, 1] or a non-positive weight.
  void Check() const;
};

// Builds the per-slot bundle for continuant `id`:
//   name   phrase of the pivot-language label, else the NodeId local part
//   type   normalized mean of the phrases of the inst type and all its
//          ancestors
//   fact   per (essential event type, attribute type), the phrase of the
//          attribute value(s) of every occurrent the entity takes part in
//   roles  normalized sum of inferred role names, absent if none
// Throws kUnknownNode or kNotAContinuant.
EntitySignature BuildEntitySignature(const GroundedGraph &g,
                                     const TypeHierarchy &h,
                                     const LabelTable &labels, const NodeId &id,
                                     const AlignmentConfig &cfg);

// Weighted mean of per-slot cosines over the union of slot keys. A slot in
// only one signature scores 0; negative cosines clamp to 0.
double SignatureSimilarity(const EntitySignature &a, const EntitySignature &b,
                           const AlignmentConfig &cfg);

struct Match {
  NodeId a;
  NodeId b;
  double score = 0.0;

  friend auto operator<=>(const Match &, const Match &) = default;
};

struct Candidate {
  NodeId b;
  double score = 0.0;

  friend auto operator<=>(const Candidate &, const Candidate &) = default;
};

struct Ambiguity {
  NodeId a;
  std::vector<Candidate> candidates;

  friend bool operator==(const Ambiguity &, const Ambiguity &) = default;
};

struct AlignmentResult {
  std::vector<Match> matches;  // sorted by (a, b)
  std::vector<NodeId> unmatched_a;
  std::vector<NodeId> unmatched_b;
  std::vector<Ambiguity> ambiguous;  // sorted by a
};

// Greedy mutual-best matching of the continuants of `a` and `b`. Only
// type-comparable pairs are scored; pairs are visited in descending score
// and accepted at or above the threshold. If the winner beats the best
// remaining competitor on either side by less than the ambiguity band, both
// entities are set aside as ambiguous.
AlignmentResult Align(const GroundedGraph &a, const GroundedGraph &b,
                      const TypeHierarchy &h, const LabelTable &labels_a,
                      const LabelTable &labels_b, const AlignmentConfig &cfg);

// `idA TAB idB TAB score TAB MATCH|AMBIG`, sorted by (idA, idB), four
// decimals.
std::string SerializeAlignment(const AlignmentResult &result);

// Reads MATCH rows back; AMBIG rows are skipped.
std::vector<Match> ParseAlignment(std::string_view tsv);

struct FlatPairScore {
  std::size_t index_a = 0;
  std::size_t index_b = 0;
  double cosine = 0.0;
};

// Baseline: every cross pair scored by cosine of summed triple vectors,
// sorted by descending cosine, then indices.
std::vector<FlatPairScore> FlatAlign(std::span<const FlatTriple> a,
                                     std::span<const FlatTriple> b,
                                     const EmbeddingProvider &provider);

}  // namespace gkg

#endif  // GKG_ALIGNMENT_H_
