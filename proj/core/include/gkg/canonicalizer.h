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

#ifndef GKG_CANONICALIZER_H_
#define GKG_CANONICALIZER_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "gkg/format.h"
#include "gkg/graph.h"
#include "gkg/labels.h"
#include "gkg/schema.h"
#include "gkg/type_hierarchy.h"

namespace gkg {

// First rule, in file order, whose relation name tokenizes to the same
// lowercase token sequence as `label` ("born_in" ~ "bornIn").
const ReificationRule *NormalizeRelationName(
    std::string_view label, std::span<const ReificationRule> rules);

// A FUNCTIONAL slot that received two different values in one run.
struct SlotConflict {
  NodeId event;
  NodeId attr_type;
  std::vector<std::string> values;

  friend bool operator==(const SlotConflict &, const SlotConflict &) = default;
};

struct CanonReport {
  std::size_t mapped_triples = 0;
  std::size_t events_created = 0;
  std::size_t events_coalesced = 0;
  std::size_t entity_nodes_created = 0;
  // Mapped relation but a blank subject or object.
  std::size_t rejected_triples = 0;
  std::set<std::string> unmapped_relations;
  std::vector<SlotConflict> conflicts;

  std::string ToText() const;
};

struct CanonResult {
  GroundedGraph graph;
  // Entity labels in `label_lang`, keyed by the generated entity nodes.
  LabelTable labels;
  CanonReport report;
};

struct CanonOptions {
  // CARD and ATTRDECL are honoured; default CARD is ONE, default slot MULTI.
  SchemaDecls decls;
  // Entity label -> instance type, default core:Entity.
  std::map<std::string, NodeId> entity_types;
  std::string label_lang = "en";
  std::string source_id;
};

// Rewrites flat triples into reified events. Node identifiers are derived
// from content (FNV-1a-64) so the output does not depend on triple order:
//
//   event      ev:<EventLocal>#hash(eventType, subject)        CARD ONE
//              ev:<EventLocal>#hash(eventType, subject, rel, object)  MANY
//   attribute  at:<AttrLocal>#hash(event, attrType[, literal if MULTI])
//   value      val:<ValueLocal>#hash(attribute, literal)
//   entity     ent:<label> when the label is a plain identifier, else
//              ent:<sanitized>~hash(label)
//
// Unmapped relations are reported and their triples skipped. Throws
// kUnknownType when a rule or entity type is missing from `h`.
CanonResult Canonicalize(std::span<const FlatTriple> triples,
                         std::span<const ReificationRule> rules,
                         const TypeHierarchy &h, const CanonOptions &options);

// Convenience overload reading rules, hierarchy, declarations and entity
// types from a parsed rule file.
CanonResult Canonicalize(std::span<const FlatTriple> triples,
                         const RuleFile &rules);

// Flat projection of a canonical graph: one triple per (subject, attribute
// value) or (subject, participant) that some rule can express, using the
// first such rule's relation name. Canonicalize(Flatten(c)) reproduces the
// events of `c`.
std::vector<FlatTriple> Flatten(const GroundedGraph &g,
                                const LabelTable &labels,
                                std::span<const ReificationRule> rules,
                                const std::string &label_lang = "en");

// Packs a canonicalization result with its schema into a document.
GkgDocument ToDocument(const CanonResult &result, const RuleFile &rules);

}  // namespace gkg

#endif  // GKG_CANONICALIZER_H_
