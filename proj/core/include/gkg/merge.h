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

#ifndef GKG_MERGE_H_
#define GKG_MERGE_H_

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "gkg/alignment.h"
#include "gkg/graph.h"
#include "gkg/labels.h"
#include "gkg/schema.h"
#include "gkg/type_hierarchy.h"

namespace gkg {

struct MergePolicy {
  // (event type, attribute type) -> FUNCTIONAL | MULTI; MULTI by default.
  std::map<std::pair<NodeId, NodeId>, AttrMode> attr_modes;
  // Event cardinalities; ONE by default.
  std::map<NodeId, Cardinality> cardinality;
  // Resolve FUNCTIONAL disagreements in favour of the higher revision.
  // When false every disagreement is reported as a conflict.
  bool prefer_newer = true;

  static MergePolicy FromDecls(const SchemaDecls &decls);
};

// An attribute slot of a fused event, named by the output event id.
struct MergeSlot {
  NodeId event;
  NodeId event_type;
  NodeId attr_type;

  std::string ToString() const;
  friend auto operator<=>(const MergeSlot &, const MergeSlot &) = default;
};

struct SlotUpdate {
  MergeSlot slot;
  std::vector<std::string> old_values;
  std::vector<std::string> new_values;
  std::uint64_t winner_revision = 0;
};

struct MergeConflict {
  MergeSlot slot;
  std::vector<std::string> values;
};

struct MergeReport {
  std::size_t merged = 0;
  std::size_t events_coalesced = 0;
  std::vector<SlotUpdate> updated;
  std::vector<MergeConflict> conflicts;
  std::size_t added_nodes = 0;
  std::size_t added_edges = 0;
  // B-side id -> output id, for every B node that survived.
  std::map<NodeId, NodeId> id_map;
  // Provenance of fused continuants; not materialized as graph edges.
  std::vector<std::pair<NodeId, NodeId>> eq;

  // TSV sections: summary, eq, updated, conflict, idmap.
  std::string ToTsv() const;
};

struct MergeResult {
  GroundedGraph graph;
  LabelTable labels;
  MergeReport report;
};

// Fuses `b` into `a`. Matched continuants keep their A-side id; their
// events coalesce by (entity, event type) for CARD ONE types and by full
// content for CARD MANY. FUNCTIONAL slots that disagree keep the value of
// the higher-revision graph (the superseded value only survives in the
// report); equal revisions keep both values and report a conflict. MULTI
// slots union. Everything unmatched is added, renaming B ids that collide
// with A ids. Throws kAlignmentGraphMismatch for alignments naming unknown
// continuants.
MergeResult Merge(const GroundedGraph &a, const LabelTable &labels_a,
                  const GroundedGraph &b, const LabelTable &labels_b,
                  std::span<const Match> alignment, const MergePolicy &policy,
                  const TypeHierarchy &h);

}  // namespace gkg

#endif  // GKG_MERGE_H_
