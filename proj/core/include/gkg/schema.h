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

#ifndef GKG_SCHEMA_H_
#define GKG_SCHEMA_H_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gkg/node_id.h"
#include "gkg/roles.h"
#include "gkg/vocabulary.h"

namespace gkg {

// An ad-hoc relation label (e1, r, e2) as found in ordinary KGs.
struct FlatTriple {
  std::string e1;
  std::string r;
  std::string e2;

  friend auto operator<=>(const FlatTriple &, const FlatTriple &) = default;
};

enum class Cardinality { kOne, kMany };
enum class AttrMode { kFunctional, kMulti };

// Schema annotations carried alongside a graph.
struct SchemaDecls {
  // Event types whose attributes enter entity signatures.
  std::set<NodeId> essential;
  // Events per (subject, event type); kOne unless declared.
  std::map<NodeId, Cardinality> cardinality;
  // Values per (event type, attribute type) slot; kMulti unless declared.
  std::map<std::pair<NodeId, NodeId>, AttrMode> attr_modes;
  std::set<RoleConceptDef> roles;

  Cardinality CardinalityOf(const NodeId &event_type) const;
  AttrMode AttrModeOf(const NodeId &event_type, const NodeId &attr_type) const;

  // Union; throws kInvalidArgument on contradicting declarations.
  static SchemaDecls Union(const SchemaDecls &a, const SchemaDecls &b);

  friend bool operator==(const SchemaDecls &, const SchemaDecls &) = default;
};

// Object side of a reification rule: either the object is a value for an
// attribute of the event, or it is another participant.
struct AttrSlot {
  NodeId attr_type;
  NodeId value_type;
  friend bool operator==(const AttrSlot &, const AttrSlot &) = default;
};
struct ParticipantSlot {
  Relation role = Relation::kParticipantIn;
  friend bool operator==(const ParticipantSlot &,
                         const ParticipantSlot &) = default;
};

// Maps a relation name such as `bornIn` onto an event schema.
struct ReificationRule {
  std::string rel_name;
  NodeId event_type;
  Relation subject_role = Relation::kParticipantIn;
  std::variant<AttrSlot, ParticipantSlot> object_slot;

  friend bool operator==(const ReificationRule &,
                         const ReificationRule &) = default;
};

}  // namespace gkg

#endif  // GKG_SCHEMA_H_
