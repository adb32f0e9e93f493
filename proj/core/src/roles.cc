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

#include <algorithm>

namespace gkg {

void CheckRoleDefinition(const RoleConceptDef &def, const TypeHierarchy &h) {
  if (!IsParticipationRelation(def.via)) {
    throw Error(ErrorCode::kInvalidRoleRelation,
                def.role_name + " via " + std::string(RelationName(def.via)));
  }
  for (const NodeId *t : {&def.base_type, &def.occurrent_type}) {
    if (!h.Contains(*t)) {
      throw Error(ErrorCode::kUnknownType, def.role_name + ": " + t->str());
    }
  }
}

std::vector<RoleLabel> InferRoleLabels(const GroundedGraph &g,
                                       const TypeHierarchy &h,
                                       std::span<const RoleConceptDef> defs) {
  for (const RoleConceptDef &def : defs) CheckRoleDefinition(def, h);

  auto typed_under = [&](const Node &n, const NodeId &type) {
    return n.inst_of && h.Contains(*n.inst_of) && h.IsSubtype(*n.inst_of, type);
  };

  std::vector<RoleLabel> out;
  for (const RoleConceptDef &def : defs) {
    for (const NodeId &o : g.NodesOfKind(NodeKind::kOccurrent)) {
      if (!typed_under(g.node(o), def.occurrent_type)) continue;
      for (const Edge &e : g.EdgesFrom(o, def.via)) {
        if (typed_under(g.node(e.object), def.base_type)) {
          out.push_back({e.object, def.role_name});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace gkg
