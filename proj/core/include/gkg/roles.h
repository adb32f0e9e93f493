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

#ifndef GKG_ROLES_H_
#define GKG_ROLES_H_

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "gkg/graph.h"
#include "gkg/type_hierarchy.h"

namespace gkg {

// A role concept such as Teacher: never a type, only a label an instance of
// `base_type` earns by standing in relation `via` to an occurrent of
// `occurrent_type`.
struct RoleConceptDef {
  std::string role_name;
  NodeId base_type;
  Relation via = Relation::kHasAgent;
  NodeId occurrent_type;

  friend auto operator<=>(const RoleConceptDef &,
                          const RoleConceptDef &) = default;
};

struct RoleLabel {
  NodeId entity;
  std::string role;

  friend auto operator<=>(const RoleLabel &, const RoleLabel &) = default;
};

// Throws kUnknownType or kInvalidRoleRelation for a bad definition.
void CheckRoleDefinition(const RoleConceptDef &def, const TypeHierarchy &h);

// Every (entity, role) earned in `g`, sorted and without repeats.
std::vector<RoleLabel> InferRoleLabels(const GroundedGraph &g,
                                       const TypeHierarchy &h,
                                       std::span<const RoleConceptDef> defs);

}  // namespace gkg

#endif  // GKG_ROLES_H_
