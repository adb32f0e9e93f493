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

#include "gkg/schema.h"

#include "gkg/error.h"

namespace gkg {

Cardinality SchemaDecls::CardinalityOf(const NodeId &event_type) const {
  auto it = cardinality.find(event_type);
  return it == cardinality.end() ? Cardinality::kOne : it->second;
}

AttrMode SchemaDecls::AttrModeOf(const NodeId &event_type,
                                 const NodeId &attr_type) const {
  auto it = attr_modes.find({event_type, attr_type});
  return it == attr_modes.end() ? AttrMode::kMulti : it->second;
}

SchemaDecls SchemaDecls::Union(const SchemaDecls &a, const SchemaDecls &b) {
  SchemaDecls out = a;
  out.essential.insert(b.essential.begin(), b.essential.end());
  out.roles.insert(b.roles.begin(), b.roles.end());
  for (const auto &[t, c] : b.cardinality) {
    auto [it, inserted] = out.cardinality.emplace(t, c);
    if (!inserted && it->second != c) {
      throw Error(ErrorCode::kInvalidArgument, "conflicting CARD for " + t.str());
    }
  }
  for (const auto &[k, m] : b.attr_modes) {
    auto [it, inserted] = out.attr_modes.emplace(k, m);
    if (!inserted && it->second != m) {
      throw Error(ErrorCode::kInvalidArgument,
                  "conflicting ATTRDECL for " + k.first.str() + " " +
                      k.second.str());
    }
  }
  return out;
}

}  // namespace gkg
