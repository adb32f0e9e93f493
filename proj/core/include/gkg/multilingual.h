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

#ifndef GKG_MULTILINGUAL_H_
#define GKG_MULTILINGUAL_H_

#include <map>
#include <set>
#include <string>
#include <string_view>

#include "gkg/graph.h"
#include "gkg/labels.h"

namespace gkg {

// A graph seen through one language. Structure is copied verbatim; only
// the labels differ between views of the same graph.
struct LabeledView {
  std::string lang;
  std::map<NodeId, std::string> node_labels;
  std::set<Edge> edges;
  std::map<Relation, std::string> relation_glosses;
};

// Node labels fall back lang -> en -> NodeId local part. Relation glosses
// come from `rel:<name>` labels in `lang`, else the canonical name.
LabeledView Render(const GroundedGraph &g, const LabelTable &labels,
                   std::string_view lang);

struct IsoCheck {
  bool isomorphic = true;
  // First structural difference, empty when isomorphic.
  std::string witness;
};

// Shared-id structural equality: same node ids and same edges. Labels are
// ignored.
IsoCheck CheckIsomorphic(const LabeledView &v1, const LabeledView &v2);

// `node TAB label` lines, a blank line, then `subj TAB gloss TAB obj` lines
// using the view's labels.
std::string SerializeView(const LabeledView &view);

}  // namespace gkg

#endif  // GKG_MULTILINGUAL_H_
