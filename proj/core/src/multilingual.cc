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

#include <algorithm>
#include <iterator>
#include <optional>
#include <vector>

namespace gkg {
namespace {

std::string EdgeString(const Edge &e) {
  return e.subject.str() + " " + std::string(RelationName(e.relation)) + " " +
         e.object.str();
}

}  // namespace

LabeledView Render(const GroundedGraph &g, const LabelTable &labels,
                   std::string_view lang) {
  LabeledView view;
  view.lang = std::string(lang);
  for (const auto &[id, node] : g.nodes()) {
    std::optional<std::string_view> label = labels.Get(id, lang);
    if (!label) label = labels.Get(id, "en");
    view.node_labels.emplace(id, label ? std::string(*label) : std::string(id.local()));
  }
  view.edges = g.edges();
  for (Relation r : kAllRelations) {
    std::optional<std::string_view> gloss = labels.Get(RelationGlossId(r), lang);
    view.relation_glosses.emplace(
        r, gloss ? std::string(*gloss) : std::string(RelationName(r)));
  }
  return view;
}

IsoCheck CheckIsomorphic(const LabeledView &v1, const LabeledView &v2) {
  auto n1 = v1.node_labels.begin();
  auto n2 = v2.node_labels.begin();
  while (n1 != v1.node_labels.end() || n2 != v2.node_labels.end()) {
    if (n2 == v2.node_labels.end() ||
        (n1 != v1.node_labels.end() && n1->first < n2->first)) {
      return {false, "node only in first: " + n1->first.str()};
    }
    if (n1 == v1.node_labels.end() || n2->first < n1->first) {
      return {false, "node only in second: " + n2->first.str()};
    }
    ++n1;
    ++n2;
  }
  std::vector<Edge> only1, only2;
  std::set_difference(v1.edges.begin(), v1.edges.end(), v2.edges.begin(),
                      v2.edges.end(), std::back_inserter(only1));
  std::set_difference(v2.edges.begin(), v2.edges.end(), v1.edges.begin(),
                      v1.edges.end(), std::back_inserter(only2));
  if (!only1.empty() && (only2.empty() || only1.front() < only2.front())) {
    return {false, "edge only in first: " + EdgeString(only1.front())};
  }
  if (!only2.empty()) {
    return {false, "edge only in second: " + EdgeString(only2.front())};
  }
  return {};
}

std::string SerializeView(const LabeledView &view) {
  std::string out;
  for (const auto &[id, label] : view.node_labels) {
    out += id.str() + "\t" + label + "\n";
  }
  out += "\n";
  for (const Edge &e : view.edges) {
    auto label = [&](const NodeId &id) -> const std::string & {
      auto it = view.node_labels.find(id);
      return it == view.node_labels.end() ? id.str() : it->second;
    };
    out += label(e.subject) + "\t" + view.relation_glosses.at(e.relation) +
           "\t" + label(e.object) + "\n";
  }
  return out;
}

}  // namespace gkg
