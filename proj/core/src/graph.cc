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

#include "gkg/graph.h"

namespace gkg {

SignatureViolation::SignatureViolation(Relation relation, NodeKind subject,
                                       NodeKind object)
    : Error(ErrorCode::kSignatureViolation,
            std::string(RelationName(relation)) + "(" +
                std::string(NodeKindName(subject)) + ", " +
                std::string(NodeKindName(object)) + ")"),
      relation_(relation),
      subject_(subject),
      object_(object) {}

void GroundedGraph::AddNode(Node node) {
  auto it = nodes_.find(node.id);
  if (it != nodes_.end()) {
    if (it->second == node) return;
    throw Error(ErrorCode::kDuplicateNode, node.id.str());
  }
  NodeId id = node.id;
  nodes_.emplace(std::move(id), std::move(node));
}

bool GroundedGraph::AddEdge(const NodeId &subject, Relation relation,
                            const NodeId &object) {
  const Node *s = FindNode(subject);
  if (s == nullptr) throw Error(ErrorCode::kUnknownNode, subject.str());
  const Node *o = FindNode(object);
  if (o == nullptr) throw Error(ErrorCode::kUnknownNode, object.str());
  if (!SignatureAllows(relation, s->kind, o->kind)) {
    throw SignatureViolation(relation, s->kind, o->kind);
  }
  if (!edges_.insert(Edge{subject, relation, object}).second) return false;
  reverse_.emplace(object, relation, subject);
  return true;
}

bool GroundedGraph::RemoveEdge(const Edge &edge) {
  if (edges_.erase(edge) == 0) return false;
  reverse_.erase({edge.object, edge.relation, edge.subject});
  return true;
}

void GroundedGraph::RemoveNode(const NodeId &id) {
  for (const Edge &e : EdgesFrom(id)) RemoveEdge(e);
  for (const Edge &e : EdgesTo(id)) RemoveEdge(e);
  nodes_.erase(id);
}

const Node *GroundedGraph::FindNode(const NodeId &id) const {
  auto it = nodes_.find(id);
  return it == nodes_.end() ? nullptr : &it->second;
}

const Node &GroundedGraph::node(const NodeId &id) const {
  const Node *n = FindNode(id);
  if (n == nullptr) throw Error(ErrorCode::kUnknownNode, id.str());
  return *n;
}

std::vector<Edge> GroundedGraph::EdgesFrom(const NodeId &subject) const {
  std::vector<Edge> out;
  for (auto it = edges_.lower_bound(Edge{subject, Relation::kEq, NodeId()});
       it != edges_.end() && it->subject == subject; ++it) {
    out.push_back(*it);
  }
  return out;
}

std::vector<Edge> GroundedGraph::EdgesFrom(const NodeId &subject,
                                           Relation relation) const {
  std::vector<Edge> out;
  for (auto it = edges_.lower_bound(Edge{subject, relation, NodeId()});
       it != edges_.end() && it->subject == subject &&
       it->relation == relation;
       ++it) {
    out.push_back(*it);
  }
  return out;
}

std::vector<Edge> GroundedGraph::EdgesTo(const NodeId &object) const {
  std::vector<Edge> out;
  for (auto it = reverse_.lower_bound({object, Relation::kEq, NodeId()});
       it != reverse_.end() && std::get<0>(*it) == object; ++it) {
    out.push_back(Edge{std::get<2>(*it), std::get<1>(*it), object});
  }
  return out;
}

std::vector<Edge> GroundedGraph::EdgesTo(const NodeId &object,
                                         Relation relation) const {
  std::vector<Edge> out;
  for (auto it = reverse_.lower_bound({object, relation, NodeId()});
       it != reverse_.end() && std::get<0>(*it) == object &&
       std::get<1>(*it) == relation;
       ++it) {
    out.push_back(Edge{std::get<2>(*it), relation, object});
  }
  return out;
}

std::vector<NodeId> GroundedGraph::NodesOfKind(NodeKind kind) const {
  std::vector<NodeId> out;
  for (const auto &[id, n] : nodes_) {
    if (n.kind == kind) out.push_back(id);
  }
  return out;
}

std::size_t GroundedGraph::CountKind(NodeKind kind) const {
  std::size_t count = 0;
  for (const auto &[id, n] : nodes_) count += n.kind == kind;
  return count;
}

}  // namespace gkg
