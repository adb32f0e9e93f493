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

#ifndef GKG_GRAPH_H_
#define GKG_GRAPH_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "gkg/error.h"
#include "gkg/node_id.h"
#include "gkg/vocabulary.h"

namespace gkg {

struct Node {
  NodeId id;
  NodeKind kind = NodeKind::kContinuant;
  // The single most-specific type. Required for every kind except kType.
  std::optional<NodeId> inst_of;
  // Present iff kind == kValue.
  std::optional<std::string> literal;

  friend bool operator==(const Node &, const Node &) = default;
};

struct Edge {
  NodeId subject;
  Relation relation;
  NodeId object;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

class SignatureViolation : public Error {
 public:
  SignatureViolation(Relation relation, NodeKind subject, NodeKind object);

  Relation relation() const { return relation_; }
  NodeKind subject_kind() const { return subject_; }
  NodeKind object_kind() const { return object_; }

 private:
  Relation relation_;
  NodeKind subject_;
  NodeKind object_;
};

// Typed nodes joined only by primitive relations. Edges have set semantics
// and are checked against the signature table on insertion; node-level
// typing rules are left to ValidateGraph so that partially built graphs can
// still be reported on.
class GroundedGraph {
 public:
  GroundedGraph() = default;
  explicit GroundedGraph(std::string source_id, std::uint64_t revision = 0)
      : source_id_(std::move(source_id)), revision_(revision) {}

  // Idempotent for an identical node; kDuplicateNode otherwise.
  void AddNode(Node node);

  // Returns false if the edge was already present. Throws kUnknownNode or
  // SignatureViolation.
  bool AddEdge(const NodeId &subject, Relation relation, const NodeId &object);
  bool AddEdge(const Edge &edge) {
    return AddEdge(edge.subject, edge.relation, edge.object);
  }

  // Drops a node together with its incident edges.
  void RemoveNode(const NodeId &id);
  bool RemoveEdge(const Edge &edge);

  const Node *FindNode(const NodeId &id) const;
  // Throws kUnknownNode.
  const Node &node(const NodeId &id) const;
  bool HasNode(const NodeId &id) const { return nodes_.contains(id); }
  bool HasEdge(const Edge &edge) const { return edges_.contains(edge); }

  const std::map<NodeId, Node> &nodes() const { return nodes_; }
  const std::set<Edge> &edges() const { return edges_; }

  std::vector<Edge> EdgesFrom(const NodeId &subject) const;
  std::vector<Edge> EdgesFrom(const NodeId &subject, Relation relation) const;
  std::vector<Edge> EdgesTo(const NodeId &object) const;
  std::vector<Edge> EdgesTo(const NodeId &object, Relation relation) const;

  std::vector<NodeId> NodesOfKind(NodeKind kind) const;
  std::size_t CountKind(NodeKind kind) const;

  const std::string &source_id() const { return source_id_; }
  void set_source_id(std::string id) { source_id_ = std::move(id); }
  std::uint64_t revision() const { return revision_; }
  void set_revision(std::uint64_t revision) { revision_ = revision; }

  friend bool operator==(const GroundedGraph &a, const GroundedGraph &b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_ &&
           a.source_id_ == b.source_id_ && a.revision_ == b.revision_;
  }

 private:
  std::map<NodeId, Node> nodes_;
  std::set<Edge> edges_;
  // (object, relation, subject) index for reverse lookups.
  std::set<std::tuple<NodeId, Relation, NodeId>> reverse_;
  std::string source_id_;
  std::uint64_t revision_ = 0;
};

}  // namespace gkg

#endif  // GKG_GRAPH_H_
