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

#ifndef GKG_TYPE_HIERARCHY_H_
#define GKG_TYPE_HIERARCHY_H_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "gkg/error.h"
#include "gkg/node_id.h"

namespace gkg {

// One `isA` declaration as read from a file. A missing parent means the
// root type.
struct TypeDecl {
  NodeId type;
  std::optional<NodeId> parent;
  int line = 0;
};

// Raised by batch loading; `line` is taken from the offending declaration.
class HierarchyError : public Error {
 public:
  HierarchyError(ErrorCode code, int line, const std::string &message)
      : Error(code, message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Acyclic subtype structure rooted at core:Entity. Multiple parents are
// allowed, so this is a DAG rather than a tree.
class TypeHierarchy {
 public:
  // A hierarchy holding only the root.
  TypeHierarchy();

  // Loads all declarations at once so forward references are allowed.
  // Throws HierarchyError with kDuplicateType, kUnknownParent or
  // kCycleWouldForm.
  static TypeHierarchy FromDeclarations(std::span<const TypeDecl> decls);

  // Adds `type` under `parent` (root when absent).
  void AddType(const NodeId &type, std::optional<NodeId> parent = {});

  // Adds a further isA edge to an existing type.
  void AddParent(const NodeId &type, const NodeId &parent);

  bool Contains(const NodeId &type) const { return parents_.contains(type); }
  std::size_t size() const { return parents_.size(); }

  // Reflexive-transitive isA reachability. Throws kUnknownType.
  bool IsSubtype(const NodeId &a, const NodeId &b) const;

  // `type` and every type above it, sorted.
  std::vector<NodeId> Ancestors(const NodeId &type) const;

  const std::set<NodeId> &Parents(const NodeId &type) const;

  // Every type mapped to its direct parents; the root maps to {}.
  const std::map<NodeId, std::set<NodeId>> &parents() const {
    return parents_;
  }

  // Union of two hierarchies over the same type universe.
  static TypeHierarchy Union(const TypeHierarchy &a, const TypeHierarchy &b);

  friend bool operator==(const TypeHierarchy &,
                         const TypeHierarchy &) = default;

 private:
  void RequireType(const NodeId &type) const;

  std::map<NodeId, std::set<NodeId>> parents_;
};

}  // namespace gkg

#endif  // GKG_TYPE_HIERARCHY_H_
