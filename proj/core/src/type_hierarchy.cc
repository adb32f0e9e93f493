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

#include "gkg/type_hierarchy.h"

#include <vector>

namespace gkg {

TypeHierarchy::TypeHierarchy() { parents_[RootType()]; }

void TypeHierarchy::RequireType(const NodeId &type) const {
  if (!Contains(type)) {
    throw Error(ErrorCode::kUnknownType, type.str());
  }
}

void TypeHierarchy::AddType(const NodeId &type, std::optional<NodeId> parent) {
  if (Contains(type)) throw Error(ErrorCode::kDuplicateType, type.str());
  const NodeId &p = parent ? *parent : RootType();
  if (!Contains(p)) throw Error(ErrorCode::kUnknownParent, p.str());
  parents_[type].insert(p);
}

void TypeHierarchy::AddParent(const NodeId &type, const NodeId &parent) {
  RequireType(type);
  if (!Contains(parent)) throw Error(ErrorCode::kUnknownParent, parent.str());
  if (IsSubtype(parent, type)) {
    throw Error(ErrorCode::kCycleWouldForm,
                type.str() + " isA " + parent.str());
  }
  parents_[type].insert(parent);
}

TypeHierarchy TypeHierarchy::FromDeclarations(
    std::span<const TypeDecl> decls) {
  TypeHierarchy h;
  std::map<NodeId, int> first_line;
  for (const TypeDecl &d : decls) {
    first_line.emplace(d.type, d.line);
    if (d.type == RootType()) {
      if (d.parent) {
        throw HierarchyError(ErrorCode::kCycleWouldForm, d.line,
                             "the root type cannot have a parent");
      }
      continue;
    }
    const NodeId &p = d.parent ? *d.parent : RootType();
    if (!h.parents_[d.type].insert(p).second) {
      throw HierarchyError(ErrorCode::kDuplicateType, d.line,
                           d.type.str() + " isA " + p.str());
    }
  }
  for (const TypeDecl &d : decls) {
    if (d.parent && !h.Contains(*d.parent)) {
      throw HierarchyError(ErrorCode::kUnknownParent, d.line,
                           d.parent->str());
    }
  }

  // Three-colour DFS; a grey parent closes a cycle.
  enum Colour { kWhite, kGrey, kBlack };
  std::map<NodeId, Colour> colour;
  for (const auto &[type, unused] : h.parents_) colour[type] = kWhite;
  for (const auto &[start, unused] : h.parents_) {
    if (colour[start] != kWhite) continue;
    std::vector<std::pair<NodeId, std::set<NodeId>::const_iterator>> stack;
    colour[start] = kGrey;
    stack.emplace_back(start, h.parents_.at(start).begin());
    while (!stack.empty()) {
      auto &[node, it] = stack.back();
      if (it == h.parents_.at(node).end()) {
        colour[node] = kBlack;
        stack.pop_back();
        continue;
      }
      const NodeId &next = *it++;
      if (colour[next] == kGrey) {
        throw HierarchyError(ErrorCode::kCycleWouldForm,
                             first_line.count(node) ? first_line[node] : 0,
                             node.str() + " isA " + next.str());
      }
      if (colour[next] == kWhite) {
        colour[next] = kGrey;
        stack.emplace_back(next, h.parents_.at(next).begin());
      }
    }
  }
  return h;
}

bool TypeHierarchy::IsSubtype(const NodeId &a, const NodeId &b) const {
  RequireType(a);
  RequireType(b);
  if (a == b) return true;
  std::set<NodeId> seen{a};
  std::vector<NodeId> frontier{a};
  while (!frontier.empty()) {
    NodeId t = std::move(frontier.back());
    frontier.pop_back();
    for (const NodeId &p : parents_.at(t)) {
      if (p == b) return true;
      if (seen.insert(p).second) frontier.push_back(p);
    }
  }
  return false;
}

std::vector<NodeId> TypeHierarchy::Ancestors(const NodeId &type) const {
  RequireType(type);
  std::set<NodeId> seen{type};
  std::vector<NodeId> frontier{type};
  while (!frontier.empty()) {
    NodeId t = std::move(frontier.back());
    frontier.pop_back();
    for (const NodeId &p : parents_.at(t)) {
      if (seen.insert(p).second) frontier.push_back(p);
    }
  }
  return {seen.begin(), seen.end()};
}

const std::set<NodeId> &TypeHierarchy::Parents(const NodeId &type) const {
  RequireType(type);
  return parents_.at(type);
}

TypeHierarchy TypeHierarchy::Union(const TypeHierarchy &a,
                                   const TypeHierarchy &b) {
  std::vector<TypeDecl> decls;
  const TypeHierarchy *sides[] = {&a, &b};
  for (int side = 0; side < 2; ++side) {
    for (const auto &[type, parents] : sides[side]->parents_) {
      for (const NodeId &p : parents) {
        if (side == 1 && a.Contains(type) && a.parents_.at(type).contains(p)) {
          continue;
        }
        decls.push_back({type, p, 0});
      }
    }
  }
  return FromDeclarations(decls);
}

}  // namespace gkg
