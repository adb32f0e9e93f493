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

#include "gkg/merge.h"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace gkg {
namespace {

std::string Join(const std::vector<std::string> &values) {
  std::string out;
  for (const std::string &v : values) {
    if (!out.empty()) out += ";";
    out += v;
  }
  return out;
}

// Attribute nodes inhering in `event`, grouped by attribute type.
std::map<NodeId, std::vector<NodeId>> AttributesByType(const GroundedGraph &g,
                                                       const NodeId &event) {
  std::map<NodeId, std::vector<NodeId>> out;
  for (const Edge &e : g.EdgesTo(event, Relation::kHasProp)) {
    const Node &attr = g.node(e.subject);
    if (attr.inst_of) out[*attr.inst_of].push_back(attr.id);
  }
  return out;
}

// Literal -> value node for the values of `attrs`.
std::map<std::string, NodeId> ValuesOf(const GroundedGraph &g,
                                       std::span<const NodeId> attrs) {
  std::map<std::string, NodeId> out;
  for (const NodeId &attr : attrs) {
    for (const Edge &e : g.EdgesFrom(attr, Relation::kHasValue)) {
      const Node &v = g.node(e.object);
      if (v.literal) out.emplace(*v.literal, v.id);
    }
  }
  return out;
}

std::vector<std::string> Literals(const std::map<std::string, NodeId> &values) {
  std::vector<std::string> out;
  for (const auto &[literal, id] : values) out.push_back(literal);
  return out;
}

class Merger {
 public:
  Merger(const GroundedGraph &a, const LabelTable &labels_a,
         const GroundedGraph &b, const LabelTable &labels_b,
         const MergePolicy &policy)
      : a_(a), b_(b), labels_b_(labels_b), policy_(policy) {
    result_.graph = a;
    result_.graph.set_revision(std::max(a.revision(), b.revision()));
    result_.labels = labels_a;
  }

  MergeResult Run(std::span<const Match> alignment) {
    MapContinuants(alignment);
    CoalesceEvents();
    for (const auto &[ob, oa] : coalesced_) FuseAttributes(ob, oa);
    AddRemainingNodes();
    AddEdges();
    AddLabels();
    for (const auto &[from, to] : id_map_) {
      if (!dropped_.contains(from)) result_.report.id_map.emplace(from, to);
    }
    return std::move(result_);
  }

 private:
  void MapContinuants(std::span<const Match> alignment) {
    std::set<NodeId> seen_a, seen_b;
    for (const Match &m : alignment) {
      const Node *na = a_.FindNode(m.a);
      const Node *nb = b_.FindNode(m.b);
      if (na == nullptr || nb == nullptr ||
          na->kind != NodeKind::kContinuant ||
          nb->kind != NodeKind::kContinuant) {
        throw Error(ErrorCode::kAlignmentGraphMismatch,
                    m.a.str() + " / " + m.b.str());
      }
      if (!seen_a.insert(m.a).second || !seen_b.insert(m.b).second) {
        throw Error(ErrorCode::kAlignmentGraphMismatch,
                    "alignment is not one-to-one at " + m.a.str() + " / " +
                        m.b.str());
      }
      id_map_[m.b] = m.a;
      result_.report.eq.emplace_back(m.a, m.b);
      ++result_.report.merged;
    }
  }

  Cardinality CardinalityOf(const NodeId &type) const {
    auto it = policy_.cardinality.find(type);
    return it == policy_.cardinality.end() ? Cardinality::kOne : it->second;
  }

  AttrMode AttrModeOf(const NodeId &event_type, const NodeId &attr_type) const {
    auto it = policy_.attr_modes.find({event_type, attr_type});
    return it == policy_.attr_modes.end() ? AttrMode::kMulti : it->second;
  }

  // Participation edges of an event as (relation, participant), with
  // participants translated through `map`; nullopt if one is unmapped.
  template <typename Map>
  std::optional<std::set<std::pair<Relation, NodeId>>> Participants(
      const GroundedGraph &g, const NodeId &event, const Map &map) const {
    std::set<std::pair<Relation, NodeId>> out;
    for (const Edge &e : g.EdgesFrom(event)) {
      if (!IsParticipationRelation(e.relation)) continue;
      std::optional<NodeId> to = map(e.object);
      if (!to) return std::nullopt;
      out.emplace(e.relation, *to);
    }
    return out;
  }

  std::set<std::pair<NodeId, std::string>> AttrContent(const GroundedGraph &g,
                                                       const NodeId &event) const {
    std::set<std::pair<NodeId, std::string>> out;
    for (const auto &[type, attrs] : AttributesByType(g, event)) {
      for (const auto &[literal, id] : ValuesOf(g, attrs)) {
        out.emplace(type, literal);
      }
    }
    return out;
  }

  std::optional<NodeId> MapB(const NodeId &id) const {
    auto it = id_map_.find(id);
    if (it == id_map_.end()) return std::nullopt;
    return it->second;
  }

  // Whether B occurrent `ob` describes the same happening as A occurrent
  // `oa`: for CARD ONE a shared type and a shared (mapped) participant, for
  // CARD MANY equal participants and equal attribute content.
  bool SameEvent(const NodeId &ob, const NodeId &oa) const {
    const Node &eb = b_.node(ob);
    const Node *ea = a_.FindNode(oa);
    if (ea == nullptr || ea->kind != NodeKind::kOccurrent ||
        ea->inst_of != eb.inst_of) {
      return false;
    }
    if (CardinalityOf(*eb.inst_of) == Cardinality::kOne) {
      std::set<NodeId> participants_a;
      for (const Edge &e : a_.EdgesFrom(oa)) {
        if (IsParticipationRelation(e.relation)) participants_a.insert(e.object);
      }
      for (const Edge &e : b_.EdgesFrom(ob)) {
        if (!IsParticipationRelation(e.relation)) continue;
        std::optional<NodeId> xa = MapB(e.object);
        if (xa && participants_a.contains(*xa)) return true;
      }
      return false;
    }
    auto map_b = [&](const NodeId &id) { return MapB(id); };
    auto identity = [](const NodeId &id) -> std::optional<NodeId> { return id; };
    auto parts_b = Participants(b_, ob, map_b);
    return parts_b && !parts_b->empty() &&
           Participants(a_, oa, identity) == parts_b &&
           AttrContent(a_, oa) == AttrContent(b_, ob);
  }

  void CoalesceEvents() {
    std::set<NodeId> claimed;
    auto fuse = [&](const NodeId &ob, const NodeId &oa) {
      claimed.insert(oa);
      id_map_[ob] = oa;
      coalesced_.emplace_back(ob, oa);
      ++result_.report.events_coalesced;
    };
    std::vector<NodeId> pending;
    // Events that kept their id on both sides pair up first.
    for (const NodeId &ob : b_.NodesOfKind(NodeKind::kOccurrent)) {
      if (!b_.node(ob).inst_of) continue;
      if (SameEvent(ob, ob)) {
        fuse(ob, ob);
      } else {
        pending.push_back(ob);
      }
    }
    for (const NodeId &ob : pending) {
      bool many = CardinalityOf(*b_.node(ob).inst_of) == Cardinality::kMany;
      std::set<NodeId> candidates;
      for (const Edge &e : b_.EdgesFrom(ob)) {
        if (!IsParticipationRelation(e.relation)) continue;
        std::optional<NodeId> xa = MapB(e.object);
        if (!xa) continue;
        for (const Edge &back : a_.EdgesTo(*xa)) {
          if (IsParticipationRelation(back.relation)) candidates.insert(back.subject);
        }
      }
      for (const NodeId &oa : candidates) {
        if (many && claimed.contains(oa)) continue;
        if (SameEvent(ob, oa)) {
          fuse(ob, oa);
          break;
        }
      }
    }
  }

  void MapValues(const NodeId &b_attr, const std::map<std::string, NodeId> &a_values) {
    for (const Edge &e : b_.EdgesFrom(b_attr, Relation::kHasValue)) {
      const Node &v = b_.node(e.object);
      if (!v.literal) continue;
      auto it = a_values.find(*v.literal);
      if (it != a_values.end()) id_map_[v.id] = it->second;
    }
  }

  void DropFromOutput(const std::vector<NodeId> &attrs) {
    std::set<NodeId> values;
    for (const NodeId &attr : attrs) {
      for (const Edge &e : result_.graph.EdgesFrom(attr, Relation::kHasValue)) {
        values.insert(e.object);
      }
      result_.graph.RemoveNode(attr);
      result_.labels.EraseNode(attr);
    }
    for (const NodeId &v : values) {
      if (result_.graph.EdgesTo(v).empty()) {
        result_.graph.RemoveNode(v);
        result_.labels.EraseNode(v);
      }
    }
  }

  void DropFromB(const std::vector<NodeId> &attrs) {
    for (const NodeId &attr : attrs) {
      dropped_.insert(attr);
      for (const Edge &e : b_.EdgesFrom(attr, Relation::kHasValue)) {
        bool shared = false;
        for (const Edge &in : b_.EdgesTo(e.object, Relation::kHasValue)) {
          if (std::find(attrs.begin(), attrs.end(), in.subject) == attrs.end()) {
            shared = true;
          }
        }
        if (!shared) dropped_.insert(e.object);
      }
    }
  }

  // The first A attribute carrying exactly the literals of `b_attr`.
  std::optional<NodeId> SameValued(const NodeId &b_attr,
                                   const std::vector<NodeId> &a_attrs) const {
    auto want = Literals(ValuesOf(b_, std::span(&b_attr, 1)));
    for (const NodeId &a_attr : a_attrs) {
      if (Literals(ValuesOf(a_, std::span(&a_attr, 1))) == want) return a_attr;
    }
    return std::nullopt;
  }

  void FuseAttributes(const NodeId &ob, const NodeId &oa) {
    const NodeId &event_type = *a_.node(oa).inst_of;
    auto a_groups = AttributesByType(a_, oa);
    for (const auto &[attr_type, b_attrs] : AttributesByType(b_, ob)) {
      auto it = a_groups.find(attr_type);
      if (it == a_groups.end()) continue;
      const std::vector<NodeId> &a_attrs = it->second;
      MergeSlot slot{oa, event_type, attr_type};
      if (AttrModeOf(event_type, attr_type) == AttrMode::kMulti) {
        for (const NodeId &b_attr : b_attrs) {
          if (auto a_attr = SameValued(b_attr, a_attrs)) {
            id_map_[b_attr] = *a_attr;
            MapValues(b_attr, ValuesOf(a_, std::span(&*a_attr, 1)));
          }
        }
        continue;
      }

      auto a_values = ValuesOf(a_, a_attrs);
      auto b_values = ValuesOf(b_, b_attrs);
      std::vector<std::string> va = Literals(a_values);
      std::vector<std::string> vb = Literals(b_values);
      if (va == vb) {
        for (const NodeId &b_attr : b_attrs) {
          id_map_[b_attr] = SameValued(b_attr, a_attrs).value_or(a_attrs.front());
          MapValues(b_attr, a_values);
        }
      } else if (policy_.prefer_newer && a_.revision() != b_.revision()) {
        if (b_.revision() > a_.revision()) {
          DropFromOutput(a_attrs);
          result_.report.updated.push_back({slot, va, vb, b_.revision()});
        } else {
          DropFromB(b_attrs);
          result_.report.updated.push_back({slot, vb, va, a_.revision()});
        }
      } else {
        for (const NodeId &b_attr : b_attrs) {
          id_map_[b_attr] = SameValued(b_attr, a_attrs).value_or(a_attrs.front());
          MapValues(b_attr, a_values);
        }
        std::set<std::string> all(va.begin(), va.end());
        all.insert(vb.begin(), vb.end());
        result_.report.conflicts.push_back({slot, {all.begin(), all.end()}});
      }
    }
  }

  NodeId FreshId(const NodeId &id) const {
    for (int n = 1;; ++n) {
      std::string candidate = id.str() + "~b" + (n == 1 ? "" : std::to_string(n));
      NodeId fresh = NodeId::Parse(candidate);
      if (!result_.graph.HasNode(fresh) && !b_.HasNode(fresh) &&
          !a_.HasNode(fresh)) {
        return fresh;
      }
    }
  }

  void AddRemainingNodes() {
    for (const auto &[id, node] : b_.nodes()) {
      if (dropped_.contains(id)) continue;
      if (node.kind == NodeKind::kType) {
        id_map_[id] = id;
        if (!result_.graph.HasNode(id)) {
          result_.graph.AddNode(node);
          ++result_.report.added_nodes;
        }
        continue;
      }
      if (id_map_.contains(id)) continue;
      NodeId target = result_.graph.HasNode(id) ? FreshId(id) : id;
      Node copy = node;
      copy.id = target;
      result_.graph.AddNode(std::move(copy));
      id_map_[id] = target;
      ++result_.report.added_nodes;
    }
  }

  void AddEdges() {
    for (const Edge &e : b_.edges()) {
      if (dropped_.contains(e.subject) || dropped_.contains(e.object)) continue;
      const NodeId &s = id_map_.at(e.subject);
      const NodeId &o = id_map_.at(e.object);
      if (result_.graph.AddEdge(s, e.relation, o)) ++result_.report.added_edges;
    }
  }

  void AddLabels() {
    for (const auto &[key, label] : labels_b_.entries()) {
      const NodeId &id = key.first;
      if (dropped_.contains(id)) continue;
      auto it = id_map_.find(id);
      if (it != id_map_.end()) {
        result_.labels.Insert(it->second, key.second, label);
      } else if (!b_.HasNode(id)) {
        // Glosses and type labels are shared by id.
        result_.labels.Insert(id, key.second, label);
      }
    }
  }

  const GroundedGraph &a_;
  const GroundedGraph &b_;
  const LabelTable &labels_b_;
  const MergePolicy &policy_;
  MergeResult result_;
  std::map<NodeId, NodeId> id_map_;
  std::set<NodeId> dropped_;
  std::vector<std::pair<NodeId, NodeId>> coalesced_;
};

}  // namespace

MergePolicy MergePolicy::FromDecls(const SchemaDecls &decls) {
  MergePolicy p;
  p.attr_modes = decls.attr_modes;
  p.cardinality = decls.cardinality;
  return p;
}

std::string MergeSlot::ToString() const {
  return event.str() + "/" + attr_type.str();
}

std::string MergeReport::ToTsv() const {
  std::string out;
  out += "merged\t" + std::to_string(merged) + "\n";
  out += "events_coalesced\t" + std::to_string(events_coalesced) + "\n";
  out += "added_nodes\t" + std::to_string(added_nodes) + "\n";
  out += "added_edges\t" + std::to_string(added_edges) + "\n";
  for (const auto &[a, b] : eq) out += "eq\t" + a.str() + "\t" + b.str() + "\n";
  for (const SlotUpdate &u : updated) {
    out += "updated\t" + u.slot.ToString() + "\t" +
           std::to_string(u.winner_revision) + "\t" + Join(u.old_values) +
           "\t" + Join(u.new_values) + "\n";
  }
  for (const MergeConflict &c : conflicts) {
    out += "conflict\t" + c.slot.ToString() + "\t" + Join(c.values) + "\n";
  }
  for (const auto &[from, to] : id_map) {
    if (from != to) out += "idmap\t" + from.str() + "\t" + to.str() + "\n";
  }
  return out;
}

MergeResult Merge(const GroundedGraph &a, const LabelTable &labels_a,
                  const GroundedGraph &b, const LabelTable &labels_b,
                  std::span<const Match> alignment, const MergePolicy &policy,
                  const TypeHierarchy & /*h*/) {
  return Merger(a, labels_a, b, labels_b, policy).Run(alignment);
}

}  // namespace gkg
