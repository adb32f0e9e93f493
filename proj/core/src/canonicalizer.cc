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

#include "gkg/canonicalizer.h"

#include <algorithm>
#include <variant>

#include "gkg/text.h"

namespace gkg {
namespace {

std::string Hash(std::initializer_list<std::string_view> parts) {
  std::string joined;
  for (std::string_view p : parts) {
    joined.append(p);
    joined.push_back('\x1f');
  }
  return Hex64(Fnv1a64(joined));
}

std::string_view Trim(std::string_view s) {
  const char *ws = " \t\r\n\f\v";
  std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool IsIdentChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
}

NodeId EntityId(std::string_view label) {
  if (std::all_of(label.begin(), label.end(), IsIdentChar)) {
    return NodeId::Parse("ent:" + std::string(label));
  }
  std::string clean;
  for (char c : label) {
    if (IsIdentChar(c)) {
      clean += c;
    } else if (!clean.empty() && clean.back() != '_') {
      clean += '_';
    }
  }
  if (clean.empty()) clean = "x";
  return NodeId::Parse("ent:" + clean + "~" + Hash({label}));
}

std::string SlotDescriptor(const ReificationRule &rule) {
  if (const auto *attr = std::get_if<AttrSlot>(&rule.object_slot)) {
    return "attr:" + attr->attr_type.str();
  }
  return "part:" +
         std::string(RelationName(
             std::get<ParticipantSlot>(rule.object_slot).role));
}

void RequireType(const TypeHierarchy &h, const NodeId &t,
                 const std::string &where) {
  if (!h.Contains(t)) {
    throw Error(ErrorCode::kUnknownType, where + ": " + t.str());
  }
}

class Builder {
 public:
  Builder(std::span<const ReificationRule> rules, const TypeHierarchy &h,
          const CanonOptions &options)
      : rules_(rules), h_(h), options_(options) {
    result_.graph.set_source_id(options.source_id);
  }

  void Add(const FlatTriple &triple) {
    std::string_view subject = Trim(triple.e1);
    std::string_view object = Trim(triple.e2);
    const ReificationRule *rule = NormalizeRelationName(triple.r, rules_);
    if (rule == nullptr) {
      result_.report.unmapped_relations.insert(triple.r);
      return;
    }
    if (subject.empty() || object.empty()) {
      ++result_.report.rejected_triples;
      return;
    }
    ++result_.report.mapped_triples;

    NodeId subject_id = EnsureEntity(subject);
    const NodeId &event_type = rule->event_type;
    std::string key =
        options_.decls.CardinalityOf(event_type) == Cardinality::kOne
            ? Hash({event_type.str(), subject})
            : Hash({event_type.str(), subject, SlotDescriptor(*rule), object});
    NodeId event = NodeId::Parse("ev:" + std::string(event_type.local()) +
                                 "#" + key);
    if (result_.graph.HasNode(event)) {
      ++result_.report.events_coalesced;
    } else {
      ++result_.report.events_created;
      result_.graph.AddNode(
          {event, NodeKind::kOccurrent, event_type, std::nullopt});
    }
    result_.graph.AddEdge(event, rule->subject_role, subject_id);

    if (const auto *slot = std::get_if<AttrSlot>(&rule->object_slot)) {
      bool functional = options_.decls.AttrModeOf(event_type, slot->attr_type) ==
                        AttrMode::kFunctional;
      std::string attr_key =
          functional ? Hash({event.str(), slot->attr_type.str()})
                     : Hash({event.str(), slot->attr_type.str(), object});
      NodeId attr = NodeId::Parse("at:" + std::string(slot->attr_type.local()) +
                                  "#" + attr_key);
      result_.graph.AddNode(
          {attr, NodeKind::kAttribute, slot->attr_type, std::nullopt});
      result_.graph.AddEdge(attr, Relation::kHasProp, event);
      NodeId value = NodeId::Parse(
          "val:" + std::string(slot->value_type.local()) + "#" +
          Hash({attr.str(), slot->value_type.str(), object}));
      result_.graph.AddNode({value, NodeKind::kValue, slot->value_type,
                             std::string(object)});
      result_.graph.AddEdge(attr, Relation::kHasValue, value);
      if (functional) functional_attrs_.insert(attr);
    } else {
      Relation role = std::get<ParticipantSlot>(rule->object_slot).role;
      result_.graph.AddEdge(event, role, EnsureEntity(object));
    }
  }

  CanonResult Finish() {
    for (const NodeId &attr : functional_attrs_) {
      std::vector<Edge> values = result_.graph.EdgesFrom(attr, Relation::kHasValue);
      if (values.size() < 2) continue;
      SlotConflict c;
      c.event = result_.graph.EdgesFrom(attr, Relation::kHasProp).front().object;
      c.attr_type = *result_.graph.node(attr).inst_of;
      for (const Edge &e : values) {
        c.values.push_back(*result_.graph.node(e.object).literal);
      }
      std::sort(c.values.begin(), c.values.end());
      result_.report.conflicts.push_back(std::move(c));
    }
    return std::move(result_);
  }

 private:
  NodeId EnsureEntity(std::string_view label) {
    NodeId id = EntityId(label);
    if (!result_.graph.HasNode(id)) {
      auto it = options_.entity_types.find(std::string(label));
      NodeId type = it == options_.entity_types.end() ? RootType() : it->second;
      result_.graph.AddNode({id, NodeKind::kContinuant, type, std::nullopt});
      result_.labels.Insert(id, options_.label_lang, label);
      ++result_.report.entity_nodes_created;
    }
    return id;
  }

  std::span<const ReificationRule> rules_;
  const TypeHierarchy &h_;
  const CanonOptions &options_;
  CanonResult result_;
  std::set<NodeId> functional_attrs_;
};

}  // namespace

const ReificationRule *NormalizeRelationName(
    std::string_view label, std::span<const ReificationRule> rules) {
  std::string key = TokenKey(label);
  if (key.empty()) return nullptr;
  for (const ReificationRule &rule : rules) {
    if (TokenKey(rule.rel_name) == key) return &rule;
  }
  return nullptr;
}

std::string CanonReport::ToText() const {
  std::string out;
  out += "mapped_triples\t" + std::to_string(mapped_triples) + "\n";
  out += "events_created\t" + std::to_string(events_created) + "\n";
  out += "events_coalesced\t" + std::to_string(events_coalesced) + "\n";
  out += "entity_nodes_created\t" + std::to_string(entity_nodes_created) + "\n";
  out += "rejected_triples\t" + std::to_string(rejected_triples) + "\n";
  for (const std::string &r : unmapped_relations) out += "unmapped\t" + r + "\n";
  for (const SlotConflict &c : conflicts) {
    out += "conflict\t" + c.event.str() + "\t" + c.attr_type.str();
    for (const std::string &v : c.values) out += "\t" + v;
    out += "\n";
  }
  return out;
}

CanonResult Canonicalize(std::span<const FlatTriple> triples,
                         std::span<const ReificationRule> rules,
                         const TypeHierarchy &h, const CanonOptions &options) {
  for (const ReificationRule &rule : rules) {
    const std::string where = "rule " + rule.rel_name;
    RequireType(h, rule.event_type, where);
    if (const auto *slot = std::get_if<AttrSlot>(&rule.object_slot)) {
      RequireType(h, slot->attr_type, where);
      RequireType(h, slot->value_type, where);
    }
  }
  for (const auto &[label, type] : options.entity_types) {
    RequireType(h, type, "entity " + label);
  }
  Builder builder(rules, h, options);
  for (const FlatTriple &t : triples) builder.Add(t);
  return builder.Finish();
}

CanonResult Canonicalize(std::span<const FlatTriple> triples,
                         const RuleFile &rules) {
  CanonOptions options;
  options.decls = rules.decls;
  options.entity_types = rules.entity_types;
  return Canonicalize(triples, rules.rules, rules.hierarchy, options);
}

std::vector<FlatTriple> Flatten(const GroundedGraph &g,
                                const LabelTable &labels,
                                std::span<const ReificationRule> rules,
                                const std::string &label_lang) {
  auto label_of = [&](const NodeId &id) {
    std::optional<std::string_view> l = labels.Get(id, label_lang);
    return std::string(l ? *l : id.local());
  };
  std::vector<FlatTriple> out;
  for (const NodeId &event : g.NodesOfKind(NodeKind::kOccurrent)) {
    const NodeId &type = *g.node(event).inst_of;
    std::set<std::pair<NodeId, std::string>> emitted;
    for (const ReificationRule &rule : rules) {
      if (rule.event_type != type) continue;
      for (const Edge &subj : g.EdgesFrom(event, rule.subject_role)) {
        if (!emitted.emplace(subj.object, SlotDescriptor(rule)).second) {
          continue;
        }
        std::string s = label_of(subj.object);
        if (const auto *slot = std::get_if<AttrSlot>(&rule.object_slot)) {
          for (const Edge &prop : g.EdgesTo(event, Relation::kHasProp)) {
            if (*g.node(prop.subject).inst_of != slot->attr_type) continue;
            for (const Edge &hv : g.EdgesFrom(prop.subject, Relation::kHasValue)) {
              const Node &v = g.node(hv.object);
              if (v.inst_of != slot->value_type) continue;
              out.push_back({s, rule.rel_name, *v.literal});
            }
          }
        } else {
          Relation role = std::get<ParticipantSlot>(rule.object_slot).role;
          for (const Edge &obj : g.EdgesFrom(event, role)) {
            if (obj.object == subj.object) continue;
            out.push_back({s, rule.rel_name, label_of(obj.object)});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

GkgDocument ToDocument(const CanonResult &result, const RuleFile &rules) {
  GkgDocument doc;
  doc.hierarchy = rules.hierarchy;
  doc.graph = result.graph;
  doc.labels = result.labels;
  doc.decls = rules.decls;
  return doc;
}

}  // namespace gkg
