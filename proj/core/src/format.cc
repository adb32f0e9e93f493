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

#include "gkg/format.h"

#include <algorithm>
#include <charconv>
#include <optional>
#include <set>

#include "gkg/text.h"

namespace gkg {
namespace {

[[noreturn]] void Syntax(int line, const std::string &message) {
  throw ParseError(ErrorCode::kSyntaxError, line, message);
}

NodeId ParseId(std::string_view field, int line) {
  std::optional<NodeId> id = NodeId::TryParse(field);
  if (!id) Syntax(line, "bad node id '" + std::string(field) + "'");
  return *id;
}

void ExpectFields(const std::vector<std::string_view> &f, std::size_t n,
                  int line) {
  if (f.size() != n) {
    Syntax(line, std::string(f[0]) + " record takes " + std::to_string(n - 1) +
                     " field(s), got " + std::to_string(f.size() - 1));
  }
}

void ExpectKeyword(std::string_view got, std::string_view want, int line) {
  if (got != want) {
    Syntax(line, "expected '" + std::string(want) + "', got '" +
                     std::string(got) + "'");
  }
}

Relation ParseParticipation(std::string_view field, int line,
                            ErrorCode code) {
  std::optional<Relation> r = ParseRelation(field);
  if (!r || !IsParticipationRelation(*r)) {
    throw ParseError(code, line,
                     "'" + std::string(field) +
                         "' is not one of participantIn, hasAgent, hasObject");
  }
  return *r;
}

// Type references made by declarations, checked once the hierarchy exists.
using TypeRefs = std::vector<std::pair<NodeId, int>>;

// Parses T and schema records shared by GKG and rule files. Returns false
// when the keyword is not one of them.
bool ParseSharedRecord(const std::vector<std::string_view> &f, int line,
                       std::vector<TypeDecl> &types, SchemaDecls &decls,
                       TypeRefs &refs) {
  std::string_view kw = f[0];
  if (kw == "T") {
    ExpectFields(f, 3, line);
    TypeDecl d{ParseId(f[1], line), std::nullopt, line};
    if (f[2] != "-") d.parent = ParseId(f[2], line);
    types.push_back(std::move(d));
  } else if (kw == "ESSENTIAL") {
    ExpectFields(f, 2, line);
    NodeId t = ParseId(f[1], line);
    refs.emplace_back(t, line);
    decls.essential.insert(t);
  } else if (kw == "CARD") {
    ExpectFields(f, 3, line);
    NodeId t = ParseId(f[1], line);
    Cardinality c;
    if (f[2] == "ONE") {
      c = Cardinality::kOne;
    } else if (f[2] == "MANY") {
      c = Cardinality::kMany;
    } else {
      Syntax(line, "cardinality must be ONE or MANY");
    }
    auto [it, inserted] = decls.cardinality.emplace(t, c);
    if (!inserted && it->second != c) {
      Syntax(line, "conflicting CARD for " + t.str());
    }
    refs.emplace_back(t, line);
  } else if (kw == "ATTRDECL") {
    ExpectFields(f, 4, line);
    NodeId ev = ParseId(f[1], line);
    NodeId attr = ParseId(f[2], line);
    AttrMode m;
    if (f[3] == "FUNCTIONAL") {
      m = AttrMode::kFunctional;
    } else if (f[3] == "MULTI") {
      m = AttrMode::kMulti;
    } else {
      Syntax(line, "attribute mode must be FUNCTIONAL or MULTI");
    }
    auto [it, inserted] = decls.attr_modes.emplace(std::pair(ev, attr), m);
    if (!inserted && it->second != m) {
      Syntax(line, "conflicting ATTRDECL for " + ev.str() + " " + attr.str());
    }
    refs.emplace_back(ev, line);
    refs.emplace_back(attr, line);
  } else if (kw == "ROLE") {
    ExpectFields(f, 8, line);
    ExpectKeyword(f[2], "BASE", line);
    ExpectKeyword(f[4], "VIA", line);
    ExpectKeyword(f[6], "EVENT", line);
    RoleConceptDef def{std::string(f[1]), ParseId(f[3], line),
                       ParseParticipation(f[5], line, ErrorCode::kSyntaxError),
                       ParseId(f[7], line)};
    refs.emplace_back(def.base_type, line);
    refs.emplace_back(def.occurrent_type, line);
    decls.roles.insert(std::move(def));
  } else {
    return false;
  }
  return true;
}

bool IsGlossId(const NodeId &id) {
  return id.ns() == "rel" && ParseRelation(id.local()).has_value();
}

std::string NodeRecord(const Node &n) {
  std::string s = "N " + n.id.str() + " " + NodeKindCode(n.kind) + " " +
                  (n.inst_of ? n.inst_of->str() : std::string("-"));
  if (n.literal) s += " " + *n.literal;
  return s;
}

}  // namespace

std::vector<FlatTriple> ParseFlat(std::string_view text) {
  std::vector<FlatTriple> out;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 3) {
      throw ParseError(ErrorCode::kMalformedLine, line_no,
                       "expected 3 tab-separated fields, got " +
                           std::to_string(fields.size()));
    }
    for (std::string_view f : fields) {
      if (f.empty()) {
        throw ParseError(ErrorCode::kMalformedLine, line_no, "empty field");
      }
    }
    out.push_back({std::string(fields[0]), std::string(fields[1]),
                   std::string(fields[2])});
  }
  return out;
}

std::string SerializeFlat(std::span<const FlatTriple> triples) {
  std::string out;
  for (const FlatTriple &t : triples) {
    out += t.e1 + '\t' + t.r + '\t' + t.e2 + '\n';
  }
  return out;
}

ValidationReport ValidateDocument(const GkgDocument &doc) {
  ValidationReport report = ValidateGraph(doc.graph, doc.hierarchy);
  auto add = [&](IssueKind kind, std::string subject, std::string detail) {
    report.issues.push_back({kind, std::move(subject), std::move(detail), 0});
  };
  for (const auto &[key, label] : doc.labels.entries()) {
    const NodeId &id = key.first;
    if (!doc.graph.HasNode(id) && !doc.hierarchy.Contains(id) &&
        !IsGlossId(id)) {
      add(IssueKind::kDanglingLabel, id.str(), key.second);
    }
  }
  auto check = [&](const NodeId &t, const std::string &what) {
    if (!doc.hierarchy.Contains(t)) {
      add(IssueKind::kUnknownDeclarationType, what, t.str());
    }
  };
  for (const NodeId &t : doc.decls.essential) check(t, "ESSENTIAL");
  for (const auto &[t, c] : doc.decls.cardinality) check(t, "CARD");
  for (const auto &[k, m] : doc.decls.attr_modes) {
    check(k.first, "ATTRDECL");
    check(k.second, "ATTRDECL");
  }
  for (const RoleConceptDef &r : doc.decls.roles) {
    check(r.base_type, "ROLE " + r.role_name);
    check(r.occurrent_type, "ROLE " + r.role_name);
  }
  report.Normalize();
  return report;
}

GkgDocument ParseGkg(std::string_view text) {
  struct NodeRec {
    Node node;
    int line;
  };
  struct EdgeRec {
    Edge edge;
    int line;
  };
  struct LabelRec {
    NodeId id;
    std::string lang;
    std::string label;
    int line;
  };
  std::vector<TypeDecl> types;
  std::vector<NodeRec> nodes;
  std::vector<EdgeRec> edges;
  std::vector<LabelRec> labels;
  TypeRefs refs;
  GkgDocument doc;

  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::vector<std::string_view> f = SplitFields(line);
    std::string_view kw = f[0];
    if (ParseSharedRecord(f, line_no, types, doc.decls, refs)) continue;
    if (kw == "N") {
      f = SplitFields(line, 5);
      if (f.size() < 4) Syntax(line_no, "N record needs id, kind and type");
      std::optional<NodeKind> kind = NodeKindFromCode(f[2]);
      if (!kind) Syntax(line_no, "node kind must be C, O, A or V");
      Node n{ParseId(f[1], line_no), *kind, ParseId(f[3], line_no),
             std::nullopt};
      if (f.size() == 5) {
        if (*kind != NodeKind::kValue) {
          Syntax(line_no, "only V nodes carry a literal");
        }
        n.literal = std::string(f[4]);
      } else if (*kind == NodeKind::kValue) {
        Syntax(line_no, "V node without a literal");
      }
      nodes.push_back({std::move(n), line_no});
    } else if (kw == "E") {
      ExpectFields(f, 4, line_no);
      std::optional<Relation> rel = ParseRelation(f[2]);
      if (!rel) {
        Syntax(line_no, "'" + std::string(f[2]) + "' is not a primitive relation");
      }
      edges.push_back(
          {{ParseId(f[1], line_no), *rel, ParseId(f[3], line_no)}, line_no});
    } else if (kw == "L") {
      f = SplitFields(line, 4);
      if (f.size() != 4) Syntax(line_no, "L record needs id, lang and label");
      if (!IsValidLanguageCode(f[2])) Syntax(line_no, "bad language code");
      labels.push_back({ParseId(f[1], line_no), std::string(f[2]),
                        std::string(f[3]), line_no});
    } else if (kw == "SOURCE") {
      ExpectFields(f, 2, line_no);
      doc.graph.set_source_id(std::string(f[1]));
    } else if (kw == "REVISION") {
      ExpectFields(f, 2, line_no);
      std::uint64_t rev = 0;
      auto [ptr, ec] = std::from_chars(f[1].data(), f[1].data() + f[1].size(), rev);
      if (ec != std::errc() || ptr != f[1].data() + f[1].size()) {
        Syntax(line_no, "revision must be a non-negative integer");
      }
      doc.graph.set_revision(rev);
    } else {
      Syntax(line_no, "unknown record '" + std::string(kw) + "'");
    }
  }

  ValidationReport report;
  auto issue = [&](IssueKind kind, std::string subject, std::string detail,
                   int line) {
    report.issues.push_back(
        {kind, std::move(subject), std::move(detail), line});
  };

  try {
    doc.hierarchy = TypeHierarchy::FromDeclarations(types);
  } catch (const HierarchyError &e) {
    issue(IssueKind::kHierarchy, std::string(ErrorCodeName(e.code())),
          e.what(), e.line());
    throw ValidationFailed(std::move(report));
  }

  std::map<std::string, int> node_lines;
  for (NodeRec &rec : nodes) {
    const std::string key = rec.node.id.str();
    if (doc.hierarchy.Contains(rec.node.id) || doc.graph.HasNode(rec.node.id)) {
      issue(IssueKind::kDuplicateRecord, key, "node declared twice", rec.line);
      continue;
    }
    node_lines.emplace(key, rec.line);
    doc.graph.AddNode(std::move(rec.node));
  }
  for (const EdgeRec &rec : edges) {
    for (const NodeId *end : {&rec.edge.subject, &rec.edge.object}) {
      if (!doc.graph.HasNode(*end) && doc.hierarchy.Contains(*end)) {
        doc.graph.AddNode(Node{*end, NodeKind::kType, std::nullopt,
                               std::nullopt});
      }
    }
    std::string text = rec.edge.subject.str() + " " +
                       std::string(RelationName(rec.edge.relation)) + " " +
                       rec.edge.object.str();
    try {
      doc.graph.AddEdge(rec.edge);
    } catch (const SignatureViolation &e) {
      issue(IssueKind::kSignatureViolation, text,
            std::string(NodeKindName(e.subject_kind())) + " x " +
                std::string(NodeKindName(e.object_kind())),
            rec.line);
    } catch (const Error &e) {
      issue(IssueKind::kDanglingReference, text, e.what(), rec.line);
    }
  }
  for (const LabelRec &rec : labels) {
    if (!IsValidLabel(rec.label)) {
      issue(IssueKind::kDuplicateRecord, rec.id.str(), "invalid label",
            rec.line);
    } else if (!doc.labels.Insert(rec.id, rec.lang, rec.label) &&
               *doc.labels.Get(rec.id, rec.lang) != rec.label) {
      issue(IssueKind::kDuplicateRecord, rec.id.str(),
            "second label for language " + rec.lang, rec.line);
    }
  }
  for (const auto &[type, line] : refs) {
    if (!doc.hierarchy.Contains(type)) {
      issue(IssueKind::kUnknownDeclarationType, type.str(),
            "declaration names an unknown type", line);
    }
  }

  for (ValidationIssue i : ValidateDocument(doc).issues) {
    if (i.kind == IssueKind::kUnknownDeclarationType) continue;
    auto it = node_lines.find(i.subject);
    if (it != node_lines.end()) i.line = it->second;
    report.issues.push_back(std::move(i));
  }
  report.Normalize();
  if (!report.ok()) throw ValidationFailed(std::move(report));
  return doc;
}

std::string SerializeGkg(const GkgDocument &doc) {
  std::vector<std::string> types, nodes, edges, labels, decls;
  for (const auto &[type, parents] : doc.hierarchy.parents()) {
    if (type == RootType()) {
      types.push_back("T " + type.str() + " -");
    }
    for (const NodeId &p : parents) {
      types.push_back("T " + type.str() + " " + p.str());
    }
  }
  for (const auto &[id, n] : doc.graph.nodes()) {
    if (n.kind != NodeKind::kType) nodes.push_back(NodeRecord(n));
  }
  for (const Edge &e : doc.graph.edges()) {
    edges.push_back("E " + e.subject.str() + " " +
                    std::string(RelationName(e.relation)) + " " +
                    e.object.str());
  }
  for (const auto &[key, label] : doc.labels.entries()) {
    labels.push_back("L " + key.first.str() + " " + key.second + " " + label);
  }
  const SchemaDecls &d = doc.decls;
  for (const NodeId &t : d.essential) decls.push_back("ESSENTIAL " + t.str());
  for (const auto &[t, c] : d.cardinality) {
    decls.push_back("CARD " + t.str() +
                    (c == Cardinality::kOne ? " ONE" : " MANY"));
  }
  for (const auto &[k, m] : d.attr_modes) {
    decls.push_back("ATTRDECL " + k.first.str() + " " + k.second.str() +
                    (m == AttrMode::kFunctional ? " FUNCTIONAL" : " MULTI"));
  }
  for (const RoleConceptDef &r : d.roles) {
    decls.push_back("ROLE " + r.role_name + " BASE " + r.base_type.str() +
                    " VIA " + std::string(RelationName(r.via)) + " EVENT " +
                    r.occurrent_type.str());
  }
  if (!doc.graph.source_id().empty()) {
    decls.push_back("SOURCE " + doc.graph.source_id());
  }
  if (doc.graph.revision() != 0) {
    decls.push_back("REVISION " + std::to_string(doc.graph.revision()));
  }

  std::string out;
  for (std::vector<std::string> *section :
       {&types, &nodes, &edges, &labels, &decls}) {
    std::sort(section->begin(), section->end());
    for (const std::string &record : *section) {
      out += record;
      out += '\n';
    }
  }
  return out;
}

RuleFile ParseRules(std::string_view text) {
  RuleFile file;
  std::vector<TypeDecl> types;
  TypeRefs refs;
  std::set<std::string> rule_keys;
  int line_no = 0;
  for (std::string_view line : SplitLines(text)) {
    ++line_no;
    if (IsBlankOrComment(line)) continue;
    std::vector<std::string_view> f = SplitFields(line);
    if (ParseSharedRecord(f, line_no, types, file.decls, refs)) continue;
    std::string_view kw = f[0];
    if (kw == "RULE") {
      if (f.size() < 8) Syntax(line_no, "truncated RULE");
      ExpectKeyword(f[2], "EVENT", line_no);
      ExpectKeyword(f[4], "SUBJ", line_no);
      ExpectKeyword(f[6], "OBJ", line_no);
      ReificationRule rule;
      rule.rel_name = std::string(f[1]);
      rule.event_type = ParseId(f[3], line_no);
      rule.subject_role =
          ParseParticipation(f[5], line_no, ErrorCode::kUnknownRole);
      if (f[7] == "ATTR") {
        ExpectFields(f, 10, line_no);
        rule.object_slot =
            AttrSlot{ParseId(f[8], line_no), ParseId(f[9], line_no)};
      } else if (f[7] == "PARTICIPANT") {
        ExpectFields(f, 9, line_no);
        rule.object_slot = ParticipantSlot{
            ParseParticipation(f[8], line_no, ErrorCode::kUnknownRole)};
      } else {
        Syntax(line_no, "object slot must be ATTR or PARTICIPANT");
      }
      std::string key = TokenKey(rule.rel_name);
      if (key.empty()) Syntax(line_no, "relation name has no tokens");
      if (!rule_keys.insert(key).second) {
        throw ParseError(ErrorCode::kDuplicateRule, line_no, rule.rel_name);
      }
      file.rules.push_back(std::move(rule));
    } else if (kw == "ENTITY") {
      f = SplitFields(line, 3);
      if (f.size() != 3) Syntax(line_no, "ENTITY record needs type and label");
      NodeId type = ParseId(f[1], line_no);
      auto [it, inserted] = file.entity_types.emplace(std::string(f[2]), type);
      if (!inserted && it->second != type) {
        Syntax(line_no, "conflicting ENTITY type for '" + std::string(f[2]) + "'");
      }
    } else {
      Syntax(line_no, "unknown record '" + std::string(kw) + "'");
    }
  }
  try {
    file.hierarchy = TypeHierarchy::FromDeclarations(types);
  } catch (const HierarchyError &e) {
    Syntax(e.line(), e.what());
  }
  return file;
}

}  // namespace gkg
