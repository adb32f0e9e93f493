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

#include "gkg/validate.h"

#include <algorithm>

#include "gkg/labels.h"

namespace gkg {

std::string_view IssueKindName(IssueKind kind) {
  switch (kind) {
    case IssueKind::kDanglingReference: return "DanglingReference";
    case IssueKind::kSignatureViolation: return "SignatureViolation";
    case IssueKind::kUntypedNode: return "UntypedNode";
    case IssueKind::kTypedTypeNode: return "TypedTypeNode";
    case IssueKind::kLiteralOnNonValue: return "LiteralOnNonValue";
    case IssueKind::kMissingLiteral: return "MissingLiteral";
    case IssueKind::kInvalidLiteral: return "InvalidLiteral";
    case IssueKind::kUnknownTypeTarget: return "UnknownTypeTarget";
    case IssueKind::kMultipleTypes: return "MultipleTypes";
    case IssueKind::kHierarchy: return "Hierarchy";
    case IssueKind::kDuplicateRecord: return "DuplicateRecord";
    case IssueKind::kDanglingLabel: return "DanglingLabel";
    case IssueKind::kUnknownDeclarationType: return "UnknownDeclarationType";
  }
  return "?";
}

std::size_t ValidationReport::Count(IssueKind kind) const {
  return std::count_if(issues.begin(), issues.end(),
                       [kind](const ValidationIssue &i) {
                         return i.kind == kind;
                       });
}

void ValidationReport::Normalize() {
  std::sort(issues.begin(), issues.end());
  auto same = [](const ValidationIssue &a, const ValidationIssue &b) {
    return a.kind == b.kind && a.subject == b.subject && a.detail == b.detail;
  };
  issues.erase(std::unique(issues.begin(), issues.end(), same), issues.end());
}

std::string ValidationReport::ToTsv() const {
  std::string out;
  for (const ValidationIssue &i : issues) {
    out += IssueKindName(i.kind);
    out += '\t';
    out += i.subject;
    out += '\t';
    out += i.detail;
    out += '\t';
    out += std::to_string(i.line);
    out += '\n';
  }
  return out;
}

ValidationFailed::ValidationFailed(ValidationReport report)
    : Error(ErrorCode::kValidationFailed,
            std::to_string(report.issues.size()) + " issue(s)" +
                (report.issues.empty()
                     ? std::string()
                     : "; first: " +
                           std::string(IssueKindName(report.issues[0].kind)) +
                           " " + report.issues[0].subject + " " +
                           report.issues[0].detail)),
      report_(std::move(report)) {}

namespace {

std::string EdgeText(const Edge &e) {
  return e.subject.str() + " " + std::string(RelationName(e.relation)) + " " +
         e.object.str();
}

}  // namespace

ValidationReport ValidateGraph(const GroundedGraph &g,
                               const TypeHierarchy &h) {
  ValidationReport report;
  auto add = [&](IssueKind kind, std::string subject, std::string detail) {
    report.issues.push_back({kind, std::move(subject), std::move(detail), 0});
  };
  auto check_type_ref = [&](const std::string &referrer, const NodeId &type) {
    if (!h.Contains(type)) {
      add(IssueKind::kUnknownTypeTarget, referrer, type.str());
    }
  };

  for (const auto &[id, n] : g.nodes()) {
    if (n.kind == NodeKind::kType) {
      if (n.inst_of) add(IssueKind::kTypedTypeNode, id.str(), n.inst_of->str());
    } else if (!n.inst_of) {
      add(IssueKind::kUntypedNode, id.str(), "");
    } else {
      check_type_ref(id.str(), *n.inst_of);
    }
    if (n.kind == NodeKind::kValue) {
      if (!n.literal) {
        add(IssueKind::kMissingLiteral, id.str(), "");
      } else if (!IsValidLabel(*n.literal)) {
        add(IssueKind::kInvalidLiteral, id.str(), *n.literal);
      }
    } else if (n.literal) {
      add(IssueKind::kLiteralOnNonValue, id.str(), *n.literal);
    }
  }

  for (const Edge &e : g.edges()) {
    const Node *s = g.FindNode(e.subject);
    const Node *o = g.FindNode(e.object);
    if (s == nullptr || o == nullptr) {
      add(IssueKind::kDanglingReference, EdgeText(e),
          (s == nullptr ? e.subject : e.object).str());
      continue;
    }
    if (!SignatureAllows(e.relation, s->kind, o->kind)) {
      add(IssueKind::kSignatureViolation, EdgeText(e),
          std::string(NodeKindName(s->kind)) + " x " +
              std::string(NodeKindName(o->kind)));
      continue;
    }
    switch (e.relation) {
      case Relation::kInst:
        check_type_ref(e.subject.str(), e.object);
        if (s->inst_of && *s->inst_of != e.object) {
          add(IssueKind::kMultipleTypes, e.subject.str(),
              s->inst_of->str() + " " + e.object.str());
        }
        break;
      case Relation::kIsA:
        check_type_ref(e.subject.str(), e.subject);
        check_type_ref(e.subject.str(), e.object);
        break;
      case Relation::kExemp:
        check_type_ref(e.subject.str(), e.object);
        break;
      default:
        break;
    }
  }
  report.Normalize();
  return report;
}

}  // namespace gkg
