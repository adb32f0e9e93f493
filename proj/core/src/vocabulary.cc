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

#include "gkg/vocabulary.h"

namespace gkg {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kType: return "TypeNode";
    case NodeKind::kContinuant: return "Continuant";
    case NodeKind::kOccurrent: return "Occurrent";
    case NodeKind::kAttribute: return "AttributeInstance";
    case NodeKind::kValue: return "ValueLiteral";
  }
  return "?";
}

char NodeKindCode(NodeKind kind) {
  switch (kind) {
    case NodeKind::kType: return 'T';
    case NodeKind::kContinuant: return 'C';
    case NodeKind::kOccurrent: return 'O';
    case NodeKind::kAttribute: return 'A';
    case NodeKind::kValue: return 'V';
  }
  return '?';
}

std::optional<NodeKind> NodeKindFromCode(std::string_view code) {
  if (code == "C") return NodeKind::kContinuant;
  if (code == "O") return NodeKind::kOccurrent;
  if (code == "A") return NodeKind::kAttribute;
  if (code == "V") return NodeKind::kValue;
  return std::nullopt;
}

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kEq: return "eq";
    case Relation::kIsPartOf: return "isPartOf";
    case Relation::kInst: return "inst";
    case Relation::kHasProp: return "hasProp";
    case Relation::kExemp: return "exemp";
    case Relation::kDep: return "dep";
    case Relation::kIsA: return "isA";
    case Relation::kPrecedes: return "precedes";
    case Relation::kParticipantIn: return "participantIn";
    case Relation::kHasAgent: return "hasAgent";
    case Relation::kHasObject: return "hasObject";
    case Relation::kHasValue: return "hasValue";
    case Relation::kRealizes: return "realizes";
  }
  return "?";
}

std::optional<Relation> ParseRelation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (RelationName(r) == name) return r;
  }
  return std::nullopt;
}

bool SignatureAllows(Relation relation, NodeKind subject, NodeKind object) {
  using K = NodeKind;
  auto is_particular = [](K k) {
    return k == K::kContinuant || k == K::kOccurrent;
  };
  switch (relation) {
    case Relation::kEq:
      return subject == object;
    case Relation::kIsPartOf:
      return subject == object && is_particular(subject);
    case Relation::kInst:
      return subject != K::kType && object == K::kType;
    case Relation::kHasProp:
      return subject == K::kAttribute && is_particular(object);
    case Relation::kExemp:
      return is_particular(subject) && object == K::kType;
    case Relation::kDep:
      return true;
    case Relation::kIsA:
      return subject == K::kType && object == K::kType;
    case Relation::kPrecedes:
      return subject == K::kOccurrent && object == K::kOccurrent;
    case Relation::kParticipantIn:
    case Relation::kHasAgent:
    case Relation::kHasObject:
      return subject == K::kOccurrent && object == K::kContinuant;
    case Relation::kHasValue:
      return subject == K::kAttribute && object == K::kValue;
    case Relation::kRealizes:
      return subject == K::kOccurrent &&
             (object == K::kContinuant || object == K::kAttribute);
  }
  return false;
}

bool IsParticipationRelation(Relation relation) {
  return relation == Relation::kParticipantIn ||
         relation == Relation::kHasAgent || relation == Relation::kHasObject;
}

}  // namespace gkg
