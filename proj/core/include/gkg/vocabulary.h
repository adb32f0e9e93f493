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

#ifndef GKG_VOCABULARY_H_
#define GKG_VOCABULARY_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace gkg {

enum class NodeKind : std::uint8_t {
  kType,
  kContinuant,
  kOccurrent,
  kAttribute,
  kValue,
};

inline constexpr std::array<NodeKind, 5> kAllNodeKinds = {
    NodeKind::kType, NodeKind::kContinuant, NodeKind::kOccurrent,
    NodeKind::kAttribute, NodeKind::kValue};

std::string_view NodeKindName(NodeKind kind);

// Single-letter code used by GKG `N` records: C, O, A, V (T for types).
char NodeKindCode(NodeKind kind);
std::optional<NodeKind> NodeKindFromCode(std::string_view code);

// The closed set of primitive relations. No other edge label exists.
enum class Relation : std::uint8_t {
  kEq,
  kIsPartOf,
  kInst,
  kHasProp,
  kExemp,
  kDep,
  kIsA,
  kPrecedes,
  kParticipantIn,
  kHasAgent,
  kHasObject,
  kHasValue,
  kRealizes,
};

inline constexpr std::array<Relation, 13> kAllRelations = {
    Relation::kEq,        Relation::kIsPartOf,      Relation::kInst,
    Relation::kHasProp,   Relation::kExemp,         Relation::kDep,
    Relation::kIsA,       Relation::kPrecedes,      Relation::kParticipantIn,
    Relation::kHasAgent,  Relation::kHasObject,     Relation::kHasValue,
    Relation::kRealizes};

// Canonical spelling, e.g. "participantIn".
std::string_view RelationName(Relation relation);
std::optional<Relation> ParseRelation(std::string_view name);

// Legal (subject kind, object kind) pairs for each relation:
//
//   eq              any x any, same kind
//   isPartOf        C x C | O x O
//   inst            non-type x T
//   hasProp         A x (C | O)        attribute inheres in its bearer
//   exemp           (C | O) x T
//   dep             any x any
//   isA             T x T
//   precedes        O x O
//   participantIn   O x C              occurrent first
//   hasAgent        O x C
//   hasObject       O x C
//   hasValue        A x V
//   realizes        O x (C | A)
bool SignatureAllows(Relation relation, NodeKind subject, NodeKind object);

// participantIn, hasAgent, hasObject.
bool IsParticipationRelation(Relation relation);

}  // namespace gkg

#endif  // GKG_VOCABULARY_H_
