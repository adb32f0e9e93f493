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

#include "gkg/node_id.h"

#include "gkg/error.h"

namespace gkg {

bool NodeId::IsValid(std::string_view text) {
  size_t colon = text.find(':');
  if (colon == std::string_view::npos || colon == 0 ||
      colon + 1 == text.size()) {
    return false;
  }
  for (char c : text) {
    auto u = static_cast<unsigned char>(c);
    if (u <= 0x20 || u >= 0x7f) return false;
  }
  return true;
}

std::optional<NodeId> NodeId::TryParse(std::string_view text) {
  if (!IsValid(text)) return std::nullopt;
  return NodeId(std::string(text));
}

NodeId NodeId::Parse(std::string_view text) {
  if (!IsValid(text)) {
    throw Error(ErrorCode::kInvalidNodeId,
                "'" + std::string(text) + "' is not of the form ns:local");
  }
  return NodeId(std::string(text));
}

std::string_view NodeId::ns() const {
  std::string_view v = value_;
  return v.substr(0, v.find(':'));
}

std::string_view NodeId::local() const {
  std::string_view v = value_;
  size_t colon = v.find(':');
  return colon == std::string_view::npos ? v : v.substr(colon + 1);
}

const NodeId &RootType() {
  static const NodeId root = NodeId::Parse("core:Entity");
  return root;
}

}  // namespace gkg
