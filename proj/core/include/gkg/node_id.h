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

#ifndef GKG_NODE_ID_H_
#define GKG_NODE_ID_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace gkg {

// Opaque canonical key of a node, written `namespace:local`. Printable ASCII
// only, no whitespace. Labels never live here; see LabelTable.
class NodeId {
 public:
  NodeId() = default;

  // Throws Error(kInvalidNodeId) on malformed input.
  static NodeId Parse(std::string_view text);
  static std::optional<NodeId> TryParse(std::string_view text);
  static bool IsValid(std::string_view text);

  const std::string &str() const { return value_; }
  bool empty() const { return value_.empty(); }

  // Text before the first ':'.
  std::string_view ns() const;
  // Text after the first ':'.
  std::string_view local() const;

  friend bool operator==(const NodeId &a, const NodeId &b) = default;
  friend std::strong_ordering operator<=>(const NodeId &a, const NodeId &b) {
    return a.value_ <=> b.value_;
  }

 private:
  explicit NodeId(std::string value) : value_(std::move(value)) {}

  std::string value_;
};

// Designated root of every type hierarchy.
const NodeId &RootType();

}  // namespace gkg

template <>
struct std::hash<gkg::NodeId> {
  std::size_t operator()(const gkg::NodeId &id) const noexcept {
    return std::hash<std::string>()(id.str());
  }
};

#endif  // GKG_NODE_ID_H_
