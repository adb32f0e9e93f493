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

#ifndef GKG_TESTS_SUPPORT_TEST_UTIL_H_
#define GKG_TESTS_SUPPORT_TEST_UTIL_H_

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gkg/node_id.h"

namespace gkg::testing {

inline std::string ReadTestData(const std::string &name) {
  std::string path = std::string(GKG_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("missing test data " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline NodeId Id(const char *text) { return NodeId::Parse(text); }

}  // namespace gkg::testing

#endif  // GKG_TESTS_SUPPORT_TEST_UTIL_H_
