// Copyright 2026 The gkat authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GKAT_TESTS_SUPPORT_HELPERS_HPP_
#define GKAT_TESTS_SUPPORT_HELPERS_HPP_

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gkat/universe.hpp"

namespace gkat::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

inline std::string read_fixture(const std::string& name) {
  return read_file(fixture_path(name));
}

inline UniversePtr make_universe(std::vector<std::string> tests,
                                 std::vector<std::string> actions) {
  return std::make_shared<const Universe>(std::move(tests),
                                          std::move(actions));
}

}  // namespace gkat::testing

#endif  // GKAT_TESTS_SUPPORT_HELPERS_HPP_
