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

#include "gkat/universe.hpp"

#include <algorithm>

#include "gkat/errors.hpp"

namespace gkat {

Universe::Universe(std::vector<std::string> tests,
                   std::vector<std::string> actions, std::size_t max_tests)
    : tests_(std::move(tests)), actions_(std::move(actions)) {
  const std::size_t cap = std::min(max_tests, kMaxTestsHard);
  if (tests_.size() > cap) {
    throw AtomBlowupError("universe has " + std::to_string(tests_.size()) +
                          " tests, which exceeds the atom cap of " +
                          std::to_string(cap) + " (2^" + std::to_string(cap) +
                          " atoms)");
  }
  for (std::size_t i = 0; i < tests_.size(); ++i) {
    if (!test_index_.emplace(tests_[i], static_cast<TestId>(i)).second) {
      throw Error("duplicate test symbol '" + tests_[i] + "'");
    }
  }
  for (std::size_t i = 0; i < actions_.size(); ++i) {
    if (test_index_.count(actions_[i]) != 0) {
      throw Error("symbol '" + actions_[i] +
                  "' declared both as a test and as an action");
    }
    if (!action_index_.emplace(actions_[i], static_cast<ActionId>(i)).second) {
      throw Error("duplicate action symbol '" + actions_[i] + "'");
    }
  }
}

std::optional<TestId> Universe::test_id(std::string_view name) const {
  auto it = test_index_.find(std::string(name));
  if (it == test_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ActionId> Universe::action_id(std::string_view name) const {
  auto it = action_index_.find(std::string(name));
  if (it == action_index_.end()) return std::nullopt;
  return it->second;
}

Universe Universe::merge(const Universe& a, const Universe& b,
                         std::size_t max_tests) {
  std::vector<std::string> tests = a.tests_;
  std::vector<std::string> actions = a.actions_;
  for (const auto& t : b.tests_) {
    if (a.action_index_.count(t) != 0) {
      throw UniverseMismatchError("symbol '" + t +
                                  "' is a test in one input and an action "
                                  "in the other");
    }
    if (a.test_index_.count(t) == 0) tests.push_back(t);
  }
  for (const auto& p : b.actions_) {
    if (a.test_index_.count(p) != 0) {
      throw UniverseMismatchError("symbol '" + p +
                                  "' is a test in one input and an action "
                                  "in the other");
    }
    if (a.action_index_.count(p) == 0) actions.push_back(p);
  }
  return Universe(std::move(tests), std::move(actions), max_tests);
}

}  // namespace gkat
