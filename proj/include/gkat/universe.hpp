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

#ifndef GKAT_UNIVERSE_HPP_
#define GKAT_UNIVERSE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace gkat {

using TestId = std::uint32_t;
using ActionId = std::uint32_t;

// The symbol scope of a program: an ordered list of primitive tests and an
// ordered list of actions. Test order fixes the bit layout of atoms and the
// numeric order on them, so every consumer of a universe must agree on it.
class Universe {
 public:
  // Default cap on the number of tests (2^12 = 4096 atoms). Raisable per
  // instance up to kMaxTestsHard, beyond which atom enumeration is refused.
  static constexpr std::size_t kMaxTestsDefault = 12;
  static constexpr std::size_t kMaxTestsHard = 20;

  // Throws AtomBlowupError if tests.size() > max_tests (after clamping
  // max_tests to the hard limit), and Error on duplicate or cross-kind
  // duplicate symbols.
  Universe(std::vector<std::string> tests, std::vector<std::string> actions,
           std::size_t max_tests = kMaxTestsDefault);

  const std::vector<std::string>& tests() const { return tests_; }
  const std::vector<std::string>& actions() const { return actions_; }
  std::size_t test_count() const { return tests_.size(); }
  std::size_t action_count() const { return actions_.size(); }

  // Number of atoms, 2^test_count(). Always representable: test_count <= 20.
  std::size_t atom_count() const { return std::size_t{1} << tests_.size(); }

  std::optional<TestId> test_id(std::string_view name) const;
  std::optional<ActionId> action_id(std::string_view name) const;
  const std::string& test_name(TestId t) const { return tests_[t]; }
  const std::string& action_name(ActionId a) const { return actions_[a]; }

  bool same_symbols(const Universe& other) const {
    return tests_ == other.tests_ && actions_ == other.actions_;
  }

  // Union of two scopes: symbols of a first, then symbols of b not already
  // present, kinds preserved. Throws Error if a symbol is a test on one side
  // and an action on the other.
  static Universe merge(const Universe& a, const Universe& b,
                        std::size_t max_tests = kMaxTestsDefault);

 private:
  std::vector<std::string> tests_;
  std::vector<std::string> actions_;
  std::unordered_map<std::string, TestId> test_index_;
  std::unordered_map<std::string, ActionId> action_index_;
};

using UniversePtr = std::shared_ptr<const Universe>;

}  // namespace gkat

#endif  // GKAT_UNIVERSE_HPP_
