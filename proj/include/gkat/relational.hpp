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

#ifndef GKAT_RELATIONAL_HPP_
#define GKAT_RELATIONAL_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

using StateIdx = std::uint32_t;
using Relation = std::set<std::pair<StateIdx, StateIdx>>;

// A finite state model: each test denotes a set of states, each action a
// relation on states. Symbol coverage is by name and independent of any
// universe; programs look their symbols up at evaluation time.
class Interpretation {
 public:
  Interpretation(std::vector<std::string> states, bool functional,
                 std::map<std::string, std::set<StateIdx>> tau,
                 std::map<std::string, Relation> sigma);

  const std::vector<std::string>& states() const { return states_; }
  bool functional() const { return functional_; }

  bool has_test(const std::string& name) const { return tau_.count(name); }
  bool has_action(const std::string& name) const {
    return sigma_.count(name);
  }
  const std::set<StateIdx>& test_states(const std::string& name) const;
  const Relation& action_relation(const std::string& name) const;

  // Parses the JSON form:
  //   { "states": ["s0","s1"], "functional": true,
  //     "tau": {"b": ["s0"]}, "sigma": {"p": [["s0","s1"]]} }
  // Throws JsonFormatError on malformed input and FunctionalityError when
  // "functional" is set but some action relation is not a partial function.
  static Interpretation from_json(std::string_view text);

  std::string to_json() const;

 private:
  std::vector<std::string> states_;
  bool functional_;
  std::map<std::string, std::set<StateIdx>> tau_;
  std::map<std::string, Relation> sigma_;
};

bool is_partial_function(const Relation& r);

// Relational semantics: tests denote sub-identity relations, actions their
// sigma images, choice is union, composition is relational composition, and
// star is the reflexive-transitive closure (naive fixpoint). Throws
// MissingSymbolError when e mentions a symbol the interpretation lacks.
Relation rel_sem(const KatExpPtr& e, const Interpretation& interp,
                 const Universe& u);

// Relational semantics of a guarded program via its Kleene translation.
// When interp is functional the result is checked to be a partial function;
// a violation throws FunctionalityError.
Relation rel_sem_gkat(const GkatExpPtr& e, const Interpretation& interp,
                      const Universe& u);

// Renders a relation as JSON: an object {"s0": "s1", ...} when the
// interpretation is functional, otherwise a sorted array of [from, to]
// pairs.
std::string relation_to_json(const Relation& r, const Interpretation& interp);

}  // namespace gkat

#endif  // GKAT_RELATIONAL_HPP_
