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

#ifndef GKAT_AUTOMATON_HPP_
#define GKAT_AUTOMATON_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gkat/atoms.hpp"
#include "gkat/guarded.hpp"
#include "gkat/universe.hpp"

namespace gkat {

using State = std::uint32_t;

// What a state does on one atom: it may accept, and it may step, with at
// most one target per action. A cell with neither is a rejection. Automata
// built from guarded programs additionally satisfy the branching discipline
// checked by Automaton::deterministic_per_atom: at most one move and never
// accept-and-step.
struct Cell {
  bool accept = false;
  std::vector<std::pair<ActionId, State>> moves;  // sorted by action id

  bool is_reject() const { return !accept && moves.empty(); }
  // Target for an action, or nullptr when the cell has no move on it.
  const State* target(ActionId p) const;

  bool operator==(const Cell& o) const = default;
};

// A deterministic guarded-string acceptor. Delta is stored densely: one Cell
// per state and atom, which the universe's atom cap keeps affordable. State
// ids are dense, the initial state is fixed, and the set of states reachable
// from it is computed once at construction.
class Automaton {
 public:
  // labels may be empty or hold one debugging string per state.
  Automaton(UniversePtr universe, State initial,
            std::vector<std::vector<Cell>> cells,
            std::vector<std::string> labels = {});

  const Universe& universe() const { return *universe_; }
  UniversePtr universe_ptr() const { return universe_; }
  State initial() const { return initial_; }
  std::size_t state_count() const { return cells_.size(); }
  std::size_t atom_count() const { return universe_->atom_count(); }
  const Cell& cell(State s, Atom a) const { return cells_[s][a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool reachable(State s) const { return reachable_[s]; }
  std::size_t reachable_count() const { return reachable_count_; }

  // Whether every cell steps to at most one place and never both accepts
  // and steps. Holds for automata built from guarded programs.
  bool deterministic_per_atom() const;

  bool operator==(const Automaton& o) const {
    return universe_->same_symbols(*o.universe_) && initial_ == o.initial_ &&
           cells_ == o.cells_;
  }

 private:
  UniversePtr universe_;
  State initial_;
  std::vector<std::vector<Cell>> cells_;
  std::vector<std::string> labels_;
  std::vector<bool> reachable_;
  std::size_t reachable_count_ = 0;
};

// Runs w from `from`: at each atom the current state must have a move on
// the string's next action, and the final atom must be accepted.
bool accepts(const Automaton& a, State from, const GuardedString& w);

// States that can reach an accepting cell (possibly in zero steps).
std::vector<bool> live_states(const Automaton& a);

// Same states and acceptance, with every move into a dead state removed.
// Language-preserving; erases early/late failure distinctions so that the
// bisimulation walk decides language equality.
Automaton normalize_live(const Automaton& a);

// Graphviz rendering. Atoms with the same action and target are grouped
// onto one edge, labelled "{b},{c}|p". Accepting states are double circles
// annotated with their accepted atoms.
std::string to_dot(const Automaton& a);

// JSON rendering:
//   { "tests": [...], "actions": [...], "initial": 0,
//     "states": [ { "outcomes": [ {"atom":"{b}","step":["p",1]},
//                                 {"atom":"{}","accept":true} ] } ] }
// Atoms with reject cells are omitted. Cells that both accept and step, or
// step on several actions, use "steps": [["p",1],...] plus optional
// "accept": true. An optional per-state "label" carries the debug label.
std::string to_json(const Automaton& a);

// Inverse of to_json. Accepts both the "step" and "steps" forms. Throws
// JsonFormatError on malformed input.
Automaton automaton_from_json(std::string_view text);

}  // namespace gkat

#endif  // GKAT_AUTOMATON_HPP_
