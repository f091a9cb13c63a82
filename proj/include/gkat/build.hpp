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

#ifndef GKAT_BUILD_HPP_
#define GKAT_BUILD_HPP_

#include <cstdint>
#include <vector>

#include "gkat/atoms.hpp"
#include "gkat/automaton.hpp"
#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// One-step behavior of a guarded program under a fixed atom: it terminates,
// fails, or performs exactly one action and continues as `next`. Successor
// expressions are normalized (1;e -> e, 0;e -> 0, right-associated
// sequencing) so that syntactically distinct unrollings of the same loop
// collapse to one state.
struct GkatDeriv {
  enum class Kind : std::uint8_t { kAccept, kReject, kStep };
  Kind kind;
  ActionId action = 0;   // kStep only
  GkatExpPtr next;       // kStep only

  static GkatDeriv mk_accept() { return {Kind::kAccept, 0, nullptr}; }
  static GkatDeriv mk_reject() { return {Kind::kReject, 0, nullptr}; }
  static GkatDeriv mk_step(ActionId p, GkatExpPtr next) {
    return {Kind::kStep, p, std::move(next)};
  }
};

// The unique outcome of e at atom a. Acceptance agrees with
// termination_condition: the result is kAccept iff a satisfies it.
GkatDeriv derivative(const GkatExpPtr& e, Atom a, const Universe& u);

// Closure of e under derivatives. States are the distinct normalized
// successor expressions plus e itself, so the construction caps the state
// count at size(e) + 1; exceeding it means a normalization bug and throws.
// The resulting automaton satisfies deterministic_per_atom.
Automaton build_gkat(const GkatExpPtr& e, UniversePtr u);

struct BuildLimits {
  std::size_t max_dfa_states = 100'000;
};

// Nondeterministic acceptor whose states are partial-derivative terms.
// Moves are stored symbolically: for term t and action p, a list of
// (guard, successor term) pairs; the move is enabled at the atoms in the
// guard.
struct KatNfa {
  std::vector<KatExpPtr> terms;   // term id -> expression; term 0 is the root
  std::vector<AtomSet> obs;       // term id -> accepted atoms
  // moves[t][p]: guarded successors of term t on action p.
  std::vector<std::vector<std::vector<std::pair<AtomSet, std::uint32_t>>>>
      moves;
};

KatNfa kat_nfa(const KatExpPtr& e, const Universe& u);

// Subset construction over kat_nfa(e). A subset accepts an atom when some
// member term does, and steps on (atom, action) to the union of member
// successors when that union is nonempty; the implicit empty subset is the
// reject sink. Throws ResourceLimitError past limits.max_dfa_states.
Automaton build_kat(const KatExpPtr& e, UniversePtr u,
                    const BuildLimits& limits = {});

}  // namespace gkat

#endif  // GKAT_BUILD_HPP_
