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

#ifndef GKAT_EQUIVALENCE_HPP_
#define GKAT_EQUIVALENCE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gkat/automaton.hpp"
#include "gkat/exp.hpp"
#include "gkat/guarded.hpp"

namespace gkat {

// How two programs are compared:
//  - kBisim matches stepwise behavior exactly, so a doomed action (one that
//    can only lead to failure) still counts as behavior.
//  - kLang compares accepted guarded-string languages; both automata are
//    live-normalized first, which erases doomed actions.
//  - kLangInclusion decides left-language containment in the right.
enum class Mode { kBisim, kLang, kLangInclusion };

const char* mode_name(Mode m);  // "bisim", "lang", "incl"

struct Divergence {
  enum class Kind { kAcceptMismatch, kActionMismatch, kStepVsStop };
  enum class Side { kLeft, kRight };

  Kind kind;
  Atom atom = 0;
  // kAcceptMismatch: the side that accepts. kStepVsStop: the side that has
  // no move at all.
  Side side = Side::kLeft;
  // kActionMismatch and kStepVsStop: the actions each side can take.
  std::vector<ActionId> left_actions;
  std::vector<ActionId> right_actions;
};

// How two automata were told apart: after following `trace` from the start
// pair, the reached pair disagrees at `divergence.atom`. The trace is
// shortest by action count, ties broken by numeric atom order. Language
// modes add a guarded string accepted by exactly one side, obtained by
// extending the trace through the divergence to a nearest acceptance.
struct Witness {
  std::vector<std::pair<Atom, ActionId>> trace;
  Divergence divergence;
  std::optional<GuardedString> distinguishing;
  std::optional<Divergence::Side> contained_in;
};

struct Verdict {
  bool equivalent = false;  // for kLangInclusion: inclusion holds
  Mode mode = Mode::kLang;
  std::optional<Witness> witness;
};

// Counters from the pair walk, for scaling checks.
struct CheckStats {
  std::size_t pairs_explored = 0;       // pairs popped from the worklist
  std::size_t outcome_comparisons = 0;  // (pair, atom) cells compared
};

// Bisimilarity of state s1 of a1 with s2 of a2, by a union-find pair walk
// (path compression, union by rank, FIFO worklist). On failure the witness
// is recomputed by a plain breadth-first product walk so it is minimal.
// Requires identical universes; throws UniverseMismatchError otherwise.
Verdict bisim(const Automaton& a1, State s1, const Automaton& a2, State s2,
              CheckStats* stats = nullptr);

// Containment of the language of s1 in the language of s2. Callers must
// pass live-normalized automata, as check() does.
Verdict language_inclusion(const Automaton& a1, State s1, const Automaton& a2,
                           State s2, CheckStats* stats = nullptr);

// Full pipeline on programs sharing a universe: build both automata
// (derivative construction), normalize when the mode is language-based,
// compare, and complete language witnesses into distinguishing strings.
Verdict check(const GkatExpPtr& e, const GkatExpPtr& f, Mode mode,
              const UniversePtr& u, CheckStats* stats = nullptr);

// Same pipeline over the partial-derivative construction.
Verdict check(const KatExpPtr& e, const KatExpPtr& f, Mode mode,
              const UniversePtr& u, CheckStats* stats = nullptr);

// One-line human-readable account, e.g.
//   "inequivalent (mode: bisim); at {}: left steps with p, right rejects".
std::string explain(const Verdict& v, const Universe& u);

// JSON form:
//   { "equivalent": false, "mode": "bisim",
//     "witness": { "trace": [["{b}","p"]],
//                  "divergence": {"kind":"stepVsStop","atom":"{}",
//                                 "stopped":"right"} } }
// Language witnesses add "guardedString" and "containedIn".
std::string verdict_to_json(const Verdict& v, const Universe& u);

}  // namespace gkat

#endif  // GKAT_EQUIVALENCE_HPP_
