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

#include <doctest.h>

#include <vector>

#include "gkat/atoms.hpp"
#include "gkat/build.hpp"
#include "gkat/equivalence.hpp"
#include "gkat/errors.hpp"
#include "gkat/exp.hpp"
#include "gkat/generate.hpp"
#include "gkat/language.hpp"
#include "support/helpers.hpp"

using namespace gkat;
using gkat::testing::make_universe;

TEST_CASE("one-step outcomes of the base constructors") {
  auto u = make_universe({"b"}, {"p"});
  Atom with_b = 1;
  Atom without_b = 0;

  for (Atom a = 0; a < u->atom_count(); ++a) {
    GkatDeriv d = derivative(g_act(0), a, *u);
    REQUIRE(d.kind == GkatDeriv::Kind::kStep);
    CHECK(d.action == ActionId{0});
    CHECK(structurally_equal(d.next, g_skip()));

    CHECK(derivative(g_skip(), a, *u).kind == GkatDeriv::Kind::kAccept);
    CHECK(derivative(g_fail(), a, *u).kind == GkatDeriv::Kind::kReject);
  }

  GkatExpPtr loop = g_while(b_test(0), g_act(0));
  GkatDeriv step = derivative(loop, with_b, *u);
  REQUIRE(step.kind == GkatDeriv::Kind::kStep);
  CHECK(step.action == ActionId{0});
  // The continuation 1;loop normalizes back to the loop itself.
  CHECK(structurally_equal(step.next, loop));
  CHECK(derivative(loop, without_b, *u).kind == GkatDeriv::Kind::kAccept);
}

TEST_CASE("one-step outcomes thread through sequencing and branching") {
  auto u = make_universe({"b"}, {"p", "q"});
  Atom with_b = 1;

  GkatExpPtr guarded = g_seq(g_test(b_test(0)), g_act(0));
  GkatDeriv d = derivative(guarded, with_b, *u);
  REQUIRE(d.kind == GkatDeriv::Kind::kStep);
  CHECK(structurally_equal(d.next, g_skip()));
  CHECK(derivative(guarded, 0, *u).kind == GkatDeriv::Kind::kReject);

  GkatExpPtr branch = g_branch(b_test(0), g_act(0), g_act(1));
  CHECK(derivative(branch, with_b, *u).action == ActionId{0});
  CHECK(derivative(branch, 0, *u).action == ActionId{1});
}

TEST_CASE("loops compile to a single state") {
  auto u = make_universe({"b"}, {"p"});
  Automaton a = build_gkat(g_while(b_test(0), g_act(0)), u);
  CHECK(a.state_count() == 1);
  CHECK(a.cell(0, 0).accept);          // atom {} exits the loop
  REQUIRE(!a.cell(0, 1).moves.empty());
  CHECK(a.cell(0, 1).moves[0] == std::pair<ActionId, State>{0, 0});
  CHECK(a.deterministic_per_atom());
}

TEST_CASE("failure compiles to a rejecting point") {
  auto u = make_universe({"b"}, {});
  Automaton a = build_gkat(g_fail(), u);
  CHECK(a.state_count() == 1);
  for (Atom x = 0; x < a.atom_count(); ++x) {
    CHECK(a.cell(0, x).is_reject());
  }
}

TEST_CASE("action chains compile to one state per suffix") {
  auto u = make_universe({}, {"p", "q"});
  Automaton a = build_gkat(g_seq(g_act(0), g_act(1)), u);
  CHECK(a.state_count() == 3);
  CHECK(a.reachable_count() == 3);
}

TEST_CASE("initial acceptance matches the termination condition") {
  auto u = make_universe({"a", "b"}, {"p", "q"});
  Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    Automaton a = build_gkat(e, u);
    BExpPtr t = termination_condition(e);
    for (Atom x = 0; x < a.atom_count(); ++x) {
      CHECK(a.cell(a.initial(), x).accept == eval(t, x));
    }
  }
}

TEST_CASE("guarded automata stay within one state per node") {
  auto u = make_universe({"a", "b", "c"}, {"p", "q", "r"});
  Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 5);
    Automaton a = build_gkat(e, u);
    CHECK(a.reachable_count() <= size(e) + 1);
    CHECK(a.deterministic_per_atom());
  }
}

TEST_CASE("guarded automata agree with the language oracle") {
  auto u = make_universe({"a", "b"}, {"p", "q"});
  Rng rng(31);
  // Every guarded string with at most three actions over this universe.
  std::vector<GuardedString> all;
  std::vector<GuardedString> frontier;
  for (Atom x = 0; x < 4; ++x) frontier.push_back({{x}, {}});
  all = frontier;
  for (int n = 0; n < 3; ++n) {
    std::vector<GuardedString> next;
    for (const GuardedString& w : frontier) {
      for (ActionId p = 0; p < 2; ++p) {
        for (Atom x = 0; x < 4; ++x) {
          GuardedString e = w;
          e.actions.push_back(p);
          e.atoms.push_back(x);
          next.push_back(e);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }

  for (int i = 0; i < 25; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    Automaton a = build_gkat(e, u);
    KatExpPtr k = embed(e);
    GuardedLanguage lang = lang_bounded(k, 3, *u);
    for (const GuardedString& w : all) {
      CHECK(accepts(a, a.initial(), w) == (lang.strings.count(w) != 0));
    }
  }
}

TEST_CASE("single tests determinize to one observing state") {
  auto u = make_universe({"t"}, {"p"});
  Automaton a = build_kat(k_test(b_test(0)), u);
  CHECK(a.state_count() == 1);
  CHECK(a.cell(0, 1).accept);
  CHECK(a.cell(0, 0).is_reject());
}

TEST_CASE("choice of actions accepts exactly the one-step strings") {
  auto u = make_universe({"t"}, {"p", "q"});
  Automaton a = build_kat(k_plus(k_act(0), k_act(1)), u);
  GuardedLanguage lang = lang_bounded(k_plus(k_act(0), k_act(1)), 1, *u);
  CHECK(lang.strings.size() == 8);
  for (Atom x = 0; x < 2; ++x) {
    CHECK(!accepts(a, a.initial(), {{x}, {}}));
    for (Atom y = 0; y < 2; ++y) {
      for (ActionId p = 0; p < 2; ++p) {
        GuardedString w{{x, y}, {p}};
        CHECK(accepts(a, a.initial(), w));
        CHECK(lang.strings.count(w) == 1);
      }
    }
  }
}

TEST_CASE("both pipelines accept the same language") {
  auto u = make_universe({"a", "b"}, {"p", "q"});
  Rng rng(37);
  for (int i = 0; i < 100; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    Automaton direct = normalize_live(build_gkat(e, u));
    Automaton viaKat = normalize_live(build_kat(embed(e), u));
    Verdict v = bisim(direct, direct.initial(), viaKat, viaKat.initial());
    CHECK(v.equivalent);
  }
}

TEST_CASE("determinization respects its state budget") {
  auto u = make_universe({}, {"p", "q"});
  BuildLimits limits;
  limits.max_dfa_states = 1;
  CHECK_THROWS_AS(build_kat(k_seq(k_act(0), k_act(1)), u, limits),
                  ResourceLimitError);
}

TEST_CASE("partial-derivative terms cover the root") {
  auto u = make_universe({"t"}, {"p", "q"});
  KatNfa nfa = kat_nfa(k_plus(k_act(0), k_test(b_test(0))), *u);
  REQUIRE(!nfa.terms.empty());
  CHECK(structurally_equal(nfa.terms[0],
                           k_plus(k_act(0), k_test(b_test(0)))));
  // The root observes exactly the atoms satisfying the test summand.
  CHECK(nfa.obs[0].to_vector() == std::vector<Atom>{1});
  CHECK(!nfa.moves[0][0].empty());   // p moves somewhere
  CHECK(nfa.moves[0][1].empty());    // q never fires
}
