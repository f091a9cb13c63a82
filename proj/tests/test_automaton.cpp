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

#include <string>
#include <vector>

#include "gkat/automaton.hpp"
#include "gkat/build.hpp"
#include "gkat/errors.hpp"
#include "gkat/exp.hpp"
#include "gkat/guarded.hpp"
#include "gkat/language.hpp"
#include "support/helpers.hpp"

using namespace gkat;
using gkat::testing::make_universe;
using gkat::testing::read_fixture;

namespace {

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("two-state fixture runs guarded strings") {
  Automaton a = automaton_from_json(read_fixture("fig2.json"));
  const Universe& u = a.universe();
  CHECK(a.state_count() == 2);
  CHECK(a.initial() == State{0});
  CHECK(a.reachable_count() == 2);
  CHECK(a.deterministic_per_atom());

  CHECK(accepts(a, 0, parse_guarded_string("{t} p2 {}", u)));
  CHECK(!accepts(a, 0, parse_guarded_string("{t}", u)));
  CHECK(!accepts(a, 0, parse_guarded_string("{}", u)));
  // The self-loop on p1 keeps the run in the start state.
  CHECK(accepts(a, 0, parse_guarded_string("{} p1 {t} p2 {}", u)));
  CHECK(accepts(a, 0, parse_guarded_string("{t} p2 {t} p2 {t} p2 {}", u)));
  // Wrong action or an unaccepted final atom loses.
  CHECK(!accepts(a, 0, parse_guarded_string("{t} p1 {}", u)));
  CHECK(!accepts(a, 0, parse_guarded_string("{t} p2 {t}", u)));
  // From the second state the bare accepted atom wins immediately.
  CHECK(accepts(a, 1, parse_guarded_string("{}", u)));
}

TEST_CASE("json round-trips automata exactly") {
  for (const char* name : {"fig2.json", "fig4.json"}) {
    Automaton a = automaton_from_json(read_fixture(name));
    Automaton back = automaton_from_json(to_json(a));
    CHECK(back == a);
  }

  auto u = make_universe({"b"}, {"p", "q"});
  Automaton built = build_gkat(
      g_while(b_test(0), g_seq(g_act(0), g_act(1))), u);
  Automaton back = automaton_from_json(to_json(built));
  CHECK(back == built);
  CHECK(back.labels() == built.labels());
}

TEST_CASE("dot export groups atoms and marks acceptance") {
  Automaton fig2 = automaton_from_json(read_fixture("fig2.json"));
  std::string dot = to_dot(fig2);
  CHECK(count_occurrences(dot, "{t}|p2") == 2);
  CHECK(count_occurrences(dot, "{}|p1") == 1);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("q1\\naccepts: {}") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);

  Automaton fig4 = automaton_from_json(read_fixture("fig4.json"));
  std::string dot4 = to_dot(fig4);
  CHECK(dot4.find("{t}|p") != std::string::npos);
  CHECK(dot4.find("{}|p") != std::string::npos);
  // Both states of that fixture accept, each at one atom.
  CHECK(count_occurrences(dot4, "doublecircle") == 2);

  // Atoms with the same action and target share one edge.
  auto u = make_universe({"b"}, {"p"});
  std::string grouped = to_dot(build_gkat(g_act(0), u));
  CHECK(grouped.find("{},{b}|p") != std::string::npos);
}

TEST_CASE("live-state pruning turns doomed steps into rejections") {
  auto u = make_universe({}, {"p"});

  Automaton doomed = build_gkat(g_seq(g_act(0), g_fail()), u);
  CHECK(!doomed.cell(doomed.initial(), 0).is_reject());
  Automaton pruned = normalize_live(doomed);
  CHECK(pruned.cell(pruned.initial(), 0).is_reject());

  Automaton spin = build_gkat(g_while(b_one(), g_act(0)), u);
  Automaton spin_pruned = normalize_live(spin);
  CHECK(spin_pruned.cell(spin_pruned.initial(), 0).is_reject());

  std::vector<bool> live = live_states(doomed);
  for (bool flag : live) CHECK(!flag);
}

TEST_CASE("live-state pruning is identity on all-live automata") {
  Automaton fig2 = automaton_from_json(read_fixture("fig2.json"));
  std::vector<bool> live = live_states(fig2);
  CHECK(live == std::vector<bool>{true, true});
  CHECK(normalize_live(fig2) == fig2);
}

TEST_CASE("live-state pruning preserves the accepted language") {
  auto u = make_universe({"b"}, {"p", "q"});
  // One live loop, one doomed branch.
  GkatExpPtr e = g_branch(b_test(0), g_seq(g_act(0), g_fail()),
                          g_while(b_test(0), g_act(1)));
  Automaton a = build_gkat(e, u);
  Automaton n = normalize_live(a);
  // Exhaust every guarded string with at most two actions.
  std::vector<GuardedString> all;
  for (Atom x = 0; x < 2; ++x) {
    all.push_back({{x}, {}});
    for (Atom y = 0; y < 2; ++y) {
      for (ActionId p = 0; p < 2; ++p) {
        all.push_back({{x, y}, {p}});
        for (Atom z = 0; z < 2; ++z) {
          for (ActionId q = 0; q < 2; ++q) {
            all.push_back({{x, y, z}, {p, q}});
          }
        }
      }
    }
  }
  CHECK(all.size() == 42);
  for (const GuardedString& w : all) {
    CHECK(accepts(a, a.initial(), w) == accepts(n, n.initial(), w));
  }
}

TEST_CASE("cells expose their moves") {
  Automaton fig2 = automaton_from_json(read_fixture("fig2.json"));
  const Cell& c = fig2.cell(0, 1);  // atom {t}
  REQUIRE(c.target(1) != nullptr);  // action p2
  CHECK(*c.target(1) == State{1});
  CHECK(c.target(0) == nullptr);
  CHECK(!c.accept);
  CHECK(fig2.cell(1, 0).accept);
}

TEST_CASE("automaton constructor validates its tables") {
  auto u = make_universe({}, {"p"});
  std::vector<std::vector<Cell>> cells(1);
  cells[0].resize(1);
  CHECK_THROWS_AS(Automaton(u, 3, cells), Error);

  std::vector<std::vector<Cell>> bad(1);
  bad[0].resize(1);
  bad[0][0].moves.push_back({0, 7});  // dangling target
  CHECK_THROWS_AS(Automaton(u, 0, bad), Error);

  std::vector<std::vector<Cell>> short_row(1);
  short_row[0].resize(0);  // needs one cell per atom
  CHECK_THROWS_AS(Automaton(u, 0, short_row), Error);
}

TEST_CASE("malformed automaton json is rejected") {
  CHECK_THROWS_AS(automaton_from_json("{"), JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json("[]"), JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json(R"({"tests": []})"), JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json(R"({"tests": [], "actions": [],
      "initial": 2, "states": [{"outcomes": []}]})"),
                  JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json(R"({"tests": [], "actions": ["p"],
      "initial": 0,
      "states": [{"outcomes": [{"atom": "{}", "step": ["p", 9]}]}]})"),
                  JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json(R"({"tests": [], "actions": ["p"],
      "initial": 0,
      "states": [{"outcomes": [{"atom": "{x}", "accept": true}]}]})"),
                  JsonFormatError);
  CHECK_THROWS_AS(automaton_from_json(R"({"tests": [], "actions": [],
      "initial": 0,
      "states": [{"outcomes": [{"atom": "{}", "step": ["q", 0]}]}]})"),
                  JsonFormatError);
}

TEST_CASE("multi-move cells survive the json round-trip") {
  auto u = make_universe({}, {"p", "q"});
  std::vector<std::vector<Cell>> cells(2);
  Cell both;
  both.accept = true;
  both.moves = {{0, 1}, {1, 0}};
  cells[0] = {both};
  Cell plain;
  plain.accept = true;
  cells[1] = {plain};
  Automaton a(u, 0, cells);
  CHECK(!a.deterministic_per_atom());
  Automaton back = automaton_from_json(to_json(a));
  CHECK(back == a);
  CHECK(to_json(back).find("steps") != std::string::npos);
}
