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

#include <json.hpp>
#include <string>

#include "gkat/automaton.hpp"
#include "gkat/build.hpp"
#include "gkat/equivalence.hpp"
#include "gkat/errors.hpp"
#include "gkat/exp.hpp"
#include "gkat/generate.hpp"
#include "gkat/language.hpp"
#include "support/helpers.hpp"

using namespace gkat;
using gkat::testing::make_universe;
using gkat::testing::read_fixture;

TEST_CASE("a doomed action separates the modes") {
  auto u = make_universe({}, {"p"});
  GkatExpPtr doomed = g_seq(g_act(0), g_fail());
  GkatExpPtr zero = g_fail();

  Verdict lang = check(doomed, zero, Mode::kLang, u);
  CHECK(lang.equivalent);
  CHECK(!lang.witness.has_value());
  CHECK(explain(lang, *u) == "equivalent (mode: lang)");

  Verdict bi = check(doomed, zero, Mode::kBisim, u);
  REQUIRE(!bi.equivalent);
  REQUIRE(bi.witness.has_value());
  const Witness& w = *bi.witness;
  CHECK(w.trace.empty());
  CHECK(w.divergence.kind == Divergence::Kind::kStepVsStop);
  CHECK(w.divergence.side == Divergence::Side::kRight);
  CHECK(w.divergence.left_actions == std::vector<ActionId>{0});
  CHECK(explain(bi, *u) ==
        "inequivalent (mode: bisim); at {}: left steps with p, right rejects");
}

TEST_CASE("the bisim witness serializes to documented json") {
  auto u = make_universe({}, {"p"});
  Verdict bi = check(g_seq(g_act(0), g_fail()), g_fail(), Mode::kBisim, u);
  nlohmann::json j = nlohmann::json::parse(verdict_to_json(bi, *u));
  CHECK(j["equivalent"] == false);
  CHECK(j["mode"] == "bisim");
  CHECK(j["witness"]["trace"].empty());
  CHECK(j["witness"]["divergence"]["kind"] == "stepVsStop");
  CHECK(j["witness"]["divergence"]["atom"] == "{}");
  CHECK(j["witness"]["divergence"]["stopped"] == "right");
}

TEST_CASE("an eternal loop is language-equal to failure") {
  auto u = make_universe({}, {"p"});
  GkatExpPtr spin = g_while(b_one(), g_act(0));
  CHECK(check(spin, g_fail(), Mode::kLang, u).equivalent);
  Verdict bi = check(spin, g_fail(), Mode::kBisim, u);
  REQUIRE(!bi.equivalent);
  CHECK(bi.witness->divergence.kind == Divergence::Kind::kStepVsStop);
}

TEST_CASE("appending the negated guard after a loop changes nothing") {
  auto u = make_universe({"b"}, {"e"});
  GkatExpPtr loop = g_while(b_test(0), g_act(0));
  GkatExpPtr post = g_seq(loop, g_test(b_not(b_test(0))));
  CHECK(check(loop, post, Mode::kLang, u).equivalent);
  CHECK(check(loop, post, Mode::kBisim, u).equivalent);
}

TEST_CASE("a guardedness-free fixpoint claim is refuted") {
  auto u = make_universe({}, {});
  GkatExpPtr one = g_skip();
  GkatExpPtr rhs = g_seq(g_while(b_one(), g_skip()), g_skip());
  for (Mode m : {Mode::kLang, Mode::kBisim}) {
    Verdict v = check(one, rhs, m, u);
    REQUIRE(!v.equivalent);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->trace.empty());
    CHECK(v.witness->divergence.kind == Divergence::Kind::kAcceptMismatch);
    CHECK(v.witness->divergence.side == Divergence::Side::kLeft);
  }
}

TEST_CASE("unreachable code after an eternal loop is invisible") {
  auto u = make_universe({}, {"p", "q"});
  GkatExpPtr spin = g_while(b_one(), g_act(0));
  GkatExpPtr spin_then_q = g_seq(spin, g_act(1));
  CHECK(check(spin_then_q, spin, Mode::kBisim, u).equivalent);
}

TEST_CASE("bisimilarity is reflexive on automata") {
  Automaton fig2 = automaton_from_json(read_fixture("fig2.json"));
  CHECK(bisim(fig2, 0, fig2, 0).equivalent);
  CHECK(bisim(fig2, 1, fig2, 1).equivalent);
  CHECK(!bisim(fig2, 0, fig2, 1).equivalent);
}

TEST_CASE("comparing across universes is an error") {
  Automaton fig2 = automaton_from_json(read_fixture("fig2.json"));
  auto u = make_universe({}, {"p"});
  Automaton other = build_gkat(g_act(0), u);
  CHECK_THROWS_AS(bisim(fig2, 0, other, 0), UniverseMismatchError);
}

TEST_CASE("language witnesses carry a validated distinguishing string") {
  auto u = make_universe({}, {"p", "q"});
  GkatExpPtr pq = g_seq(g_act(0), g_act(1));
  GkatExpPtr p = g_act(0);
  Verdict v = check(pq, p, Mode::kLang, u);
  REQUIRE(!v.equivalent);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->distinguishing.has_value());
  REQUIRE(v.witness->contained_in.has_value());
  const GuardedString& w = *v.witness->distinguishing;
  bool in_left = membership(embed(pq), w, *u);
  bool in_right = membership(embed(p), w, *u);
  CHECK(in_left != in_right);
  CHECK((*v.witness->contained_in == Divergence::Side::kLeft) == in_left);
  std::string text = explain(v, *u);
  CHECK(text.find("distinguishing string:") != std::string::npos);

  nlohmann::json j = nlohmann::json::parse(verdict_to_json(v, *u));
  CHECK(j["witness"].contains("guardedString"));
  CHECK(j["witness"].contains("containedIn"));
}

TEST_CASE("witness traces are shortest and atom-minimal") {
  auto u = make_universe({}, {"p", "q", "r"});
  GkatExpPtr left = g_seq(g_act(0), g_seq(g_act(0), g_act(1)));
  GkatExpPtr right = g_seq(g_act(0), g_seq(g_act(0), g_act(2)));
  Verdict v = check(left, right, Mode::kBisim, u);
  REQUIRE(!v.equivalent);
  CHECK(v.witness->trace.size() == 2);
  CHECK(v.witness->divergence.kind == Divergence::Kind::kActionMismatch);
  CHECK(explain(v, *u) ==
        "inequivalent (mode: bisim); after {} p {} p, at {}: left steps "
        "with q, right steps with r");
}

TEST_CASE("inclusion holds one way for a refined choice") {
  auto u = make_universe({}, {"p", "q"});
  KatExpPtr p = k_act(0);
  KatExpPtr choice = k_plus(k_act(0), k_act(1));
  Verdict fwd = check(p, choice, Mode::kLangInclusion, u);
  CHECK(fwd.equivalent);
  CHECK(explain(fwd, *u) == "inclusion holds (mode: incl)");

  Verdict bwd = check(choice, p, Mode::kLangInclusion, u);
  REQUIRE(!bwd.equivalent);
  REQUIRE(bwd.witness.has_value());
  REQUIRE(bwd.witness->distinguishing.has_value());
  CHECK(*bwd.witness->contained_in == Divergence::Side::kLeft);
  CHECK(membership(choice, *bwd.witness->distinguishing, *u));
  CHECK(!membership(p, *bwd.witness->distinguishing, *u));
}

TEST_CASE("inclusion both ways coincides with language equality") {
  auto u = make_universe({"a"}, {"p", "q"});
  Rng rng(61);
  for (int i = 0; i < 120; ++i) {
    KatExpPtr e = random_kat(rng, u, 3);
    KatExpPtr f = random_kat(rng, u, 3);
    bool fwd = check(e, f, Mode::kLangInclusion, u).equivalent;
    bool bwd = check(f, e, Mode::kLangInclusion, u).equivalent;
    bool eq = check(e, f, Mode::kLang, u).equivalent;
    CHECK((fwd && bwd) == eq);
  }
}

TEST_CASE("stepwise equivalence implies language equivalence") {
  auto u = make_universe({"a", "b"}, {"p", "q"});
  Rng rng(67);
  int bisim_equal = 0;
  for (int i = 0; i < 200; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    GkatExpPtr f = random_gkat(rng, u, 4);
    if (check(e, f, Mode::kBisim, u).equivalent) {
      ++bisim_equal;
      CHECK(check(e, f, Mode::kLang, u).equivalent);
    }
  }
  CHECK(bisim_equal > 0);  // the corpus must exercise the implication
}

TEST_CASE("both pipelines agree on program pairs") {
  auto u = make_universe({"a"}, {"p", "q"});
  Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    GkatExpPtr f = random_gkat(rng, u, 4);
    Verdict direct = check(e, f, Mode::kLang, u);
    Verdict embedded = check(embed(e), embed(f), Mode::kLang, u);
    CHECK(direct.equivalent == embedded.equivalent);
  }
}

TEST_CASE("language verdicts agree with the bounded oracle") {
  auto u = make_universe({"a"}, {"p", "q"});
  Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    GkatExpPtr e = random_gkat(rng, u, 4);
    GkatExpPtr f = random_gkat(rng, u, 4);
    Verdict v = check(e, f, Mode::kLang, u);
    if (v.equivalent) {
      CHECK(lang_bounded(embed(e), 3, *u).strings ==
            lang_bounded(embed(f), 3, *u).strings);
    } else {
      REQUIRE(v.witness->distinguishing.has_value());
      const GuardedString& w = *v.witness->distinguishing;
      CHECK(membership(embed(e), w, *u) != membership(embed(f), w, *u));
    }
  }
}

TEST_CASE("the pair walk reports its effort") {
  auto u = make_universe({"a"}, {"p"});
  GkatExpPtr loop = g_while(b_test(0), g_act(0));
  CheckStats stats;
  Verdict v = check(loop, loop, Mode::kBisim, u, &stats);
  CHECK(v.equivalent);
  CHECK(stats.pairs_explored >= 1);
  CHECK(stats.outcome_comparisons >= stats.pairs_explored);
}

TEST_CASE("mode names round out the reporting surface") {
  CHECK(std::string(mode_name(Mode::kBisim)) == "bisim");
  CHECK(std::string(mode_name(Mode::kLang)) == "lang");
  CHECK(std::string(mode_name(Mode::kLangInclusion)) == "incl");
}
