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
#include <set>
#include <string>

#include "gkat/errors.hpp"
#include "gkat/exp.hpp"
#include "gkat/laws.hpp"
#include "support/helpers.hpp"

using namespace gkat;
using gkat::testing::make_universe;

TEST_CASE("the catalogue is complete and stable") {
  const auto& all = law_catalogue();
  CHECK(all.size() == 35);
  CHECK(list_laws(LawFamily::kKat).size() == 20);
  CHECK(list_laws(LawFamily::kGkat).size() == 15);

  std::set<std::string> ids;
  for (const LawSchema& law : all) ids.insert(law.id);
  CHECK(ids.size() == all.size());

  CHECK(find_law("kat.star-unroll") != nullptr);
  CHECK(find_law("gkat.guard-absorb") != nullptr);
  CHECK(find_law("gkat.loop-unroll") != nullptr);
  CHECK(find_law("does.not-exist") == nullptr);
}

TEST_CASE("pinned laws render as documented") {
  CHECK(render_law(*find_law("kat.star-unroll")) ==
        "kat.star-unroll: 1 + e;e* == e*");
  CHECK(render_law(*find_law("gkat.guard-absorb")) ==
        "gkat.guard-absorb: if b then e else f == "
        "if b then { assert b; e } else f");
  CHECK(render_law(*find_law("gkat.loop-unroll")) ==
        "gkat.loop-unroll: while b do e == "
        "if b then { e; while b do e } else skip");
  CHECK(render_law(*find_law("gkat.unique-fixpoint")) ==
        "gkat.unique-fixpoint: g == while b do e; f when "
        "g == if b then { e; g } else f and E(e) == 0");
  CHECK(render_law(*find_law("kat.star-induction-left")) ==
        "kat.star-induction-left: f*;e <= g when e + f;g <= g");
  CHECK(render_law(*find_law("gkat.unsound-fixpoint")) ==
        "gkat.unsound-fixpoint: g == while b do e; f when "
        "g == if b then { e; g } else f  [unsound fixture]");
}

TEST_CASE("flags single out the special entries") {
  int unsound = 0, corrected = 0, bisim_sound = 0;
  for (const LawSchema& law : law_catalogue()) {
    if (law.unsound) ++unsound;
    if (law.corrected_typo) ++corrected;
    if (law.bisim_sound) {
      ++bisim_sound;
      CHECK(law.family == LawFamily::kGkat);
      CHECK(law.kind == LawKind::kEquation);
    }
  }
  CHECK(unsound == 1);
  CHECK(find_law("gkat.unsound-fixpoint")->unsound);
  CHECK(corrected == 1);
  CHECK(find_law("gkat.branch-assoc")->corrected_typo);

  // Every guarded equation except late failure holds stepwise.
  CHECK(bisim_sound == 11);
  CHECK(!find_law("gkat.annih-right")->bisim_sound);
  CHECK(find_law("gkat.annih-left")->bisim_sound);
  CHECK(find_law("gkat.branch-idem")->bisim_sound);
  CHECK(!find_law("gkat.unique-fixpoint")->bisim_sound);
}

TEST_CASE("law kinds partition as expected") {
  CHECK(find_law("kat.plus-idem")->kind == LawKind::kEquation);
  CHECK(find_law("kat.star-induction-left")->kind ==
        LawKind::kConditionalInclusion);
  CHECK(find_law("kat.star-induction-right")->kind ==
        LawKind::kConditionalInclusion);
  CHECK(find_law("gkat.unique-fixpoint")->kind ==
        LawKind::kConditionalEquation);
  CHECK(find_law("gkat.least-fixpoint")->kind ==
        LawKind::kConditionalInclusion);
}

TEST_CASE("the template universe names the documented holes") {
  const UniversePtr& u = law_template_universe();
  CHECK(u->tests() == std::vector<std::string>{"b", "c", "d"});
  CHECK(u->actions() == std::vector<std::string>{"e", "f", "g"});
}

TEST_CASE("instantiation fills branch idempotence") {
  auto u = make_universe({"t"}, {"p"});
  Bindings b;
  b.gkat_programs["e"] = g_act(0);
  b.tests["b"] = b_test(0);
  Instance inst = instantiate(*find_law("gkat.branch-idem"), b);
  CHECK(structurally_equal(inst.glhs,
                           g_branch(b_test(0), g_act(0), g_act(0))));
  CHECK(structurally_equal(inst.grhs, g_act(0)));
  CHECK(inst.premises.empty());
  CHECK(inst.kind == LawKind::kEquation);
}

TEST_CASE("instantiation fills late failure") {
  auto u = make_universe({}, {"p"});
  Bindings b;
  b.kat_programs["e"] = k_act(0);
  Instance inst = instantiate(*find_law("kat.annihilation"), b);
  CHECK(structurally_equal(inst.klhs, k_seq(k_act(0), k_zero())));
  CHECK(structurally_equal(inst.krhs, k_zero()));
}

TEST_CASE("instantiation fills the loop guard rotation") {
  auto u = make_universe({"t", "u"}, {"p"});
  Bindings b;
  b.gkat_programs["e"] = g_act(0);
  b.tests["b"] = b_test(0);
  b.tests["c"] = b_test(1);
  Instance inst = instantiate(*find_law("gkat.loop-guard"), b);
  CHECK(structurally_equal(
      inst.glhs, g_while(b_test(0), g_seq(g_test(b_test(1)), g_act(0)))));
  CHECK(structurally_equal(
      inst.grhs,
      g_while(b_test(0), g_branch(b_test(1), g_act(0), g_skip()))));
}

TEST_CASE("conditional laws instantiate their premises") {
  auto u = make_universe({"t"}, {"p", "q"});
  Bindings b;
  b.gkat_programs["e"] = g_act(0);
  b.gkat_programs["f"] = g_act(1);
  b.gkat_programs["g"] = g_act(1);
  b.tests["b"] = b_test(0);
  Instance inst = instantiate(*find_law("gkat.unique-fixpoint"), b);
  REQUIRE(inst.premises.size() == 2);
  CHECK(inst.premises[0].kind == Premise::Kind::kEquation);
  CHECK(structurally_equal(inst.premises[0].glhs, g_act(1)));
  CHECK(structurally_equal(
      inst.premises[0].grhs,
      g_branch(b_test(0), g_seq(g_act(0), g_act(1)), g_act(1))));
  CHECK(inst.premises[1].kind == Premise::Kind::kTerminationZero);
  CHECK(structurally_equal(inst.premises[1].termination_of, g_act(0)));
}

TEST_CASE("bad bindings are rejected") {
  Bindings missing;
  missing.gkat_programs["e"] = g_act(0);
  CHECK_THROWS_AS(instantiate(*find_law("gkat.branch-idem"), missing),
                  BindingError);

  Bindings miskinded;
  miskinded.tests["e"] = b_test(0);
  miskinded.tests["b"] = b_test(0);
  CHECK_THROWS_WITH_AS(instantiate(*find_law("gkat.branch-idem"), miskinded),
                       doctest::Contains("e"), BindingError);

  Bindings wrong_family;
  wrong_family.kat_programs["e"] = k_act(0);
  wrong_family.tests["b"] = b_test(0);
  CHECK_THROWS_AS(instantiate(*find_law("gkat.branch-idem"), wrong_family),
                  BindingError);
}

TEST_CASE("the catalogue exports as json") {
  nlohmann::json j = nlohmann::json::parse(laws_to_json());
  REQUIRE(j.is_array());
  CHECK(j.size() == 35);
  CHECK(j[0]["id"] == "kat.excluded-middle");
  CHECK(j[0]["family"] == "kat");
  CHECK(j[0]["kind"] == "equation");
  CHECK(j[0]["lhs"] == "[b + !b]");
  CHECK(j[0]["rhs"] == "1");

  bool saw_unsound = false, saw_typo = false;
  for (const auto& entry : j) {
    if (entry["id"] == "gkat.unsound-fixpoint") {
      saw_unsound = entry["unsound"].get<bool>();
      CHECK(!entry["premises"].empty());
    }
    if (entry["id"] == "gkat.branch-assoc") {
      saw_typo = entry["correctedTypo"].get<bool>();
    }
    if (entry["id"] == "gkat.annih-right") {
      CHECK(entry["bisimSound"] == false);
    }
    if (entry["id"] == "gkat.annih-left") {
      CHECK(entry["bisimSound"] == true);
    }
  }
  CHECK(saw_unsound);
  CHECK(saw_typo);
}

TEST_CASE("a quick randomized pass validates every law") {
  LawCheckOptions options;
  options.seed = 5;
  options.samples = 30;
  LawCheckReport report = check_laws(options);
  CHECK(report.all_passed);
  REQUIRE(report.results.size() == 35);
  for (const LawResult& r : report.results) {
    CAPTURE(r.id);
    CHECK(r.passed());
    CHECK(r.failures == 0);
    CHECK(r.first_failure.empty());
  }

  for (const char* id :
       {"kat.star-induction-left", "kat.star-induction-right",
        "gkat.unique-fixpoint", "gkat.least-fixpoint"}) {
    const LawResult* found = nullptr;
    for (const LawResult& r : report.results) {
      if (r.id == id) found = &r;
    }
    REQUIRE(found != nullptr);
    // Premise filtering plus constructed bindings keep these non-vacuous.
    CHECK(found->checked >= 10);
    CHECK(found->checked <= found->attempted);
  }

  const LawResult& last = report.results.back();
  CHECK(last.id == "gkat.unsound-fixpoint");
  CHECK(last.refuted_as_expected);
}

TEST_CASE("family-restricted law runs see only their laws") {
  LawCheckOptions options;
  options.seed = 9;
  options.samples = 10;
  LawCheckReport kat = check_laws(LawFamily::kKat, options);
  CHECK(kat.results.size() == 20);
  CHECK(kat.all_passed);
  LawCheckReport gkat_only = check_laws(LawFamily::kGkat, options);
  CHECK(gkat_only.results.size() == 15);
  CHECK(gkat_only.all_passed);
}
