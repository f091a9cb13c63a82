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
//
// End-to-end tests that drive the installed binary through a shell, so
// argument parsing, exit codes and stream routing are all covered.

#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>

#include "support/helpers.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;
};

// Runs the CLI with `args` appended, capturing stdout (and stderr when the
// caller redirects it into the pipe with "2>&1").
RunResult run_cli(const std::string& args) {
  const std::string command = std::string(GKAT_BIN) + " " + args;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
  const int status = pclose(pipe);
  REQUIRE(WIFEXITED(status));
  r.exit_code = WEXITSTATUS(status);
  return r;
}

std::string fx(const std::string& name) {
  return gkat::testing::fixture_path(name);
}

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << body;
  out.close();
  return path;
}

}  // namespace

TEST_CASE("check decides the tree-walk pair in both syntaxes") {
  RunResult gkat_pair =
      run_cli("check " + fx("fig1-single.gkat") + " " + fx("fig1-triple.gkat"));
  CHECK(gkat_pair.exit_code == 0);
  CHECK(gkat_pair.output == "equivalent (mode: lang)\n");

  RunResult kat_pair =
      run_cli("check " + fx("fig1-single.kat") + " " + fx("fig1-triple.kat"));
  CHECK(kat_pair.exit_code == 0);
  CHECK(kat_pair.output == "equivalent (mode: lang)\n");
}

TEST_CASE("mode selection separates early and late failure") {
  RunResult lang = run_cli("check " + fx("p0.gkat") + " " + fx("zero.gkat"));
  CHECK(lang.exit_code == 0);
  CHECK(lang.output == "equivalent (mode: lang)\n");

  RunResult bisim =
      run_cli("check " + fx("p0.gkat") + " " + fx("zero.gkat") +
              " --mode bisim");
  CHECK(bisim.exit_code == 1);
  CHECK(bisim.output ==
        "inequivalent (mode: bisim); at {}: left steps with p, "
        "right rejects\n");
}

TEST_CASE("json verdicts are well formed") {
  RunResult r = run_cli("check " + fx("p0.gkat") + " " + fx("zero.gkat") +
                        " --mode bisim --format json");
  CHECK(r.exit_code == 1);
  nlohmann::json j = nlohmann::json::parse(r.output);
  CHECK(j["equivalent"] == false);
  CHECK(j["mode"] == "bisim");
  CHECK(j["witness"]["trace"].empty());
  CHECK(j["witness"]["divergence"]["kind"] == "stepVsStop");
  CHECK(j["witness"]["divergence"]["stopped"] == "right");
  CHECK(j["witness"]["divergence"]["atom"] == "{}");
}

TEST_CASE("mixed syntaxes need the embedding flag") {
  RunResult refused = run_cli("check " + fx("fig1-single.gkat") + " " +
                              fx("fig1-triple.kat") + " 2>&1");
  CHECK(refused.exit_code == 2);
  CHECK(refused.output.find("--via-embedding") != std::string::npos);

  RunResult allowed = run_cli("check " + fx("fig1-single.gkat") + " " +
                              fx("fig1-triple.kat") + " --via-embedding");
  CHECK(allowed.exit_code == 0);
  CHECK(allowed.output == "equivalent (mode: lang)\n");
}

TEST_CASE("inclusion mode is exposed") {
  auto sub = write_temp("cli-incl-sub.kat", "tests:\nactions: p q\n\np\n");
  auto super =
      write_temp("cli-incl-super.kat", "tests:\nactions: p q\n\np + q\n");
  RunResult holds = run_cli("check " + sub.string() + " " + super.string() +
                            " --mode incl");
  CHECK(holds.exit_code == 0);
  CHECK(holds.output == "inclusion holds (mode: incl)\n");

  RunResult fails = run_cli("check " + super.string() + " " + sub.string() +
                            " --mode incl");
  CHECK(fails.exit_code == 1);
  CHECK(fails.output ==
        "inclusion does not hold (mode: incl); at {}: left steps with q, "
        "right steps with p; distinguishing string: {} q {} (in left only)\n");
}

TEST_CASE("dot renders fixture automata") {
  RunResult r = run_cli("dot " + fx("fig2.json"));
  CHECK(r.exit_code == 0);
  std::size_t count = 0;
  for (std::size_t at = r.output.find("{t}|p2"); at != std::string::npos;
       at = r.output.find("{t}|p2", at + 1)) {
    ++count;
  }
  CHECK(count == 2);
  CHECK(r.output.find("digraph") != std::string::npos);
  CHECK(r.output.find("doublecircle") != std::string::npos);
}

TEST_CASE("lang lists bounded guarded strings") {
  RunResult skip = run_cli("lang " + fx("skip.gkat") + " --bound 2");
  CHECK(skip.exit_code == 0);
  CHECK(skip.output == "{}\n{a}\n");

  // p;fail emits nothing at any bound.
  RunResult empty = run_cli("lang " + fx("p0.gkat") + " --bound 4");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.empty());
}

TEST_CASE("run evaluates a program under an interpretation") {
  RunResult r = run_cli("run " + fx("while1p.gkat") + " --interp " +
                        fx("interp-p.json"));
  CHECK(r.exit_code == 0);
  CHECK(r.output == "{}\n");
}

TEST_CASE("laws list prints the catalogue") {
  RunResult r = run_cli("laws list");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("gkat.loop-unroll: while b do e == "
                      "if b then { e; while b do e } else skip\n") !=
        std::string::npos);
  CHECK(r.output.find("kat.star-unroll: 1 + e;e* == e*\n") !=
        std::string::npos);

  RunResult json = run_cli("laws list --format json");
  CHECK(json.exit_code == 0);
  CHECK(nlohmann::json::parse(json.output).size() == 35);
}

TEST_CASE("laws check validates every schema") {
  RunResult r = run_cli("laws check --samples 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("FAIL") == std::string::npos);
  const std::string tail = "all 35 laws passed\n";
  REQUIRE(r.output.size() >= tail.size());
  CHECK(r.output.substr(r.output.size() - tail.size()) == tail);
}

TEST_CASE("parse errors exit with status 2 and a located message") {
  auto bad = write_temp("cli-bad.gkat", "tests: b\nactions: p\n\np; c\n");
  RunResult r =
      run_cli("check " + bad.string() + " " + bad.string() + " 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("undeclared symbol 'c' at line 4, column 4") !=
        std::string::npos);
}

TEST_CASE("missing files exit with status 2") {
  RunResult r = run_cli("dot /nonexistent/nope.gkat 2>&1");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("cannot open file") != std::string::npos);
}

TEST_CASE("usage errors exit with status 2") {
  RunResult none = run_cli("2>&1");
  CHECK(none.exit_code == 2);
  RunResult badmode = run_cli("check a.gkat b.gkat --mode nope 2>&1");
  CHECK(badmode.exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run_cli("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("check") != std::string::npos);
}

TEST_CASE("too many tests exit with status 3 unless the cap is raised") {
  std::string tests = "tests:";
  for (int i = 0; i < 13; ++i) tests += " t" + std::to_string(i);
  auto wide =
      write_temp("cli-wide13.gkat", tests + "\nactions: p\n\np\n");
  RunResult refused = run_cli("dot " + wide.string() + " 2>&1");
  CHECK(refused.exit_code == 3);
  CHECK(refused.output.find("atom cap") != std::string::npos);

  RunResult allowed =
      run_cli("dot " + wide.string() + " --max-tests 13 2>/dev/null");
  CHECK(allowed.exit_code == 0);
}

TEST_CASE("language enumeration respects the resource ceiling") {
  std::string tests = "tests:";
  for (int i = 0; i < 10; ++i) tests += " t" + std::to_string(i);
  auto wide =
      write_temp("cli-wide10.gkat", tests + "\nactions: p\n\np\n");
  // 1024 atoms squared exceeds the enumeration ceiling at one action.
  RunResult r = run_cli("lang " + wide.string() + " --bound 1 2>&1");
  CHECK(r.exit_code == 3);
  CHECK(r.output.find("exceeded") != std::string::npos);
}

TEST_CASE("output is byte deterministic across runs") {
  const std::string check_args = "check " + fx("fig1-single.gkat") + " " +
                                 fx("fig1-triple.gkat") + " --format json";
  RunResult a = run_cli(check_args);
  RunResult b = run_cli(check_args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  RunResult laws_a = run_cli("laws check --samples 10");
  RunResult laws_b = run_cli("laws check --samples 10");
  CHECK(laws_a.exit_code == 0);
  CHECK(laws_a.output == laws_b.output);

  RunResult dot_a = run_cli("dot " + fx("fig1-single.gkat"));
  RunResult dot_b = run_cli("dot " + fx("fig1-single.gkat"));
  CHECK(dot_a.output == dot_b.output);
}
