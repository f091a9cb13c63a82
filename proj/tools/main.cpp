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
// Command-line front end. Subcommands:
//   check FILE1 FILE2   decide program equivalence or inclusion
//   dot FILE            automaton in Graphviz DOT form
//   lang FILE           bounded guarded-string language listing
//   run FILE            relational semantics under an interpretation
//   laws list|check     law catalogue and randomized validation
//
// Exit status: 0 equivalent / inclusion holds / success, 1 inequivalent or
// failed law check, 2 usage or input error, 3 resource limit.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gkat/atoms.hpp"
#include "gkat/automaton.hpp"
#include "gkat/build.hpp"
#include "gkat/equivalence.hpp"
#include "gkat/errors.hpp"
#include "gkat/exp.hpp"
#include "gkat/language.hpp"
#include "gkat/laws.hpp"
#include "gkat/parse.hpp"
#include "gkat/relational.hpp"
#include "gkat/render.hpp"

namespace {

using namespace gkat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class InputKind { kGkat, kKat, kAutomaton };

struct Input {
  InputKind kind;
  UniversePtr universe;
  GkatExpPtr gkat;
  KatExpPtr kat;
  std::optional<Automaton> automaton;
};

Input load(const std::string& path, std::size_t max_tests) {
  Input in;
  const std::string text = read_file(path);
  if (ends_with(path, ".gkat")) {
    GkatProgram p = parse_gkat(text, max_tests);
    in.kind = InputKind::kGkat;
    in.universe = p.universe;
    in.gkat = p.program;
  } else if (ends_with(path, ".kat")) {
    KatProgram p = parse_kat(text, max_tests);
    in.kind = InputKind::kKat;
    in.universe = p.universe;
    in.kat = p.program;
  } else if (ends_with(path, ".json")) {
    in.kind = InputKind::kAutomaton;
    in.automaton = automaton_from_json(text);
    in.universe = in.automaton->universe_ptr();
  } else {
    throw Error("unrecognized input extension (want .gkat, .kat or .json): " +
                path);
  }
  return in;
}

Mode parse_mode(const std::string& mode) {
  if (mode == "lang") return Mode::kLang;
  if (mode == "bisim") return Mode::kBisim;
  if (mode == "incl") return Mode::kLangInclusion;
  throw Error("unknown mode: " + mode);
}

int cmd_check(const std::string& file1, const std::string& file2,
              const std::string& mode_flag, const std::string& format,
              bool via_embedding, std::size_t max_tests) {
  const Mode mode = parse_mode(mode_flag);
  Input a = load(file1, max_tests);
  Input b = load(file2, max_tests);
  if (a.kind == InputKind::kAutomaton || b.kind == InputKind::kAutomaton) {
    throw Error("check expects two program files (.gkat or .kat)");
  }

  const UniversePtr merged = std::make_shared<const Universe>(
      Universe::merge(*a.universe, *b.universe, max_tests));

  Verdict v;
  if (a.kind == InputKind::kGkat && b.kind == InputKind::kGkat) {
    v = check(rescope(a.gkat, *a.universe, *merged),
              rescope(b.gkat, *b.universe, *merged), mode, merged);
  } else if (a.kind == InputKind::kKat && b.kind == InputKind::kKat) {
    v = check(rescope(a.kat, *a.universe, *merged),
              rescope(b.kat, *b.universe, *merged), mode, merged);
  } else if (!via_embedding) {
    throw Error(
        "cannot compare a .gkat program with a .kat program; pass "
        "--via-embedding to translate the guarded side");
  } else {
    KatExpPtr ka = a.kind == InputKind::kGkat ? embed(a.gkat) : a.kat;
    KatExpPtr kb = b.kind == InputKind::kGkat ? embed(b.gkat) : b.kat;
    v = check(rescope(ka, *a.universe, *merged),
              rescope(kb, *b.universe, *merged), mode, merged);
  }

  if (format == "json") {
    std::cout << verdict_to_json(v, *merged) << "\n";
  } else {
    std::cout << explain(v, *merged) << "\n";
  }
  return v.equivalent ? 0 : 1;
}

int cmd_dot(const std::string& file, std::size_t max_tests) {
  Input in = load(file, max_tests);
  switch (in.kind) {
    case InputKind::kGkat:
      std::cout << to_dot(build_gkat(in.gkat, in.universe));
      break;
    case InputKind::kKat:
      std::cout << to_dot(build_kat(in.kat, in.universe));
      break;
    case InputKind::kAutomaton:
      std::cout << to_dot(*in.automaton);
      break;
  }
  return 0;
}

int cmd_lang(const std::string& file, std::size_t bound,
             std::size_t max_tests) {
  Input in = load(file, max_tests);
  KatExpPtr e;
  if (in.kind == InputKind::kGkat) {
    e = embed(in.gkat);
  } else if (in.kind == InputKind::kKat) {
    e = in.kat;
  } else {
    throw Error("lang expects a program file (.gkat or .kat)");
  }
  const GuardedLanguage lang = lang_bounded(e, bound, *in.universe);
  for (const GuardedString& w : lang.strings) {
    std::cout << render(w, *in.universe) << "\n";
  }
  return 0;
}

int cmd_run(const std::string& file, const std::string& interp_path,
            std::size_t max_tests) {
  Input in = load(file, max_tests);
  const Interpretation interp =
      Interpretation::from_json(read_file(interp_path));
  Relation r;
  if (in.kind == InputKind::kGkat) {
    r = rel_sem_gkat(in.gkat, interp, *in.universe);
  } else if (in.kind == InputKind::kKat) {
    r = rel_sem(in.kat, interp, *in.universe);
  } else {
    throw Error("run expects a program file (.gkat or .kat)");
  }
  std::cout << relation_to_json(r, interp) << "\n";
  return 0;
}

int cmd_laws_list(const std::string& format) {
  if (format == "json") {
    std::cout << laws_to_json() << "\n";
    return 0;
  }
  for (const LawSchema& law : law_catalogue()) {
    std::cout << render_law(law) << "\n";
  }
  return 0;
}

int cmd_laws_check(std::uint64_t seed, std::size_t samples) {
  LawCheckOptions options;
  options.seed = seed;
  options.samples = samples;
  const LawCheckReport report = check_laws(options);
  std::size_t failed = 0;
  for (const LawResult& r : report.results) {
    if (r.passed()) {
      if (r.refuted_as_expected) {
        std::cout << "PASS " << r.id << ": refuted the canonical instance\n";
      } else {
        std::cout << "PASS " << r.id << ": " << r.checked << "/"
                  << r.attempted << " instances verified\n";
      }
    } else {
      ++failed;
      std::cout << "FAIL " << r.id << ": " << r.failures << " failure(s)";
      if (!r.first_failure.empty()) std::cout << "; " << r.first_failure;
      std::cout << "\n";
    }
  }
  if (failed == 0) {
    std::cout << "all " << report.results.size() << " laws passed\n";
    return 0;
  }
  std::cout << failed << " of " << report.results.size() << " laws failed\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equivalence checker for guarded and regular programs"};
  app.require_subcommand(1);

  std::string file1, file2, interp_path;
  std::string mode = "lang";
  std::string format = "text";
  std::size_t max_tests = Universe::kMaxTestsDefault;
  std::size_t bound = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 200;

  auto add_max_tests = [&](CLI::App* cmd) {
    cmd->add_option("--max-tests", max_tests,
                    "Cap on declared tests (hard limit 20)")
        ->check(CLI::Range(std::size_t{0}, Universe::kMaxTestsHard));
  };

  CLI::App* c_check =
      app.add_subcommand("check", "Decide equivalence of two programs");
  c_check->add_option("file1", file1, "Left program (.gkat or .kat)")
      ->required();
  c_check->add_option("file2", file2, "Right program (.gkat or .kat)")
      ->required();
  c_check->add_option("--mode", mode,
                      "Comparison mode: lang, bisim or incl (default lang)")
      ->check(CLI::IsMember({"lang", "bisim", "incl"}));
  c_check->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  bool via_embedding = false;
  c_check->add_flag("--via-embedding", via_embedding,
                    "Allow mixed kinds by translating the guarded side");
  add_max_tests(c_check);

  CLI::App* c_dot = app.add_subcommand(
      "dot", "Print the automaton of a program or fixture as Graphviz DOT");
  c_dot->add_option("file", file1, "Input (.gkat, .kat or automaton .json)")
      ->required();
  add_max_tests(c_dot);

  CLI::App* c_lang = app.add_subcommand(
      "lang", "List the guarded strings of a program up to a length bound");
  c_lang->add_option("file", file1, "Program (.gkat or .kat)")->required();
  c_lang->add_option("--bound", bound,
                     "Maximum number of actions per string (default 3)");
  add_max_tests(c_lang);

  CLI::App* c_run = app.add_subcommand(
      "run", "Evaluate a program against a relational interpretation");
  c_run->add_option("file", file1, "Program (.gkat or .kat)")->required();
  c_run->add_option("--interp", interp_path, "Interpretation JSON file")
      ->required();
  add_max_tests(c_run);

  CLI::App* c_laws = app.add_subcommand("laws", "Law catalogue utilities");
  c_laws->require_subcommand(1);
  CLI::App* c_laws_list =
      c_laws->add_subcommand("list", "Print the law catalogue");
  c_laws_list->add_option("--format", format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  CLI::App* c_laws_check = c_laws->add_subcommand(
      "check", "Randomly instantiate every law and verify it");
  c_laws_check->add_option("--seed", seed, "Random seed (default 1)");
  c_laws_check->add_option("--samples", samples,
                           "Instantiations per law (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(c_check)) {
      return cmd_check(file1, file2, mode, format, via_embedding, max_tests);
    }
    if (app.got_subcommand(c_dot)) return cmd_dot(file1, max_tests);
    if (app.got_subcommand(c_lang)) return cmd_lang(file1, bound, max_tests);
    if (app.got_subcommand(c_run)) {
      return cmd_run(file1, interp_path, max_tests);
    }
    if (app.got_subcommand(c_laws)) {
      if (c_laws->got_subcommand(c_laws_list)) return cmd_laws_list(format);
      return cmd_laws_check(seed, samples);
    }
  } catch (const AtomBlowupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
