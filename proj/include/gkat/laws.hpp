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
// Machine-readable catalogue of the algebraic laws the checker is expected
// to validate, with typed metavariables so each schema can be instantiated
// with concrete programs and tests and then fed through the equivalence
// pipelines.

#ifndef GKAT_LAWS_HPP_
#define GKAT_LAWS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

enum class LawFamily { kKat, kGkat };

// Equations hold outright; inclusions assert lhs <= rhs (language
// containment); the conditional variants hold only for instantiations
// whose premises hold.
enum class LawKind {
  kEquation,
  kConditionalEquation,
  kInclusion,
  kConditionalInclusion,
};

enum class HoleKind { kProgram, kTest };

struct Metavar {
  std::string name;
  HoleKind kind;
};

// Premise of a conditional law, expressed over the same template universe
// as the law's sides. kTerminationZero names a program metavar e and
// requires that e can never terminate without acting, i.e. its termination
// condition is unsatisfiable.
struct Premise {
  enum class Kind { kEquation, kInclusion, kTerminationZero };
  Kind kind = Kind::kEquation;
  GkatExpPtr glhs, grhs;
  KatExpPtr klhs, krhs;
  std::string metavar;
};

// A law template. The sides and premises are ordinary expressions over the
// template universe (tests b, c, d; actions e, f, g); every template
// symbol is a hole listed in metavars. Exactly one of the g/k template
// pairs is populated, matching the family.
struct LawSchema {
  std::string id;
  LawFamily family = LawFamily::kKat;
  LawKind kind = LawKind::kEquation;
  std::vector<Metavar> metavars;
  GkatExpPtr glhs, grhs;
  KatExpPtr klhs, krhs;
  std::vector<Premise> premises;

  // The catalogue ships one deliberately broken rule as a negative
  // fixture; the checker is expected to refute its canonical instance.
  bool unsound = false;
  // The source statement of this law dropped a variable; the catalogue
  // records the repaired form.
  bool corrected_typo = false;
  // Guarded-family equations that hold up to bisimilarity, not just up to
  // language equivalence. Early versus late failure is the one gap.
  bool bisim_sound = false;
};

// Universe the templates are written over: tests b, c, d and actions
// e, f, g.
const UniversePtr& law_template_universe();

// Full catalogue in presentation order, regular family first.
const std::vector<LawSchema>& law_catalogue();

std::vector<LawSchema> list_laws(LawFamily family);

// Looks up a law by id, or nullptr.
const LawSchema* find_law(const std::string& id);

// Concrete fillings for a schema's holes. Program holes bind through the
// map matching the law's family; test holes bind Boolean expressions. All
// bound expressions must share one target universe.
struct Bindings {
  std::map<std::string, GkatExpPtr> gkat_programs;
  std::map<std::string, KatExpPtr> kat_programs;
  std::map<std::string, BExpPtr> tests;
};

// An instantiated premise over the target universe. For kTerminationZero
// the bound program is carried so the checker can evaluate its termination
// condition.
struct InstantiatedPremise {
  Premise::Kind kind = Premise::Kind::kEquation;
  GkatExpPtr glhs, grhs;
  KatExpPtr klhs, krhs;
  GkatExpPtr termination_of;
};

struct Instance {
  LawFamily family = LawFamily::kKat;
  LawKind kind = LawKind::kEquation;
  GkatExpPtr glhs, grhs;
  KatExpPtr klhs, krhs;
  std::vector<InstantiatedPremise> premises;
};

// Fills every hole in the law with its binding. Throws BindingError when a
// hole is missing from the bindings or bound at the wrong kind.
Instance instantiate(const LawSchema& law, const Bindings& bindings);

// One line per law: "<id>: <lhs> == <rhs>" with "<=" for inclusions and a
// trailing "when <premises>" for conditional laws.
std::string render_law(const LawSchema& law);

// Catalogue as a JSON array: id, family, kind, metavars, rendered sides,
// premises, and flags.
std::string laws_to_json();

// Random validation of the whole catalogue. Each law gets `samples`
// instantiations over a three-test, three-action universe; conditional
// laws filter on their premises and mix in constructed bindings that are
// guaranteed to satisfy them, so the premise-passing count stays well
// above zero. Laws marked bisim_sound are checked in both Lang and Bisim
// modes; the unsound fixture passes when the checker refutes its canonical
// instance.
struct LawCheckOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  int depth = 4;
};

struct LawResult {
  std::string id;
  std::size_t attempted = 0;
  std::size_t checked = 0;
  std::size_t failures = 0;
  bool refuted_as_expected = false;
  std::string first_failure;

  bool passed() const {
    return failures == 0 && (checked > 0 || refuted_as_expected);
  }
};

struct LawCheckReport {
  std::vector<LawResult> results;
  bool all_passed = true;
};

LawCheckReport check_laws(const LawCheckOptions& options);
LawCheckReport check_laws(LawFamily family, const LawCheckOptions& options);

}  // namespace gkat

#endif  // GKAT_LAWS_HPP_
