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

#include "gkat/laws.hpp"

#include <json.hpp>

#include "gkat/atoms.hpp"
#include "gkat/equivalence.hpp"
#include "gkat/errors.hpp"
#include "gkat/generate.hpp"
#include "gkat/render.hpp"

namespace gkat {

using nlohmann::json;

const UniversePtr& law_template_universe() {
  static const UniversePtr u = std::make_shared<const Universe>(
      std::vector<std::string>{"b", "c", "d"},
      std::vector<std::string>{"e", "f", "g"});
  return u;
}

namespace {

// Hole ids in the template universe.
constexpr TestId kB = 0, kC = 1, kD = 2;
constexpr ActionId kE = 0, kF = 1, kG = 2;

const Metavar MB{"b", HoleKind::kTest};
const Metavar MC{"c", HoleKind::kTest};
const Metavar MD{"d", HoleKind::kTest};
const Metavar ME{"e", HoleKind::kProgram};
const Metavar MF{"f", HoleKind::kProgram};
const Metavar MG{"g", HoleKind::kProgram};

Premise eq_premise(GkatExpPtr l, GkatExpPtr r) {
  Premise p;
  p.kind = Premise::Kind::kEquation;
  p.glhs = std::move(l);
  p.grhs = std::move(r);
  return p;
}

Premise incl_premise(GkatExpPtr l, GkatExpPtr r) {
  Premise p;
  p.kind = Premise::Kind::kInclusion;
  p.glhs = std::move(l);
  p.grhs = std::move(r);
  return p;
}

Premise incl_premise(KatExpPtr l, KatExpPtr r) {
  Premise p;
  p.kind = Premise::Kind::kInclusion;
  p.klhs = std::move(l);
  p.krhs = std::move(r);
  return p;
}

Premise termination_premise(std::string metavar) {
  Premise p;
  p.kind = Premise::Kind::kTerminationZero;
  p.metavar = std::move(metavar);
  return p;
}

std::vector<LawSchema> build_catalogue() {
  std::vector<LawSchema> out;

  auto kat = [&](const char* id, std::vector<Metavar> mv, KatExpPtr l,
                 KatExpPtr r) {
    LawSchema s;
    s.id = id;
    s.family = LawFamily::kKat;
    s.kind = LawKind::kEquation;
    s.metavars = std::move(mv);
    s.klhs = std::move(l);
    s.krhs = std::move(r);
    out.push_back(std::move(s));
  };
  auto kat_cond_incl = [&](const char* id, std::vector<Metavar> mv,
                           Premise premise, KatExpPtr l, KatExpPtr r) {
    LawSchema s;
    s.id = id;
    s.family = LawFamily::kKat;
    s.kind = LawKind::kConditionalInclusion;
    s.metavars = std::move(mv);
    s.klhs = std::move(l);
    s.krhs = std::move(r);
    s.premises.push_back(std::move(premise));
    out.push_back(std::move(s));
  };
  auto gkat = [&](const char* id, std::vector<Metavar> mv, GkatExpPtr l,
                  GkatExpPtr r, bool bisim_sound = true) {
    LawSchema s;
    s.id = id;
    s.family = LawFamily::kGkat;
    s.kind = LawKind::kEquation;
    s.metavars = std::move(mv);
    s.glhs = std::move(l);
    s.grhs = std::move(r);
    s.bisim_sound = bisim_sound;
    out.push_back(std::move(s));
  };

  // Test-level fragment: these hold inside the Boolean algebra, stated as
  // equations between test programs.
  kat("kat.excluded-middle", {MB},
      k_test(b_or(b_test(kB), b_not(b_test(kB)))), k_one());
  kat("kat.contradiction", {MB},
      k_test(b_and(b_test(kB), b_not(b_test(kB)))), k_zero());
  kat("kat.test-idem", {MB}, k_test(b_and(b_test(kB), b_test(kB))),
      k_test(b_test(kB)));
  kat("kat.test-comm", {MB, MC}, k_test(b_and(b_test(kB), b_test(kC))),
      k_test(b_and(b_test(kC), b_test(kB))));
  kat("kat.or-distrib", {MB, MC, MD},
      k_test(b_or(b_test(kB), b_and(b_test(kC), b_test(kD)))),
      k_test(b_and(b_or(b_test(kB), b_test(kC)),
                   b_or(b_test(kB), b_test(kD)))));

  // Idempotent-semiring fragment.
  kat("kat.plus-zero", {ME}, k_plus(k_act(kE), k_zero()), k_act(kE));
  kat("kat.plus-idem", {ME}, k_plus(k_act(kE), k_act(kE)), k_act(kE));
  kat("kat.plus-comm", {ME, MF}, k_plus(k_act(kE), k_act(kF)),
      k_plus(k_act(kF), k_act(kE)));
  kat("kat.plus-assoc", {ME, MF, MG},
      k_plus(k_act(kE), k_plus(k_act(kF), k_act(kG))),
      k_plus(k_plus(k_act(kE), k_act(kF)), k_act(kG)));
  kat("kat.seq-one-right", {ME}, k_seq(k_act(kE), k_one()), k_act(kE));
  kat("kat.seq-one-left", {ME}, k_seq(k_one(), k_act(kE)), k_act(kE));
  kat("kat.annihilation", {ME}, k_seq(k_act(kE), k_zero()), k_zero());
  kat("kat.annihilation-left", {ME}, k_seq(k_zero(), k_act(kE)), k_zero());
  kat("kat.seq-assoc", {ME, MF, MG},
      k_seq(k_act(kE), k_seq(k_act(kF), k_act(kG))),
      k_seq(k_seq(k_act(kE), k_act(kF)), k_act(kG)));
  kat("kat.distrib-left", {ME, MF, MG},
      k_seq(k_act(kE), k_plus(k_act(kF), k_act(kG))),
      k_plus(k_seq(k_act(kE), k_act(kF)), k_seq(k_act(kE), k_act(kG))));
  kat("kat.distrib-right", {ME, MF, MG},
      k_seq(k_plus(k_act(kE), k_act(kF)), k_act(kG)),
      k_plus(k_seq(k_act(kE), k_act(kG)), k_seq(k_act(kF), k_act(kG))));

  // Iteration fragment.
  kat("kat.star-unroll", {ME},
      k_plus(k_one(), k_seq(k_act(kE), k_star(k_act(kE)))),
      k_star(k_act(kE)));
  kat("kat.star-unroll-right", {ME},
      k_plus(k_one(), k_seq(k_star(k_act(kE)), k_act(kE))),
      k_star(k_act(kE)));
  kat_cond_incl("kat.star-induction-left", {ME, MF, MG},
                incl_premise(k_plus(k_act(kE), k_seq(k_act(kF), k_act(kG))),
                             k_act(kG)),
                k_seq(k_star(k_act(kF)), k_act(kE)), k_act(kG));
  kat_cond_incl("kat.star-induction-right", {ME, MF, MG},
                incl_premise(k_plus(k_act(kE), k_seq(k_act(kF), k_act(kG))),
                             k_act(kF)),
                k_seq(k_act(kE), k_star(k_act(kG))), k_act(kF));

  // Guarded family. Branch guards bind the left alternative to the guard
  // being true.
  gkat("gkat.branch-idem", {ME, MB},
       g_branch(b_test(kB), g_act(kE), g_act(kE)), g_act(kE));
  gkat("gkat.branch-skew", {ME, MF, MB},
       g_branch(b_test(kB), g_act(kE), g_act(kF)),
       g_branch(b_not(b_test(kB)), g_act(kF), g_act(kE)));
  {
    LawSchema s;
    s.id = "gkat.branch-assoc";
    s.family = LawFamily::kGkat;
    s.kind = LawKind::kEquation;
    s.metavars = {ME, MF, MG, MB, MC};
    s.glhs = g_branch(b_test(kC),
                      g_branch(b_test(kB), g_act(kE), g_act(kF)), g_act(kG));
    s.grhs = g_branch(b_and(b_test(kB), b_test(kC)), g_act(kE),
                      g_branch(b_test(kC), g_act(kF), g_act(kG)));
    s.bisim_sound = true;
    s.corrected_typo = true;
    out.push_back(std::move(s));
  }
  gkat("gkat.guard-absorb", {ME, MF, MB},
       g_branch(b_test(kB), g_act(kE), g_act(kF)),
       g_branch(b_test(kB), g_seq(g_test(b_test(kB)), g_act(kE)),
                g_act(kF)));
  gkat("gkat.branch-factor", {ME, MF, MG, MB},
       g_branch(b_test(kB), g_seq(g_act(kE), g_act(kG)),
                g_seq(g_act(kF), g_act(kG))),
       g_seq(g_branch(b_test(kB), g_act(kE), g_act(kF)), g_act(kG)));
  gkat("gkat.seq-assoc", {ME, MF, MG},
       g_seq(g_seq(g_act(kE), g_act(kF)), g_act(kG)),
       g_seq(g_act(kE), g_seq(g_act(kF), g_act(kG))));
  gkat("gkat.annih-left", {ME}, g_seq(g_fail(), g_act(kE)), g_fail());
  gkat("gkat.annih-right", {ME}, g_seq(g_act(kE), g_fail()), g_fail(),
       /*bisim_sound=*/false);
  gkat("gkat.seq-one-left", {ME}, g_seq(g_skip(), g_act(kE)), g_act(kE));
  gkat("gkat.seq-one-right", {ME}, g_seq(g_act(kE), g_skip()), g_act(kE));
  gkat("gkat.loop-unroll", {ME, MB}, g_while(b_test(kB), g_act(kE)),
       g_branch(b_test(kB),
                g_seq(g_act(kE), g_while(b_test(kB), g_act(kE))), g_skip()));
  gkat("gkat.loop-guard", {ME, MB, MC},
       g_while(b_test(kB), g_seq(g_test(b_test(kC)), g_act(kE))),
       g_while(b_test(kB), g_branch(b_test(kC), g_act(kE), g_skip())));

  // Fixed-point rules. The checker validates premises semantically: an
  // instantiation counts only when its premises hold over the sample
  // universe.
  {
    LawSchema s;
    s.id = "gkat.unique-fixpoint";
    s.family = LawFamily::kGkat;
    s.kind = LawKind::kConditionalEquation;
    s.metavars = {ME, MF, MG, MB};
    s.premises = {
        eq_premise(g_act(kG), g_branch(b_test(kB),
                                       g_seq(g_act(kE), g_act(kG)),
                                       g_act(kF))),
        termination_premise("e"),
    };
    s.glhs = g_act(kG);
    s.grhs = g_seq(g_while(b_test(kB), g_act(kE)), g_act(kF));
    out.push_back(std::move(s));
  }
  {
    LawSchema s;
    s.id = "gkat.least-fixpoint";
    s.family = LawFamily::kGkat;
    s.kind = LawKind::kConditionalInclusion;
    s.metavars = {ME, MF, MG, MB};
    s.premises = {
        incl_premise(g_branch(b_test(kB), g_seq(g_act(kE), g_act(kG)),
                              g_act(kF)),
                     g_act(kG)),
    };
    s.glhs = g_seq(g_while(b_test(kB), g_act(kE)), g_act(kF));
    s.grhs = g_act(kG);
    out.push_back(std::move(s));
  }
  {
    // The fixed-point rule without its productivity side condition. Kept
    // as a negative fixture: the checker must refute the canonical
    // instance where every hole is skip and the guard is 1.
    LawSchema s;
    s.id = "gkat.unsound-fixpoint";
    s.family = LawFamily::kGkat;
    s.kind = LawKind::kConditionalEquation;
    s.metavars = {ME, MF, MG, MB};
    s.premises = {
        eq_premise(g_act(kG), g_branch(b_test(kB),
                                       g_seq(g_act(kE), g_act(kG)),
                                       g_act(kF))),
    };
    s.glhs = g_act(kG);
    s.grhs = g_seq(g_while(b_test(kB), g_act(kE)), g_act(kF));
    s.unsound = true;
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

const std::vector<LawSchema>& law_catalogue() {
  static const std::vector<LawSchema> catalogue = build_catalogue();
  return catalogue;
}

std::vector<LawSchema> list_laws(LawFamily family) {
  std::vector<LawSchema> out;
  for (const LawSchema& s : law_catalogue()) {
    if (s.family == family) out.push_back(s);
  }
  return out;
}

const LawSchema* find_law(const std::string& id) {
  for (const LawSchema& s : law_catalogue()) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

namespace {

// Substitution environments indexed by template ids. Slots left empty are
// holes the law does not declare; reaching one is a catalogue bug.
struct Subst {
  std::vector<BExpPtr> tests;
  std::vector<GkatExpPtr> gkat_programs;
  std::vector<KatExpPtr> kat_programs;
};

BExpPtr subst_bexp(const BExpPtr& t, const Subst& s) {
  switch (t->kind()) {
    case BKind::kZero:
    case BKind::kOne:
      return t;
    case BKind::kTest:
      if (!s.tests[t->test()]) {
        throw BindingError("template test hole has no binding");
      }
      return s.tests[t->test()];
    case BKind::kOr:
      return b_or(subst_bexp(t->left(), s), subst_bexp(t->right(), s));
    case BKind::kAnd:
      return b_and(subst_bexp(t->left(), s), subst_bexp(t->right(), s));
    case BKind::kNot:
      return b_not(subst_bexp(t->left(), s));
  }
  throw BindingError("unreachable");
}

GkatExpPtr subst_gkat(const GkatExpPtr& t, const Subst& s) {
  switch (t->kind()) {
    case GKind::kTest:
      return g_test(subst_bexp(t->test(), s));
    case GKind::kAct:
      if (!s.gkat_programs[t->action()]) {
        throw BindingError("template program hole has no binding");
      }
      return s.gkat_programs[t->action()];
    case GKind::kBranch:
      return g_branch(subst_bexp(t->test(), s), subst_gkat(t->left(), s),
                      subst_gkat(t->right(), s));
    case GKind::kSeq:
      return g_seq(subst_gkat(t->left(), s), subst_gkat(t->right(), s));
    case GKind::kWhile:
      return g_while(subst_bexp(t->test(), s), subst_gkat(t->left(), s));
  }
  throw BindingError("unreachable");
}

KatExpPtr subst_kat(const KatExpPtr& t, const Subst& s) {
  switch (t->kind()) {
    case KKind::kTest:
      return k_test(subst_bexp(t->test(), s));
    case KKind::kAct:
      if (!s.kat_programs[t->action()]) {
        throw BindingError("template program hole has no binding");
      }
      return s.kat_programs[t->action()];
    case KKind::kPlus:
      return k_plus(subst_kat(t->left(), s), subst_kat(t->right(), s));
    case KKind::kSeq:
      return k_seq(subst_kat(t->left(), s), subst_kat(t->right(), s));
    case KKind::kStar:
      return k_star(subst_kat(t->left(), s));
  }
  throw BindingError("unreachable");
}

}  // namespace

Instance instantiate(const LawSchema& law, const Bindings& bindings) {
  const Universe& tu = *law_template_universe();
  Subst s;
  s.tests.resize(tu.test_count());
  s.gkat_programs.resize(tu.action_count());
  s.kat_programs.resize(tu.action_count());

  for (const Metavar& mv : law.metavars) {
    if (mv.kind == HoleKind::kTest) {
      auto it = bindings.tests.find(mv.name);
      if (it == bindings.tests.end()) {
        if (bindings.gkat_programs.count(mv.name) != 0 ||
            bindings.kat_programs.count(mv.name) != 0) {
          throw BindingError(law.id + ": hole " + mv.name +
                             " is a test but was bound as a program");
        }
        throw BindingError(law.id + ": no binding for test hole " + mv.name);
      }
      s.tests[*tu.test_id(mv.name)] = it->second;
    } else if (law.family == LawFamily::kGkat) {
      auto it = bindings.gkat_programs.find(mv.name);
      if (it == bindings.gkat_programs.end()) {
        if (bindings.tests.count(mv.name) != 0) {
          throw BindingError(law.id + ": hole " + mv.name +
                             " is a program but was bound as a test");
        }
        throw BindingError(law.id + ": no binding for program hole " +
                           mv.name);
      }
      s.gkat_programs[*tu.action_id(mv.name)] = it->second;
    } else {
      auto it = bindings.kat_programs.find(mv.name);
      if (it == bindings.kat_programs.end()) {
        if (bindings.tests.count(mv.name) != 0) {
          throw BindingError(law.id + ": hole " + mv.name +
                             " is a program but was bound as a test");
        }
        throw BindingError(law.id + ": no binding for program hole " +
                           mv.name);
      }
      s.kat_programs[*tu.action_id(mv.name)] = it->second;
    }
  }

  Instance inst;
  inst.family = law.family;
  inst.kind = law.kind;
  if (law.family == LawFamily::kGkat) {
    inst.glhs = subst_gkat(law.glhs, s);
    inst.grhs = subst_gkat(law.grhs, s);
  } else {
    inst.klhs = subst_kat(law.klhs, s);
    inst.krhs = subst_kat(law.krhs, s);
  }
  for (const Premise& p : law.premises) {
    InstantiatedPremise ip;
    ip.kind = p.kind;
    if (p.kind == Premise::Kind::kTerminationZero) {
      const auto id = tu.action_id(p.metavar);
      if (!id || !s.gkat_programs[*id]) {
        throw BindingError(law.id + ": no binding for program hole " +
                           p.metavar);
      }
      ip.termination_of = s.gkat_programs[*id];
    } else if (law.family == LawFamily::kGkat) {
      ip.glhs = subst_gkat(p.glhs, s);
      ip.grhs = subst_gkat(p.grhs, s);
    } else {
      ip.klhs = subst_kat(p.klhs, s);
      ip.krhs = subst_kat(p.krhs, s);
    }
    inst.premises.push_back(std::move(ip));
  }
  return inst;
}

namespace {

std::string render_premise(const Premise& p, const Universe& tu) {
  switch (p.kind) {
    case Premise::Kind::kEquation:
      return p.glhs ? render(p.glhs, tu) + " == " + render(p.grhs, tu)
                    : render(p.klhs, tu) + " == " + render(p.krhs, tu);
    case Premise::Kind::kInclusion:
      return p.glhs ? render(p.glhs, tu) + " <= " + render(p.grhs, tu)
                    : render(p.klhs, tu) + " <= " + render(p.krhs, tu);
    case Premise::Kind::kTerminationZero:
      return "E(" + p.metavar + ") == 0";
  }
  return "";
}

}  // namespace

std::string render_law(const LawSchema& law) {
  const Universe& tu = *law_template_universe();
  const bool incl = law.kind == LawKind::kInclusion ||
                    law.kind == LawKind::kConditionalInclusion;
  const std::string rel = incl ? " <= " : " == ";
  std::string lhs, rhs;
  if (law.family == LawFamily::kGkat) {
    lhs = render(law.glhs, tu);
    rhs = render(law.grhs, tu);
  } else {
    lhs = render(law.klhs, tu);
    rhs = render(law.krhs, tu);
  }
  std::string out = law.id + ": " + lhs + rel + rhs;
  if (!law.premises.empty()) {
    out += " when ";
    for (std::size_t i = 0; i < law.premises.size(); ++i) {
      if (i > 0) out += " and ";
      out += render_premise(law.premises[i], tu);
    }
  }
  if (law.unsound) out += "  [unsound fixture]";
  return out;
}

std::string laws_to_json() {
  const Universe& tu = *law_template_universe();
  json arr = json::array();
  for (const LawSchema& law : law_catalogue()) {
    json j;
    j["id"] = law.id;
    j["family"] = law.family == LawFamily::kKat ? "kat" : "gkat";
    switch (law.kind) {
      case LawKind::kEquation:
        j["kind"] = "equation";
        break;
      case LawKind::kConditionalEquation:
        j["kind"] = "conditionalEquation";
        break;
      case LawKind::kInclusion:
        j["kind"] = "inclusion";
        break;
      case LawKind::kConditionalInclusion:
        j["kind"] = "conditionalInclusion";
        break;
    }
    json mvs = json::array();
    for (const Metavar& mv : law.metavars) {
      mvs.push_back(json{
          {"name", mv.name},
          {"kind", mv.kind == HoleKind::kProgram ? "program" : "test"}});
    }
    j["metavars"] = std::move(mvs);
    if (law.family == LawFamily::kGkat) {
      j["lhs"] = render(law.glhs, tu);
      j["rhs"] = render(law.grhs, tu);
    } else {
      j["lhs"] = render(law.klhs, tu);
      j["rhs"] = render(law.krhs, tu);
    }
    json prem = json::array();
    for (const Premise& p : law.premises) {
      json jp;
      switch (p.kind) {
        case Premise::Kind::kEquation:
          jp["kind"] = "equation";
          jp["lhs"] = p.glhs ? render(p.glhs, tu) : render(p.klhs, tu);
          jp["rhs"] = p.grhs ? render(p.grhs, tu) : render(p.krhs, tu);
          break;
        case Premise::Kind::kInclusion:
          jp["kind"] = "inclusion";
          jp["lhs"] = p.glhs ? render(p.glhs, tu) : render(p.klhs, tu);
          jp["rhs"] = p.grhs ? render(p.grhs, tu) : render(p.krhs, tu);
          break;
        case Premise::Kind::kTerminationZero:
          jp["kind"] = "terminationZero";
          jp["metavar"] = p.metavar;
          break;
      }
      prem.push_back(std::move(jp));
    }
    j["premises"] = std::move(prem);
    j["unsound"] = law.unsound;
    j["correctedTypo"] = law.corrected_typo;
    j["bisimSound"] = law.bisim_sound;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

namespace {

// Stable string hash so per-law random streams do not depend on catalogue
// order or on std::hash.
std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Bindings draw_bindings(const LawSchema& law, Rng& rng, const UniversePtr& u,
                       int depth) {
  Bindings b;
  for (const Metavar& mv : law.metavars) {
    if (mv.kind == HoleKind::kTest) {
      b.tests[mv.name] = random_bexp(rng, u, 2);
    } else if (law.family == LawFamily::kGkat) {
      b.gkat_programs[mv.name] =
          random_gkat(rng, u, static_cast<int>(rng() % (depth + 1)));
    } else {
      b.kat_programs[mv.name] =
          random_kat(rng, u, static_cast<int>(rng() % (depth + 1)));
    }
  }
  return b;
}

// Rewrites some holes of a conditional law's bindings so the premises hold
// by construction; a purely random draw almost never satisfies them, and
// the suite must not pass vacuously.
void make_premises_hold(const LawSchema& law, Rng& rng, const UniversePtr& u,
                        int depth, std::size_t idx, Bindings* b) {
  const int sub = depth >= 2 ? depth - 2 : 0;
  if (law.id == "gkat.unique-fixpoint") {
    // Leading action keeps the loop body productive.
    GkatExpPtr e = g_seq(g_act(static_cast<ActionId>(
                             rng() % u->action_count())),
                         random_gkat(rng, u, sub));
    BExpPtr guard = random_bexp(rng, u, 2);
    GkatExpPtr g0 = g_seq(g_while(guard, e), b->gkat_programs["f"]);
    if (idx % 4 == 3) g0 = g_seq(g0, g_skip());
    b->gkat_programs["e"] = e;
    b->gkat_programs["g"] = g0;
    b->tests["b"] = guard;
  } else if (law.id == "gkat.least-fixpoint") {
    const BExpPtr& guard = b->tests["b"];
    const GkatExpPtr& e = b->gkat_programs["e"];
    const GkatExpPtr& f = b->gkat_programs["f"];
    GkatExpPtr g0 = g_seq(g_while(guard, e), f);
    if (idx % 4 == 3) {
      g0 = g_branch(guard, g_seq(e, g0), f);
    }
    b->gkat_programs["g"] = g0;
  } else if (law.id == "kat.star-induction-left") {
    // g := f* (e + h) absorbs the premise by star unrolling.
    KatExpPtr target = b->kat_programs["e"];
    if (idx % 4 == 3) {
      target = k_plus(target, random_kat(rng, u, sub));
    }
    b->kat_programs["g"] = k_seq(k_star(b->kat_programs["f"]), target);
  } else if (law.id == "kat.star-induction-right") {
    KatExpPtr head = b->kat_programs["e"];
    if (idx % 4 == 3) {
      head = k_plus(head, random_kat(rng, u, sub));
    }
    b->kat_programs["f"] = k_seq(head, k_star(b->kat_programs["g"]));
  }
}

bool premise_holds(const InstantiatedPremise& p, LawFamily family,
                   const UniversePtr& u) {
  switch (p.kind) {
    case Premise::Kind::kTerminationZero:
      return is_zero(termination_condition(p.termination_of), *u);
    case Premise::Kind::kEquation:
      return family == LawFamily::kGkat
                 ? check(p.glhs, p.grhs, Mode::kLang, u).equivalent
                 : check(p.klhs, p.krhs, Mode::kLang, u).equivalent;
    case Premise::Kind::kInclusion:
      return family == LawFamily::kGkat
                 ? check(p.glhs, p.grhs, Mode::kLangInclusion, u).equivalent
                 : check(p.klhs, p.krhs, Mode::kLangInclusion, u).equivalent;
  }
  return false;
}

std::string describe_instance(const Instance& inst, const Universe& u) {
  return inst.family == LawFamily::kGkat
             ? render(inst.glhs, u) + "  vs  " + render(inst.grhs, u)
             : render(inst.klhs, u) + "  vs  " + render(inst.krhs, u);
}

LawResult run_unsound_fixture(const LawSchema& law, const UniversePtr& u) {
  LawResult r;
  r.id = law.id;
  r.attempted = 1;
  r.checked = 1;

  Bindings b;
  b.gkat_programs = {{"e", g_skip()}, {"f", g_skip()}, {"g", g_skip()}};
  b.tests = {{"b", b_one()}};
  Instance inst = instantiate(law, b);

  bool premises_ok = true;
  for (const InstantiatedPremise& p : inst.premises) {
    premises_ok = premises_ok && premise_holds(p, law.family, u);
  }
  const Verdict lang = check(inst.glhs, inst.grhs, Mode::kLang, u);
  const Verdict bis = check(inst.glhs, inst.grhs, Mode::kBisim, u);
  if (premises_ok && !lang.equivalent && !bis.equivalent) {
    r.refuted_as_expected = true;
  } else {
    r.failures = 1;
    r.first_failure =
        "canonical counterexample was not refuted: " +
        describe_instance(inst, *u);
  }
  return r;
}

LawResult run_law(const LawSchema& law, const LawCheckOptions& options,
                  const UniversePtr& u) {
  if (law.unsound) return run_unsound_fixture(law, u);

  LawResult r;
  r.id = law.id;
  Rng rng(options.seed ^ fnv1a(law.id));
  const bool conditional = !law.premises.empty();
  const bool inclusion = law.kind == LawKind::kInclusion ||
                         law.kind == LawKind::kConditionalInclusion;

  for (std::size_t idx = 0; idx < options.samples; ++idx) {
    ++r.attempted;
    Bindings b = draw_bindings(law, rng, u, options.depth);
    if (conditional && idx % 2 == 1) {
      make_premises_hold(law, rng, u, options.depth, idx, &b);
    }
    Instance inst = instantiate(law, b);
    try {
      bool premises_ok = true;
      for (const InstantiatedPremise& p : inst.premises) {
        if (!premise_holds(p, law.family, u)) {
          premises_ok = false;
          break;
        }
      }
      if (!premises_ok) continue;
      ++r.checked;

      const Mode conclusion_mode =
          inclusion ? Mode::kLangInclusion : Mode::kLang;
      bool ok;
      if (law.family == LawFamily::kGkat) {
        Verdict v = check(inst.glhs, inst.grhs, conclusion_mode, u);
        ok = v.equivalent;
        if (ok && law.bisim_sound) {
          v = check(inst.glhs, inst.grhs, Mode::kBisim, u);
          ok = v.equivalent;
        }
        if (!ok && r.first_failure.empty()) {
          r.first_failure = "sample " + std::to_string(idx) + ": " +
                            describe_instance(inst, *u) + ": " +
                            explain(v, *u);
        }
      } else {
        Verdict v = check(inst.klhs, inst.krhs, conclusion_mode, u);
        ok = v.equivalent;
        if (!ok && r.first_failure.empty()) {
          r.first_failure = "sample " + std::to_string(idx) + ": " +
                            describe_instance(inst, *u) + ": " +
                            explain(v, *u);
        }
      }
      if (!ok) ++r.failures;
    } catch (const ResourceLimitError&) {
      // An oversized subset construction is a budget miss, not a law
      // violation; the sample is dropped.
      continue;
    }
  }
  return r;
}

UniversePtr law_check_universe() {
  return std::make_shared<const Universe>(
      std::vector<std::string>{"t1", "t2", "t3"},
      std::vector<std::string>{"p", "q", "r"});
}

}  // namespace

LawCheckReport check_laws(LawFamily family, const LawCheckOptions& options) {
  const UniversePtr u = law_check_universe();
  LawCheckReport report;
  for (const LawSchema& law : list_laws(family)) {
    report.results.push_back(run_law(law, options, u));
    report.all_passed = report.all_passed && report.results.back().passed();
  }
  return report;
}

LawCheckReport check_laws(const LawCheckOptions& options) {
  const UniversePtr u = law_check_universe();
  LawCheckReport report;
  for (const LawSchema& law : law_catalogue()) {
    report.results.push_back(run_law(law, options, u));
    report.all_passed = report.all_passed && report.results.back().passed();
  }
  return report;
}

}  // namespace gkat
