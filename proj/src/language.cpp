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

#include "gkat/language.hpp"

#include <map>

#include "gkat/errors.hpp"

namespace gkat {
namespace {

void check_budget(std::size_t n, const OracleLimits& limits) {
  if (n > limits.max_strings) {
    throw ResourceLimitError(
        "bounded language enumeration exceeded " +
        std::to_string(limits.max_strings) + " strings");
  }
}

// Fusion that drops results longer than `bound` and enforces the budget as
// it goes, so runaway products fail fast instead of exhausting memory.
GuardedLanguage fuse_bounded(const GuardedLanguage& a,
                             const GuardedLanguage& b, std::size_t bound,
                             const OracleLimits& limits) {
  std::map<Atom, std::vector<const GuardedString*>> by_first;
  for (const auto& w : b.strings) by_first[w.atoms[0]].push_back(&w);

  GuardedLanguage out;
  out.bound = bound;
  for (const auto& w1 : a.strings) {
    auto it = by_first.find(w1.atoms.back());
    if (it == by_first.end()) continue;
    for (const GuardedString* w2 : it->second) {
      if (w1.actions.size() + w2->actions.size() > bound) continue;
      GuardedString joined;
      joined.atoms = w1.atoms;
      joined.atoms.insert(joined.atoms.end(), w2->atoms.begin() + 1,
                          w2->atoms.end());
      joined.actions = w1.actions;
      joined.actions.insert(joined.actions.end(), w2->actions.begin(),
                            w2->actions.end());
      out.strings.insert(std::move(joined));
      check_budget(out.strings.size(), limits);
    }
  }
  return out;
}

GuardedLanguage eval_lang(const KatExpPtr& e, std::size_t bound,
                          const Universe& u, const OracleLimits& limits) {
  switch (e->kind()) {
    case KKind::kTest: {
      GuardedLanguage l;
      l.bound = bound;
      for (Atom a : satisfying(e->test(), u).to_vector()) {
        l.strings.insert(GuardedString{{a}, {}});
      }
      return l;
    }
    case KKind::kAct: {
      GuardedLanguage l;
      l.bound = bound;
      if (bound >= 1) {
        for (Atom a = 0; a < u.atom_count(); ++a) {
          for (Atom b = 0; b < u.atom_count(); ++b) {
            l.strings.insert(GuardedString{{a, b}, {e->action()}});
            check_budget(l.strings.size(), limits);
          }
        }
      }
      return l;
    }
    case KKind::kPlus: {
      GuardedLanguage l = eval_lang(e->left(), bound, u, limits);
      GuardedLanguage r = eval_lang(e->right(), bound, u, limits);
      for (auto& w : r.strings) {
        l.strings.insert(std::move(w));
        check_budget(l.strings.size(), limits);
      }
      l.bound = bound;
      return l;
    }
    case KKind::kSeq: {
      GuardedLanguage l = eval_lang(e->left(), bound, u, limits);
      GuardedLanguage r = eval_lang(e->right(), bound, u, limits);
      return fuse_bounded(l, r, bound, limits);
    }
    case KKind::kStar: {
      GuardedLanguage body = eval_lang(e->left(), bound, u, limits);
      // Truncated powers: accumulate id, L, L^2 ... until the set stops
      // growing. Every round either adds a string or is the last one.
      GuardedLanguage acc = full_test_language(u);
      acc.bound = bound;
      GuardedLanguage frontier = acc;
      while (true) {
        GuardedLanguage next = fuse_bounded(frontier, body, bound, limits);
        std::size_t before = acc.strings.size();
        for (auto& w : next.strings) {
          acc.strings.insert(std::move(w));
          check_budget(acc.strings.size(), limits);
        }
        if (acc.strings.size() == before) break;
        frontier = std::move(next);
      }
      return acc;
    }
  }
  return GuardedLanguage{};
}

}  // namespace

GuardedLanguage lang_bounded(const KatExpPtr& e, std::size_t bound,
                             const Universe& u, const OracleLimits& limits) {
  return eval_lang(e, bound, u, limits);
}

bool membership(const KatExpPtr& e, const GuardedString& w, const Universe& u,
                const OracleLimits& limits) {
  GuardedLanguage l = lang_bounded(e, w.action_count(), u, limits);
  return l.strings.count(w) != 0;
}

}  // namespace gkat
