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

#include "gkat/guarded.hpp"

#include <map>

#include "gkat/errors.hpp"

namespace gkat {

std::strong_ordering GuardedString::operator<=>(const GuardedString& o) const {
  if (auto c = actions.size() <=> o.actions.size(); c != 0) return c;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (auto c = atoms[i] <=> o.atoms[i]; c != 0) return c;
    if (auto c = actions[i] <=> o.actions[i]; c != 0) return c;
  }
  return atoms.back() <=> o.atoms.back();
}

std::string render(const GuardedString& w, const Universe& u) {
  std::string out = render_atom(w.atoms[0], u);
  for (std::size_t i = 0; i < w.actions.size(); ++i) {
    out += " " + u.action_name(w.actions[i]);
    out += " " + render_atom(w.atoms[i + 1], u);
  }
  return out;
}

GuardedString parse_guarded_string(std::string_view text, const Universe& u) {
  GuardedString w;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() &&
           (text[pos] == ' ' || text[pos] == '\t')) {
      ++pos;
    }
  };
  bool expect_atom = true;
  while (skip_space(), pos < text.size()) {
    if (expect_atom) {
      if (text[pos] != '{') {
        throw Error("expected an atom in guarded string '" +
                    std::string(text) + "'");
      }
      std::size_t close = text.find('}', pos);
      if (close == std::string_view::npos) {
        throw Error("unterminated atom in guarded string '" +
                    std::string(text) + "'");
      }
      w.atoms.push_back(parse_atom(text.substr(pos, close - pos + 1), u));
      pos = close + 1;
    } else {
      std::size_t start = pos;
      while (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' &&
             text[pos] != '{') {
        ++pos;
      }
      std::string_view name = text.substr(start, pos - start);
      auto id = u.action_id(name);
      if (!id) {
        throw Error("unknown action '" + std::string(name) +
                    "' in guarded string");
      }
      w.actions.push_back(*id);
    }
    expect_atom = !expect_atom;
  }
  if (w.atoms.size() != w.actions.size() + 1) {
    throw Error("guarded string '" + std::string(text) +
                "' must end with an atom");
  }
  return w;
}

GuardedLanguage full_test_language(const Universe& u) {
  GuardedLanguage l;
  l.bound = 0;
  for (Atom a = 0; a < u.atom_count(); ++a) {
    l.strings.insert(GuardedString{{a}, {}});
  }
  return l;
}

GuardedLanguage fusion(const GuardedLanguage& a, const GuardedLanguage& b) {
  // Index the right side by leading atom.
  std::map<Atom, std::vector<const GuardedString*>> by_first;
  for (const auto& w : b.strings) by_first[w.atoms[0]].push_back(&w);

  GuardedLanguage out;
  out.bound = a.bound + b.bound;
  for (const auto& w1 : a.strings) {
    auto it = by_first.find(w1.atoms.back());
    if (it == by_first.end()) continue;
    for (const GuardedString* w2 : it->second) {
      GuardedString joined;
      joined.atoms = w1.atoms;
      joined.atoms.insert(joined.atoms.end(), w2->atoms.begin() + 1,
                          w2->atoms.end());
      joined.actions = w1.actions;
      joined.actions.insert(joined.actions.end(), w2->actions.begin(),
                            w2->actions.end());
      out.strings.insert(std::move(joined));
    }
  }
  return out;
}

}  // namespace gkat
