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

#ifndef GKAT_GUARDED_HPP_
#define GKAT_GUARDED_HPP_

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/atoms.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// A guarded string alternates atoms and actions, starting and ending with an
// atom: a0 p0 a1 p1 ... an. Always has one more atom than actions.
struct GuardedString {
  std::vector<Atom> atoms;
  std::vector<ActionId> actions;

  std::size_t action_count() const { return actions.size(); }

  // Orders by action count first, then pointwise on the interleaved
  // sequence. This is the order used for output listings and witness ties.
  std::strong_ordering operator<=>(const GuardedString& o) const;
  bool operator==(const GuardedString& o) const = default;
};

// Renders as "{b} p {} q {b,c}".
std::string render(const GuardedString& w, const Universe& u);

// Inverse of render; accepts any whitespace separation. Throws Error.
GuardedString parse_guarded_string(std::string_view text, const Universe& u);

// A finite, deduplicated set of guarded strings, all with at most `bound`
// actions.
struct GuardedLanguage {
  std::set<GuardedString> strings;
  std::size_t bound = 0;
};

// Language of all single-atom strings (the unit of fusion).
GuardedLanguage full_test_language(const Universe& u);

// Fusion product: wa from `a` joins ax from `b` when the shared atom
// matches, contracting the duplicate.
GuardedLanguage fusion(const GuardedLanguage& a, const GuardedLanguage& b);

}  // namespace gkat

#endif  // GKAT_GUARDED_HPP_
