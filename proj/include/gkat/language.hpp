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

#ifndef GKAT_LANGUAGE_HPP_
#define GKAT_LANGUAGE_HPP_

#include "gkat/exp.hpp"
#include "gkat/guarded.hpp"
#include "gkat/universe.hpp"

namespace gkat {

struct OracleLimits {
  // Ceiling on the size of any language materialized along the way,
  // intermediate results included.
  std::size_t max_strings = 1'000'000;
};

// The guarded strings of e with at most `bound` actions, computed directly
// from the inductive language semantics: tests denote their satisfying
// atoms, actions denote all one-action strings, choice is union, composition
// is fusion, and iteration is the truncated union of fused powers. This is
// the reference evaluator the automaton pipeline is tested against. Throws
// ResourceLimitError when a language exceeds limits.max_strings.
GuardedLanguage lang_bounded(const KatExpPtr& e, std::size_t bound,
                             const Universe& u, const OracleLimits& limits = {});

// Whether w is in the language of e. Equivalent to computing lang_bounded at
// w's action count and testing membership.
bool membership(const KatExpPtr& e, const GuardedString& w, const Universe& u,
                const OracleLimits& limits = {});

}  // namespace gkat

#endif  // GKAT_LANGUAGE_HPP_
