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

#ifndef GKAT_RENDER_HPP_
#define GKAT_RENDER_HPP_

#include <string>

#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// Textual forms that parse back to a structurally equal expression:
// parse_gkat(render_program(u, e)).program is structurally equal to e, and
// likewise for the .kat surface. Parentheses and braces are emitted only
// where reassociation would otherwise change the tree.

// Imperative surface ("b or c", "not b").
std::string render(const BExpPtr& b, const Universe& u);

// Program body text, e.g. "e; while b or c do { if b then f else g }".
std::string render(const GkatExpPtr& e, const Universe& u);

// Algebraic body text, e.g. "e;(b;f)*;!b".
std::string render(const KatExpPtr& e, const Universe& u);

// Full file contents: the two header lines followed by the body.
std::string render_program(const GkatExpPtr& e, const Universe& u);
std::string render_program(const KatExpPtr& e, const Universe& u);

}  // namespace gkat

#endif  // GKAT_RENDER_HPP_
