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

#ifndef GKAT_PARSE_HPP_
#define GKAT_PARSE_HPP_

#include <string_view>

#include "gkat/exp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// Both program formats start with a two-line header declaring the universe:
//
//   tests: b c
//   actions: p q
//
// followed by the program body. '#' starts a comment that runs to the end of
// the line. Either symbol list may be empty.
//
// .gkat bodies use the imperative surface:
//
//   prog  := stmt (";" stmt)*                    (";" associates right)
//   stmt  := "skip" | "fail" | "assert" bexp | action
//          | "if" bexp "then" block "else" block
//          | "while" bexp "do" block | block
//   block := "{" prog "}" | stmt
//   bexp  := bterm ("or" bterm)*                 (left)
//   bterm := bfact ("and" bfact)*                (left)
//   bfact := "not" bfact | "!" bfact | "0" | "1" | test | "(" bexp ")"
//
// .kat bodies use the algebraic surface, loosest to tightest: "+" (choice,
// right), ";" (composition, right), postfix "*". Constants 0 and 1, bare
// test and action names, "!" applied to a Boolean factor, "[" bexp "]" for
// an embedded compound test, and parentheses. Inside "!" and "[...]" the
// Boolean connectives are "+", ";" and "!".

struct GkatProgram {
  UniversePtr universe;
  GkatExpPtr program;
};

struct KatProgram {
  UniversePtr universe;
  KatExpPtr program;
};

// Throw ParseError on lexical, grammatical, and scope errors, and
// AtomBlowupError when the header declares more than max_tests tests.
GkatProgram parse_gkat(std::string_view text,
                       std::size_t max_tests = Universe::kMaxTestsDefault);
KatProgram parse_kat(std::string_view text,
                     std::size_t max_tests = Universe::kMaxTestsDefault);

}  // namespace gkat

#endif  // GKAT_PARSE_HPP_
