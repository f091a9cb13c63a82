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

#ifndef GKAT_ERRORS_HPP_
#define GKAT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gkat {

// Base class for all errors raised by this library. The CLI maps subclasses
// onto exit codes: input errors exit 2, resource limits exit 3.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Lexical or grammatical error in a .gkat or .kat file, or a scope error
// (symbol used but not declared in the header). Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t col)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(col)),
        line_(line),
        col_(col) {}

  std::size_t line() const { return line_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t line_;
  std::size_t col_;
};

// Malformed JSON input (automaton or interpretation files).
class JsonFormatError : public Error {
 public:
  using Error::Error;
};

// Too many tests for atom enumeration; raised when a universe exceeds its
// atom cap.
class AtomBlowupError : public Error {
 public:
  using Error::Error;
};

// A configurable ceiling was hit: bounded language enumeration exceeded its
// string budget, or determinization exceeded its state budget.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// Two values that must share a universe (same test and action lists, in
// order) do not.
class UniverseMismatchError : public Error {
 public:
  using Error::Error;
};

// An expression mentions a symbol the interpretation does not cover.
class MissingSymbolError : public Error {
 public:
  using Error::Error;
};

// An interpretation declared functional maps some state to two successors,
// either in its own data or in a computed program relation.
class FunctionalityError : public Error {
 public:
  using Error::Error;
};

// A law instantiation is missing a binding or binds a hole of the wrong kind.
class BindingError : public Error {
 public:
  using Error::Error;
};

}  // namespace gkat

#endif  // GKAT_ERRORS_HPP_
