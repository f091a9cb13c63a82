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

#include "gkat/atoms.hpp"

#include <bit>

#include "gkat/errors.hpp"

namespace gkat {

bool eval(const BExpPtr& b, Atom a) {
  switch (b->kind()) {
    case BKind::kZero:
      return false;
    case BKind::kOne:
      return true;
    case BKind::kTest:
      return atom_has(a, b->test());
    case BKind::kNot:
      return !eval(b->left(), a);
    case BKind::kOr:
      return eval(b->left(), a) || eval(b->right(), a);
    case BKind::kAnd:
      return eval(b->left(), a) && eval(b->right(), a);
  }
  return false;
}

bool AtomSet::empty() const {
  for (auto w : bits_) {
    if (w != 0) return false;
  }
  return true;
}

std::size_t AtomSet::size() const {
  std::size_t n = 0;
  for (auto w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

AtomSet& AtomSet::operator|=(const AtomSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
  return *this;
}

AtomSet& AtomSet::operator&=(const AtomSet& o) {
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
  return *this;
}

AtomSet AtomSet::complement() const {
  AtomSet r(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] = ~bits_[i];
  // Mask off the bits beyond the universe in the final word.
  if (count_ % 64 != 0) {
    r.bits_.back() &= (std::uint64_t{1} << (count_ % 64)) - 1;
  }
  return r;
}

std::vector<Atom> AtomSet::to_vector() const {
  std::vector<Atom> out;
  out.reserve(size());
  for (Atom a = 0; a < count_; ++a) {
    if (contains(a)) out.push_back(a);
  }
  return out;
}

AtomSet satisfying(const BExpPtr& b, const Universe& u) {
  const std::size_t n = u.atom_count();
  switch (b->kind()) {
    case BKind::kZero:
      return AtomSet(n);
    case BKind::kOne:
      return AtomSet(n).complement();
    case BKind::kTest: {
      AtomSet r(n);
      for (Atom a = 0; a < n; ++a) {
        if (atom_has(a, b->test())) r.insert(a);
      }
      return r;
    }
    case BKind::kNot:
      return satisfying(b->left(), u).complement();
    case BKind::kOr: {
      AtomSet r = satisfying(b->left(), u);
      r |= satisfying(b->right(), u);
      return r;
    }
    case BKind::kAnd: {
      AtomSet r = satisfying(b->left(), u);
      r &= satisfying(b->right(), u);
      return r;
    }
  }
  return AtomSet(n);
}

bool is_zero(const BExpPtr& b, const Universe& u) {
  return satisfying(b, u).empty();
}

std::string render_atom(Atom a, const Universe& u) {
  std::string out = "{";
  bool first = true;
  for (TestId t = 0; t < u.test_count(); ++t) {
    if (!atom_has(a, t)) continue;
    if (!first) out += ",";
    out += u.test_name(t);
    first = false;
  }
  out += "}";
  return out;
}

Atom parse_atom(std::string_view text, const Universe& u) {
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw Error("malformed atom '" + std::string(text) +
                "': expected '{...}'");
  }
  std::string_view body = text.substr(1, text.size() - 2);
  Atom a = 0;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view name = body.substr(
        pos, comma == std::string_view::npos ? body.size() - pos
                                             : comma - pos);
    // Tolerate surrounding spaces in hand-written fixtures.
    while (!name.empty() && name.front() == ' ') name.remove_prefix(1);
    while (!name.empty() && name.back() == ' ') name.remove_suffix(1);
    if (name.empty()) {
      throw Error("malformed atom '" + std::string(text) +
                  "': empty test name");
    }
    auto id = u.test_id(name);
    if (!id) {
      throw Error("atom '" + std::string(text) + "' mentions unknown test '" +
                  std::string(name) + "'");
    }
    a |= Atom{1} << *id;
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    if (pos >= body.size()) {
      throw Error("malformed atom '" + std::string(text) +
                  "': trailing comma");
    }
  }
  return a;
}

}  // namespace gkat
