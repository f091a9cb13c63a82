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

#ifndef GKAT_ATOMS_HPP_
#define GKAT_ATOMS_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gkat/bexp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// An atom is a complete truth assignment to the universe's tests, packed as
// a bit per test: bit t set means test t holds. The numeric value doubles as
// the total order on atoms used everywhere ties must break deterministically.
using Atom = std::uint32_t;

inline bool atom_has(Atom a, TestId t) { return (a >> t) & 1u; }

// Truth value of b under the assignment a.
bool eval(const BExpPtr& b, Atom a);

// A set of atoms over a fixed universe size, packed 64 per word.
class AtomSet {
 public:
  explicit AtomSet(std::size_t atom_count)
      : count_(atom_count), bits_((atom_count + 63) / 64, 0) {}

  std::size_t universe_size() const { return count_; }
  bool contains(Atom a) const { return (bits_[a >> 6] >> (a & 63)) & 1u; }
  void insert(Atom a) { bits_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  void erase(Atom a) { bits_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }

  bool empty() const;
  std::size_t size() const;

  AtomSet& operator|=(const AtomSet& o);
  AtomSet& operator&=(const AtomSet& o);
  AtomSet complement() const;

  bool operator==(const AtomSet& o) const {
    return count_ == o.count_ && bits_ == o.bits_;
  }

  // Members in increasing numeric order.
  std::vector<Atom> to_vector() const;

 private:
  std::size_t count_;
  std::vector<std::uint64_t> bits_;
};

// The set of atoms satisfying b.
AtomSet satisfying(const BExpPtr& b, const Universe& u);

// Whether b is unsatisfiable over u (no atom satisfies it).
bool is_zero(const BExpPtr& b, const Universe& u);

// Renders an atom as the set of tests it makes true, e.g. "{t1,t3}" or "{}".
// Test names appear in universe order.
std::string render_atom(Atom a, const Universe& u);

// Inverse of render_atom. Throws Error on malformed input or unknown tests.
Atom parse_atom(std::string_view text, const Universe& u);

}  // namespace gkat

#endif  // GKAT_ATOMS_HPP_
