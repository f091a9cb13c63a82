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

#ifndef GKAT_BEXP_HPP_
#define GKAT_BEXP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>

#include "gkat/universe.hpp"

namespace gkat {

enum class BKind : std::uint8_t { kZero, kOne, kTest, kOr, kAnd, kNot };

class BExp;
using BExpPtr = std::shared_ptr<const BExp>;

// A Boolean expression over primitive tests. Nodes are immutable and shared;
// each node carries a structural hash computed at construction, so deep
// equality checks can reject fast and containers can key on expressions.
class BExp {
 public:
  BKind kind() const { return kind_; }
  TestId test() const { return test_; }
  const BExpPtr& left() const { return left_; }
  const BExpPtr& right() const { return right_; }
  std::size_t hash() const { return hash_; }

  // Factories. b_zero and b_one return shared singletons.
  static BExpPtr mk_zero();
  static BExpPtr mk_one();
  static BExpPtr mk_test(TestId t);
  static BExpPtr mk_or(BExpPtr l, BExpPtr r);
  static BExpPtr mk_and(BExpPtr l, BExpPtr r);
  static BExpPtr mk_not(BExpPtr x);

 private:
  BExp(BKind kind, TestId test, BExpPtr left, BExpPtr right);

  BKind kind_;
  TestId test_ = 0;
  BExpPtr left_;
  BExpPtr right_;
  std::size_t hash_;
};

inline BExpPtr b_zero() { return BExp::mk_zero(); }
inline BExpPtr b_one() { return BExp::mk_one(); }
inline BExpPtr b_test(TestId t) { return BExp::mk_test(t); }
inline BExpPtr b_or(BExpPtr l, BExpPtr r) {
  return BExp::mk_or(std::move(l), std::move(r));
}
inline BExpPtr b_and(BExpPtr l, BExpPtr r) {
  return BExp::mk_and(std::move(l), std::move(r));
}
inline BExpPtr b_not(BExpPtr x) { return BExp::mk_not(std::move(x)); }

bool structurally_equal(const BExpPtr& a, const BExpPtr& b);

// Node count of the Boolean expression tree.
std::size_t bexp_size(const BExpPtr& b);

// Same expression with test ids translated from one universe to another.
// Every test mentioned must exist in `to` under the same name.
BExpPtr rescope(const BExpPtr& b, const Universe& from, const Universe& to);

}  // namespace gkat

#endif  // GKAT_BEXP_HPP_
