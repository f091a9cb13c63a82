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

#ifndef GKAT_EXP_HPP_
#define GKAT_EXP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>

#include "gkat/bexp.hpp"
#include "gkat/universe.hpp"

namespace gkat {

// ---------------------------------------------------------------------------
// Guarded programs
// ---------------------------------------------------------------------------

enum class GKind : std::uint8_t { kTest, kAct, kBranch, kSeq, kWhile };

class GkatExp;
using GkatExpPtr = std::shared_ptr<const GkatExp>;

// A guarded program: tests, actions, binary branching on a test, sequencing,
// and guarded loops. Immutable, shared, structurally hashed.
class GkatExp {
 public:
  GKind kind() const { return kind_; }
  // kTest: the embedded Boolean expression. kBranch/kWhile: the guard.
  const BExpPtr& test() const { return test_; }
  ActionId action() const { return action_; }
  const GkatExpPtr& left() const { return left_; }    // kBranch/kSeq/kWhile
  const GkatExpPtr& right() const { return right_; }  // kBranch/kSeq
  std::size_t hash() const { return hash_; }

  static GkatExpPtr mk_test(BExpPtr b);
  static GkatExpPtr mk_act(ActionId p);
  static GkatExpPtr mk_branch(BExpPtr guard, GkatExpPtr then_branch,
                              GkatExpPtr else_branch);
  static GkatExpPtr mk_seq(GkatExpPtr first, GkatExpPtr second);
  static GkatExpPtr mk_while(BExpPtr guard, GkatExpPtr body);

 private:
  GkatExp(GKind kind, BExpPtr test, ActionId action, GkatExpPtr left,
          GkatExpPtr right);

  GKind kind_;
  BExpPtr test_;
  ActionId action_ = 0;
  GkatExpPtr left_;
  GkatExpPtr right_;
  std::size_t hash_;
};

inline GkatExpPtr g_test(BExpPtr b) { return GkatExp::mk_test(std::move(b)); }
inline GkatExpPtr g_act(ActionId p) { return GkatExp::mk_act(p); }
inline GkatExpPtr g_branch(BExpPtr b, GkatExpPtr t, GkatExpPtr e) {
  return GkatExp::mk_branch(std::move(b), std::move(t), std::move(e));
}
inline GkatExpPtr g_seq(GkatExpPtr e, GkatExpPtr f) {
  return GkatExp::mk_seq(std::move(e), std::move(f));
}
inline GkatExpPtr g_while(BExpPtr b, GkatExpPtr e) {
  return GkatExp::mk_while(std::move(b), std::move(e));
}
inline GkatExpPtr g_skip() { return g_test(b_one()); }
inline GkatExpPtr g_fail() { return g_test(b_zero()); }

// Sequencing with the normalizations applied by the automaton construction:
// 1;e -> e, 0;e -> 0, (e;f);g -> e;(f;g). Does not rewrite e;0, whose early
// failure is observable under bisimilarity.
GkatExpPtr g_seq_norm(GkatExpPtr e, GkatExpPtr f);

bool structurally_equal(const GkatExpPtr& a, const GkatExpPtr& b);

// ---------------------------------------------------------------------------
// Kleene programs with tests
// ---------------------------------------------------------------------------

enum class KKind : std::uint8_t { kTest, kAct, kPlus, kSeq, kStar };

class KatExp;
using KatExpPtr = std::shared_ptr<const KatExp>;

class KatExp {
 public:
  KKind kind() const { return kind_; }
  const BExpPtr& test() const { return test_; }
  ActionId action() const { return action_; }
  const KatExpPtr& left() const { return left_; }    // kPlus/kSeq/kStar
  const KatExpPtr& right() const { return right_; }  // kPlus/kSeq
  std::size_t hash() const { return hash_; }

  static KatExpPtr mk_test(BExpPtr b);
  static KatExpPtr mk_act(ActionId p);
  static KatExpPtr mk_plus(KatExpPtr l, KatExpPtr r);
  static KatExpPtr mk_seq(KatExpPtr l, KatExpPtr r);
  static KatExpPtr mk_star(KatExpPtr e);

 private:
  KatExp(KKind kind, BExpPtr test, ActionId action, KatExpPtr left,
         KatExpPtr right);

  KKind kind_;
  BExpPtr test_;
  ActionId action_ = 0;
  KatExpPtr left_;
  KatExpPtr right_;
  std::size_t hash_;
};

inline KatExpPtr k_test(BExpPtr b) { return KatExp::mk_test(std::move(b)); }
inline KatExpPtr k_act(ActionId p) { return KatExp::mk_act(p); }
inline KatExpPtr k_plus(KatExpPtr l, KatExpPtr r) {
  return KatExp::mk_plus(std::move(l), std::move(r));
}
inline KatExpPtr k_seq(KatExpPtr l, KatExpPtr r) {
  return KatExp::mk_seq(std::move(l), std::move(r));
}
inline KatExpPtr k_star(KatExpPtr e) { return KatExp::mk_star(std::move(e)); }
inline KatExpPtr k_one() { return k_test(b_one()); }
inline KatExpPtr k_zero() { return k_test(b_zero()); }

// Sequencing with 1;e -> e, 0;e -> 0 and right association, as used for
// derivative terms.
KatExpPtr k_seq_norm(KatExpPtr l, KatExpPtr r);

bool structurally_equal(const KatExpPtr& a, const KatExpPtr& b);

// ---------------------------------------------------------------------------
// Shared operations
// ---------------------------------------------------------------------------

// Node counts. Test nodes count as one leaf regardless of the size of the
// Boolean expression inside; branch and loop guards do not count at all.
std::size_t size(const GkatExpPtr& e);
std::size_t size(const KatExpPtr& e);

// Translation of a guarded program into a Kleene program:
//   if b then e else f  ->  b;e + !b;f
//   while b do e        ->  (b;e)* ; !b
// Tests and actions map to themselves; sequencing is preserved.
// Guarantees size(embed(e)) <= 5*size(e) - 4.
KatExpPtr embed(const GkatExpPtr& e);

// The test characterizing immediate successful termination: an atom can end
// the program right away iff it satisfies this expression.
//   E(b) = b        E(p) = 0
//   E(if b then e else f) = b E(e) + !b E(f)
//   E(e;f) = E(e) E(f)
//   E(while b do e) = !b
BExpPtr termination_condition(const GkatExpPtr& e);

GkatExpPtr rescope(const GkatExpPtr& e, const Universe& from,
                   const Universe& to);
KatExpPtr rescope(const KatExpPtr& e, const Universe& from,
                  const Universe& to);

// Hash and equality functors so expressions can key unordered containers.
struct GkatExpHash {
  std::size_t operator()(const GkatExpPtr& e) const { return e->hash(); }
};
struct GkatExpEq {
  bool operator()(const GkatExpPtr& a, const GkatExpPtr& b) const {
    return structurally_equal(a, b);
  }
};
struct KatExpHash {
  std::size_t operator()(const KatExpPtr& e) const { return e->hash(); }
};
struct KatExpEq {
  bool operator()(const KatExpPtr& a, const KatExpPtr& b) const {
    return structurally_equal(a, b);
  }
};

}  // namespace gkat

#endif  // GKAT_EXP_HPP_
