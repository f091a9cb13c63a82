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

#include "gkat/exp.hpp"

#include "gkat/errors.hpp"
#include "gkat/hash.hpp"

namespace gkat {

// ---------------------------------------------------------------------------
// GkatExp
// ---------------------------------------------------------------------------

GkatExp::GkatExp(GKind kind, BExpPtr test, ActionId action, GkatExpPtr left,
                 GkatExpPtr right)
    : kind_(kind),
      test_(std::move(test)),
      action_(action),
      left_(std::move(left)),
      right_(std::move(right)) {
  std::size_t h = hash_seed(0x10 + static_cast<std::size_t>(kind_));
  if (test_) h = hash_combine(h, test_->hash());
  h = hash_combine(h, action_);
  if (left_) h = hash_combine(h, left_->hash());
  if (right_) h = hash_combine(h, right_->hash());
  hash_ = h;
}

GkatExpPtr GkatExp::mk_test(BExpPtr b) {
  return GkatExpPtr(
      new GkatExp(GKind::kTest, std::move(b), 0, nullptr, nullptr));
}

GkatExpPtr GkatExp::mk_act(ActionId p) {
  return GkatExpPtr(new GkatExp(GKind::kAct, nullptr, p, nullptr, nullptr));
}

GkatExpPtr GkatExp::mk_branch(BExpPtr guard, GkatExpPtr then_branch,
                              GkatExpPtr else_branch) {
  return GkatExpPtr(new GkatExp(GKind::kBranch, std::move(guard), 0,
                                std::move(then_branch),
                                std::move(else_branch)));
}

GkatExpPtr GkatExp::mk_seq(GkatExpPtr first, GkatExpPtr second) {
  return GkatExpPtr(new GkatExp(GKind::kSeq, nullptr, 0, std::move(first),
                                std::move(second)));
}

GkatExpPtr GkatExp::mk_while(BExpPtr guard, GkatExpPtr body) {
  return GkatExpPtr(
      new GkatExp(GKind::kWhile, std::move(guard), 0, std::move(body), nullptr));
}

GkatExpPtr g_seq_norm(GkatExpPtr e, GkatExpPtr f) {
  if (e->kind() == GKind::kTest) {
    if (e->test()->kind() == BKind::kOne) return f;
    if (e->test()->kind() == BKind::kZero) return e;
  }
  if (e->kind() == GKind::kSeq) {
    // Reassociate to the right so products reach a canonical spine.
    return g_seq_norm(e->left(), g_seq_norm(e->right(), std::move(f)));
  }
  return g_seq(std::move(e), std::move(f));
}

bool structurally_equal(const GkatExpPtr& a, const GkatExpPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case GKind::kTest:
      return structurally_equal(a->test(), b->test());
    case GKind::kAct:
      return a->action() == b->action();
    case GKind::kBranch:
      return structurally_equal(a->test(), b->test()) &&
             structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
    case GKind::kSeq:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
    case GKind::kWhile:
      return structurally_equal(a->test(), b->test()) &&
             structurally_equal(a->left(), b->left());
  }
  return false;
}

// ---------------------------------------------------------------------------
// KatExp
// ---------------------------------------------------------------------------

KatExp::KatExp(KKind kind, BExpPtr test, ActionId action, KatExpPtr left,
               KatExpPtr right)
    : kind_(kind),
      test_(std::move(test)),
      action_(action),
      left_(std::move(left)),
      right_(std::move(right)) {
  std::size_t h = hash_seed(0x20 + static_cast<std::size_t>(kind_));
  if (test_) h = hash_combine(h, test_->hash());
  h = hash_combine(h, action_);
  if (left_) h = hash_combine(h, left_->hash());
  if (right_) h = hash_combine(h, right_->hash());
  hash_ = h;
}

KatExpPtr KatExp::mk_test(BExpPtr b) {
  return KatExpPtr(new KatExp(KKind::kTest, std::move(b), 0, nullptr, nullptr));
}

KatExpPtr KatExp::mk_act(ActionId p) {
  return KatExpPtr(new KatExp(KKind::kAct, nullptr, p, nullptr, nullptr));
}

KatExpPtr KatExp::mk_plus(KatExpPtr l, KatExpPtr r) {
  return KatExpPtr(
      new KatExp(KKind::kPlus, nullptr, 0, std::move(l), std::move(r)));
}

KatExpPtr KatExp::mk_seq(KatExpPtr l, KatExpPtr r) {
  return KatExpPtr(
      new KatExp(KKind::kSeq, nullptr, 0, std::move(l), std::move(r)));
}

KatExpPtr KatExp::mk_star(KatExpPtr e) {
  return KatExpPtr(new KatExp(KKind::kStar, nullptr, 0, std::move(e), nullptr));
}

KatExpPtr k_seq_norm(KatExpPtr l, KatExpPtr r) {
  if (l->kind() == KKind::kTest) {
    if (l->test()->kind() == BKind::kOne) return r;
    if (l->test()->kind() == BKind::kZero) return l;
  }
  if (l->kind() == KKind::kSeq) {
    return k_seq_norm(l->left(), k_seq_norm(l->right(), std::move(r)));
  }
  return k_seq(std::move(l), std::move(r));
}

bool structurally_equal(const KatExpPtr& a, const KatExpPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case KKind::kTest:
      return structurally_equal(a->test(), b->test());
    case KKind::kAct:
      return a->action() == b->action();
    case KKind::kPlus:
    case KKind::kSeq:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
    case KKind::kStar:
      return structurally_equal(a->left(), b->left());
  }
  return false;
}

// ---------------------------------------------------------------------------
// Shared operations
// ---------------------------------------------------------------------------

std::size_t size(const GkatExpPtr& e) {
  switch (e->kind()) {
    case GKind::kTest:
    case GKind::kAct:
      return 1;
    case GKind::kBranch:
      return 1 + size(e->left()) + size(e->right());
    case GKind::kSeq:
      return 1 + size(e->left()) + size(e->right());
    case GKind::kWhile:
      return 1 + size(e->left());
  }
  return 0;
}

std::size_t size(const KatExpPtr& e) {
  switch (e->kind()) {
    case KKind::kTest:
    case KKind::kAct:
      return 1;
    case KKind::kPlus:
    case KKind::kSeq:
      return 1 + size(e->left()) + size(e->right());
    case KKind::kStar:
      return 1 + size(e->left());
  }
  return 0;
}

KatExpPtr embed(const GkatExpPtr& e) {
  switch (e->kind()) {
    case GKind::kTest:
      return k_test(e->test());
    case GKind::kAct:
      return k_act(e->action());
    case GKind::kBranch: {
      // b;e + !b;f
      KatExpPtr then_part = k_seq(k_test(e->test()), embed(e->left()));
      KatExpPtr else_part =
          k_seq(k_test(b_not(e->test())), embed(e->right()));
      return k_plus(std::move(then_part), std::move(else_part));
    }
    case GKind::kSeq:
      return k_seq(embed(e->left()), embed(e->right()));
    case GKind::kWhile: {
      // (b;e)* ; !b
      KatExpPtr body = k_seq(k_test(e->test()), embed(e->left()));
      return k_seq(k_star(std::move(body)), k_test(b_not(e->test())));
    }
  }
  return nullptr;
}

BExpPtr termination_condition(const GkatExpPtr& e) {
  switch (e->kind()) {
    case GKind::kTest:
      return e->test();
    case GKind::kAct:
      return b_zero();
    case GKind::kBranch:
      return b_or(b_and(e->test(), termination_condition(e->left())),
                  b_and(b_not(e->test()), termination_condition(e->right())));
    case GKind::kSeq:
      return b_and(termination_condition(e->left()),
                   termination_condition(e->right()));
    case GKind::kWhile:
      return b_not(e->test());
  }
  return nullptr;
}

GkatExpPtr rescope(const GkatExpPtr& e, const Universe& from,
                   const Universe& to) {
  switch (e->kind()) {
    case GKind::kTest:
      return g_test(rescope(e->test(), from, to));
    case GKind::kAct: {
      auto id = to.action_id(from.action_name(e->action()));
      if (!id) {
        throw UniverseMismatchError("action '" +
                                    from.action_name(e->action()) +
                                    "' missing from target universe");
      }
      return g_act(*id);
    }
    case GKind::kBranch:
      return g_branch(rescope(e->test(), from, to),
                      rescope(e->left(), from, to),
                      rescope(e->right(), from, to));
    case GKind::kSeq:
      return g_seq(rescope(e->left(), from, to), rescope(e->right(), from, to));
    case GKind::kWhile:
      return g_while(rescope(e->test(), from, to),
                     rescope(e->left(), from, to));
  }
  return nullptr;
}

KatExpPtr rescope(const KatExpPtr& e, const Universe& from,
                  const Universe& to) {
  switch (e->kind()) {
    case KKind::kTest:
      return k_test(rescope(e->test(), from, to));
    case KKind::kAct: {
      auto id = to.action_id(from.action_name(e->action()));
      if (!id) {
        throw UniverseMismatchError("action '" +
                                    from.action_name(e->action()) +
                                    "' missing from target universe");
      }
      return k_act(*id);
    }
    case KKind::kPlus:
      return k_plus(rescope(e->left(), from, to),
                    rescope(e->right(), from, to));
    case KKind::kSeq:
      return k_seq(rescope(e->left(), from, to), rescope(e->right(), from, to));
    case KKind::kStar:
      return k_star(rescope(e->left(), from, to));
  }
  return nullptr;
}

}  // namespace gkat
