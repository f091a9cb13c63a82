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

#include "gkat/bexp.hpp"

#include "gkat/errors.hpp"
#include "gkat/hash.hpp"

namespace gkat {

BExp::BExp(BKind kind, TestId test, BExpPtr left, BExpPtr right)
    : kind_(kind), test_(test), left_(std::move(left)), right_(std::move(right)) {
  std::size_t h = hash_seed(static_cast<std::size_t>(kind_));
  h = hash_combine(h, test_);
  if (left_) h = hash_combine(h, left_->hash());
  if (right_) h = hash_combine(h, right_->hash());
  hash_ = h;
}

BExpPtr BExp::mk_zero() {
  static const BExpPtr k(new BExp(BKind::kZero, 0, nullptr, nullptr));
  return k;
}

BExpPtr BExp::mk_one() {
  static const BExpPtr k(new BExp(BKind::kOne, 0, nullptr, nullptr));
  return k;
}

BExpPtr BExp::mk_test(TestId t) {
  return BExpPtr(new BExp(BKind::kTest, t, nullptr, nullptr));
}

BExpPtr BExp::mk_or(BExpPtr l, BExpPtr r) {
  return BExpPtr(new BExp(BKind::kOr, 0, std::move(l), std::move(r)));
}

BExpPtr BExp::mk_and(BExpPtr l, BExpPtr r) {
  return BExpPtr(new BExp(BKind::kAnd, 0, std::move(l), std::move(r)));
}

BExpPtr BExp::mk_not(BExpPtr x) {
  return BExpPtr(new BExp(BKind::kNot, 0, std::move(x), nullptr));
}

bool structurally_equal(const BExpPtr& a, const BExpPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->hash() != b->hash() || a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case BKind::kZero:
    case BKind::kOne:
      return true;
    case BKind::kTest:
      return a->test() == b->test();
    case BKind::kNot:
      return structurally_equal(a->left(), b->left());
    case BKind::kOr:
    case BKind::kAnd:
      return structurally_equal(a->left(), b->left()) &&
             structurally_equal(a->right(), b->right());
  }
  return false;
}

std::size_t bexp_size(const BExpPtr& b) {
  switch (b->kind()) {
    case BKind::kZero:
    case BKind::kOne:
    case BKind::kTest:
      return 1;
    case BKind::kNot:
      return 1 + bexp_size(b->left());
    case BKind::kOr:
    case BKind::kAnd:
      return 1 + bexp_size(b->left()) + bexp_size(b->right());
  }
  return 0;
}

BExpPtr rescope(const BExpPtr& b, const Universe& from, const Universe& to) {
  switch (b->kind()) {
    case BKind::kZero:
    case BKind::kOne:
      return b;
    case BKind::kTest: {
      const std::string& name = from.test_name(b->test());
      auto id = to.test_id(name);
      if (!id) {
        throw UniverseMismatchError("test '" + name +
                                    "' missing from target universe");
      }
      return b_test(*id);
    }
    case BKind::kNot:
      return b_not(rescope(b->left(), from, to));
    case BKind::kOr:
      return b_or(rescope(b->left(), from, to), rescope(b->right(), from, to));
    case BKind::kAnd:
      return b_and(rescope(b->left(), from, to),
                   rescope(b->right(), from, to));
  }
  return b;
}

}  // namespace gkat
