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

#include "gkat/render.hpp"

namespace gkat {
namespace {

// Imperative Boolean surface. Precedence: or(0) < and(1) < not/atoms(2).
int bprec(const BExpPtr& b) {
  switch (b->kind()) {
    case BKind::kOr:
      return 0;
    case BKind::kAnd:
      return 1;
    default:
      return 2;
  }
}

std::string render_b(const BExpPtr& b, const Universe& u, int min_prec) {
  std::string out;
  bool parens = bprec(b) < min_prec;
  if (parens) out += "(";
  switch (b->kind()) {
    case BKind::kZero:
      out += "0";
      break;
    case BKind::kOne:
      out += "1";
      break;
    case BKind::kTest:
      out += u.test_name(b->test());
      break;
    case BKind::kNot:
      out += "not " + render_b(b->left(), u, 2);
      break;
    case BKind::kOr:
      // "or" and "and" chains associate left.
      out += render_b(b->left(), u, 0) + " or " + render_b(b->right(), u, 1);
      break;
    case BKind::kAnd:
      out += render_b(b->left(), u, 1) + " and " + render_b(b->right(), u, 2);
      break;
  }
  if (parens) out += ")";
  return out;
}

// Algebraic Boolean surface (inside "!" and "[...]"): +(0) < ;(1) < !(2).
int kbprec(const BExpPtr& b) {
  switch (b->kind()) {
    case BKind::kOr:
      return 0;
    case BKind::kAnd:
      return 1;
    default:
      return 2;
  }
}

std::string render_kb(const BExpPtr& b, const Universe& u, int min_prec) {
  std::string out;
  bool parens = kbprec(b) < min_prec;
  if (parens) out += "(";
  switch (b->kind()) {
    case BKind::kZero:
      out += "0";
      break;
    case BKind::kOne:
      out += "1";
      break;
    case BKind::kTest:
      out += u.test_name(b->test());
      break;
    case BKind::kNot:
      out += "!" + render_kb(b->left(), u, 2);
      break;
    case BKind::kOr:
      // "+" and ";" chains associate left, like "or" and "and".
      out += render_kb(b->left(), u, 0) + " + " + render_kb(b->right(), u, 1);
      break;
    case BKind::kAnd:
      out += render_kb(b->left(), u, 1) + ";" + render_kb(b->right(), u, 2);
      break;
  }
  if (parens) out += ")";
  return out;
}

bool is_gkat_leaf(const GkatExpPtr& e) {
  return e->kind() == GKind::kTest || e->kind() == GKind::kAct;
}

std::string render_g(const GkatExpPtr& e, const Universe& u);

// Branch and loop bodies are braced unless they are single leaf statements,
// which keeps nesting unambiguous without a dangling-else rule.
std::string render_body(const GkatExpPtr& e, const Universe& u) {
  if (is_gkat_leaf(e)) return render_g(e, u);
  return "{ " + render_g(e, u) + " }";
}

std::string render_g(const GkatExpPtr& e, const Universe& u) {
  switch (e->kind()) {
    case GKind::kTest:
      switch (e->test()->kind()) {
        case BKind::kOne:
          return "skip";
        case BKind::kZero:
          return "fail";
        default:
          return "assert " + render_b(e->test(), u, 0);
      }
    case GKind::kAct:
      return u.action_name(e->action());
    case GKind::kBranch:
      return "if " + render_b(e->test(), u, 0) + " then " +
             render_body(e->left(), u) + " else " + render_body(e->right(), u);
    case GKind::kSeq: {
      // ";" associates right; a Seq in first position needs braces.
      std::string first = e->left()->kind() == GKind::kSeq
                              ? "{ " + render_g(e->left(), u) + " }"
                              : render_g(e->left(), u);
      return first + "; " + render_g(e->right(), u);
    }
    case GKind::kWhile:
      return "while " + render_b(e->test(), u, 0) + " do " +
             render_body(e->left(), u);
  }
  return "";
}

// Algebraic program surface. Precedence: +(0) < ;(1) < *(2) < atoms(3).
int kprec(const KatExpPtr& e) {
  switch (e->kind()) {
    case KKind::kPlus:
      return 0;
    case KKind::kSeq:
      return 1;
    case KKind::kStar:
      return 2;
    default:
      return 3;
  }
}

std::string render_k(const KatExpPtr& e, const Universe& u, int min_prec) {
  std::string out;
  bool parens = kprec(e) < min_prec;
  if (parens) out += "(";
  switch (e->kind()) {
    case KKind::kTest:
      switch (e->test()->kind()) {
        case BKind::kZero:
          out += "0";
          break;
        case BKind::kOne:
          out += "1";
          break;
        case BKind::kTest:
          out += u.test_name(e->test()->test());
          break;
        case BKind::kNot:
          out += "!" + render_kb(e->test()->left(), u, 2);
          break;
        default:
          // Compound tests have no bare form at expression level; "+" and
          // ";" there would parse as choice and composition of programs.
          out += "[" + render_kb(e->test(), u, 0) + "]";
          break;
      }
      break;
    case KKind::kAct:
      out += u.action_name(e->action());
      break;
    case KKind::kPlus:
      out += render_k(e->left(), u, 1) + " + " + render_k(e->right(), u, 0);
      break;
    case KKind::kSeq:
      out += render_k(e->left(), u, 2) + ";" + render_k(e->right(), u, 1);
      break;
    case KKind::kStar:
      out += render_k(e->left(), u, 2) + "*";
      break;
  }
  if (parens) out += ")";
  return out;
}

std::string render_header(const Universe& u) {
  std::string out = "tests:";
  for (const auto& t : u.tests()) out += " " + t;
  out += "\nactions:";
  for (const auto& a : u.actions()) out += " " + a;
  out += "\n";
  return out;
}

}  // namespace

std::string render(const BExpPtr& b, const Universe& u) {
  return render_b(b, u, 0);
}

std::string render(const GkatExpPtr& e, const Universe& u) {
  return render_g(e, u);
}

std::string render(const KatExpPtr& e, const Universe& u) {
  return render_k(e, u, 0);
}

std::string render_program(const GkatExpPtr& e, const Universe& u) {
  return render_header(u) + render(e, u) + "\n";
}

std::string render_program(const KatExpPtr& e, const Universe& u) {
  return render_header(u) + render(e, u) + "\n";
}

}  // namespace gkat
