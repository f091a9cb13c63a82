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

#include "gkat/parse.hpp"

#include <cctype>
#include <string>
#include <unordered_set>
#include <vector>

#include "gkat/errors.hpp"

namespace gkat {
namespace {

enum class Tok : std::uint8_t {
  kIdent,
  kZero,
  kOne,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kSemi,
  kPlus,
  kStar,
  kBang,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

const std::unordered_set<std::string>& keywords() {
  static const std::unordered_set<std::string> kw = {
      "skip", "fail", "assert", "if",  "then", "else",
      "while", "do",  "not",    "and", "or"};
  return kw;
}

// The two header lines are line-delimited, so they are split off textually
// before the token stream (which discards newlines) is built.
struct Header {
  std::vector<std::string> tests;
  std::vector<std::string> actions;
  std::string_view body;
  std::size_t body_first_line;  // 1-based line number of the body's start
};

bool valid_ident(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

Header split_header(std::string_view text) {
  Header h;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  int parsed = 0;  // header lines consumed so far
  while (pos <= text.size() && parsed < 2) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    ++line_no;
    std::size_t next = eol == std::string_view::npos ? text.size() + 1
                                                     : eol + 1;
    std::string_view content = line.substr(0, line.find('#'));
    while (!content.empty() && (content.back() == ' ' ||
                                content.back() == '\t' ||
                                content.back() == '\r')) {
      content.remove_suffix(1);
    }
    std::size_t indent = 0;
    while (indent < content.size() &&
           (content[indent] == ' ' || content[indent] == '\t')) {
      ++indent;
    }
    content.remove_prefix(indent);
    if (content.empty()) {
      pos = next;
      continue;
    }
    const std::string_view label = parsed == 0 ? "tests" : "actions";
    if (content.substr(0, label.size()) != label ||
        content.size() == label.size() ||
        content[label.size()] != ':') {
      throw ParseError("expected '" + std::string(label) + ":' header line",
                       line_no, indent + 1);
    }
    std::string_view rest = content.substr(label.size() + 1);
    std::vector<std::string>& names = parsed == 0 ? h.tests : h.actions;
    std::size_t i = 0;
    while (i < rest.size()) {
      if (rest[i] == ' ' || rest[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t start = i;
      while (i < rest.size() && rest[i] != ' ' && rest[i] != '\t') ++i;
      std::string name(rest.substr(start, i - start));
      std::size_t col = indent + label.size() + 2 + start;
      if (!valid_ident(name)) {
        throw ParseError("invalid symbol name '" + name + "'", line_no, col);
      }
      if (keywords().count(name) != 0) {
        throw ParseError("'" + name + "' is a reserved word", line_no, col);
      }
      names.push_back(std::move(name));
    }
    ++parsed;
    pos = next;
  }
  if (parsed < 2) {
    throw ParseError(parsed == 0 ? "expected 'tests:' header line"
                                 : "expected 'actions:' header line",
                     line_no + 1, 1);
  }
  h.body = pos <= text.size() ? text.substr(pos) : std::string_view{};
  h.body_first_line = line_no + 1;
  return h;
}

class Lexer {
 public:
  Lexer(std::string_view text, std::size_t first_line)
      : text_(text), line_(first_line) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
        continue;
      }
      std::size_t line = line_, col = col_;
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::string ident;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                text_[pos_] == '_')) {
          ident += text_[pos_];
          advance();
        }
        out.push_back({Tok::kIdent, std::move(ident), line, col});
        continue;
      }
      switch (c) {
        case '0':
          out.push_back({Tok::kZero, "0", line, col});
          break;
        case '1':
          out.push_back({Tok::kOne, "1", line, col});
          break;
        case '(':
          out.push_back({Tok::kLParen, "(", line, col});
          break;
        case ')':
          out.push_back({Tok::kRParen, ")", line, col});
          break;
        case '{':
          out.push_back({Tok::kLBrace, "{", line, col});
          break;
        case '}':
          out.push_back({Tok::kRBrace, "}", line, col});
          break;
        case '[':
          out.push_back({Tok::kLBracket, "[", line, col});
          break;
        case ']':
          out.push_back({Tok::kRBracket, "]", line, col});
          break;
        case ';':
          out.push_back({Tok::kSemi, ";", line, col});
          break;
        case '+':
          out.push_back({Tok::kPlus, "+", line, col});
          break;
        case '*':
          out.push_back({Tok::kStar, "*", line, col});
          break;
        case '!':
          out.push_back({Tok::kBang, "!", line, col});
          break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'",
                           line, col);
      }
      advance();
    }
    out.push_back({Tok::kEnd, "", line_, col_});
    return out;
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t max_tests) {
    Header h = split_header(text);
    tokens_ = Lexer(h.body, h.body_first_line).run();
    universe_ = std::make_shared<const Universe>(
        std::move(h.tests), std::move(h.actions), max_tests);
  }

  GkatExpPtr gkat_program() {
    GkatExpPtr e = parse_prog();
    expect(Tok::kEnd, "end of input");
    return e;
  }

  KatExpPtr kat_program() {
    KatExpPtr e = parse_kat_expr();
    expect(Tok::kEnd, "end of input");
    return e;
  }

  UniversePtr universe() const { return universe_; }

 private:
  const Token& peek() const { return tokens_[idx_]; }
  const Token& get() { return tokens_[idx_++]; }
  bool at(Tok k) const { return peek().kind == k; }

  bool accept(Tok k) {
    if (!at(k)) return false;
    ++idx_;
    return true;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseError(msg + ", got " + got, t.line, t.col);
  }

  void expect(Tok k, const std::string& what) {
    if (!accept(k)) fail("expected " + what);
  }

  // --- .gkat surface -------------------------------------------------------

  GkatExpPtr parse_prog() {
    GkatExpPtr first = parse_stmt();
    if (!accept(Tok::kSemi)) return first;
    return g_seq(std::move(first), parse_prog());
  }

  GkatExpPtr parse_block() {
    if (accept(Tok::kLBrace)) {
      GkatExpPtr e = parse_prog();
      expect(Tok::kRBrace, "'}'");
      return e;
    }
    return parse_stmt();
  }

  GkatExpPtr parse_stmt() {
    if (at(Tok::kLBrace)) return parse_block();
    if (!at(Tok::kIdent)) fail("expected a statement");
    const Token& t = peek();
    if (t.text == "skip") {
      get();
      return g_skip();
    }
    if (t.text == "fail") {
      get();
      return g_fail();
    }
    if (t.text == "assert") {
      get();
      return g_test(parse_bexp());
    }
    if (t.text == "if") {
      get();
      BExpPtr guard = parse_bexp();
      expect_keyword("then");
      GkatExpPtr then_branch = parse_block();
      expect_keyword("else");
      GkatExpPtr else_branch = parse_block();
      return g_branch(std::move(guard), std::move(then_branch),
                      std::move(else_branch));
    }
    if (t.text == "while") {
      get();
      BExpPtr guard = parse_bexp();
      expect_keyword("do");
      return g_while(std::move(guard), parse_block());
    }
    if (keywords().count(t.text) != 0) fail("expected a statement");
    auto action = universe_->action_id(t.text);
    if (action) {
      get();
      return g_act(*action);
    }
    if (universe_->test_id(t.text)) {
      throw ParseError("test '" + t.text +
                           "' used as a statement; write 'assert " + t.text +
                           "'",
                       t.line, t.col);
    }
    throw ParseError("undeclared symbol '" + t.text + "'", t.line, t.col);
  }

  void expect_keyword(const std::string& kw) {
    if (!at(Tok::kIdent) || peek().text != kw) fail("expected '" + kw + "'");
    get();
  }

  // Boolean expressions in the imperative surface: or / and / not.
  BExpPtr parse_bexp() {
    BExpPtr e = parse_bterm();
    while (at(Tok::kIdent) && peek().text == "or") {
      get();
      e = b_or(std::move(e), parse_bterm());
    }
    return e;
  }

  BExpPtr parse_bterm() {
    BExpPtr e = parse_bfact();
    while (at(Tok::kIdent) && peek().text == "and") {
      get();
      e = b_and(std::move(e), parse_bfact());
    }
    return e;
  }

  BExpPtr parse_bfact() {
    if (accept(Tok::kBang)) return b_not(parse_bfact());
    if (at(Tok::kIdent) && peek().text == "not") {
      get();
      return b_not(parse_bfact());
    }
    if (accept(Tok::kZero)) return b_zero();
    if (accept(Tok::kOne)) return b_one();
    if (accept(Tok::kLParen)) {
      BExpPtr e = parse_bexp();
      expect(Tok::kRParen, "')'");
      return e;
    }
    if (at(Tok::kIdent)) {
      const Token& t = peek();
      if (keywords().count(t.text) != 0) fail("expected a test");
      auto test = universe_->test_id(t.text);
      if (!test) {
        if (universe_->action_id(t.text)) {
          throw ParseError("action '" + t.text + "' used as a test", t.line,
                           t.col);
        }
        throw ParseError("undeclared symbol '" + t.text + "'", t.line, t.col);
      }
      get();
      return b_test(*test);
    }
    fail("expected a test");
  }

  // --- .kat surface --------------------------------------------------------

  KatExpPtr parse_kat_expr() {
    KatExpPtr first = parse_kat_term();
    if (!accept(Tok::kPlus)) return first;
    return k_plus(std::move(first), parse_kat_expr());
  }

  KatExpPtr parse_kat_term() {
    KatExpPtr first = parse_kat_factor();
    if (!accept(Tok::kSemi)) return first;
    return k_seq(std::move(first), parse_kat_term());
  }

  KatExpPtr parse_kat_factor() {
    KatExpPtr e = parse_kat_atom();
    while (accept(Tok::kStar)) e = k_star(std::move(e));
    return e;
  }

  KatExpPtr parse_kat_atom() {
    if (accept(Tok::kZero)) return k_zero();
    if (accept(Tok::kOne)) return k_one();
    if (accept(Tok::kBang)) return k_test(b_not(parse_kat_bfact()));
    if (accept(Tok::kLBracket)) {
      BExpPtr b = parse_kat_bexp();
      expect(Tok::kRBracket, "']'");
      return k_test(std::move(b));
    }
    if (accept(Tok::kLParen)) {
      KatExpPtr e = parse_kat_expr();
      expect(Tok::kRParen, "')'");
      return e;
    }
    if (at(Tok::kIdent)) {
      const Token& t = peek();
      if (keywords().count(t.text) != 0) fail("expected an expression");
      if (auto test = universe_->test_id(t.text)) {
        get();
        return k_test(b_test(*test));
      }
      if (auto action = universe_->action_id(t.text)) {
        get();
        return k_act(*action);
      }
      throw ParseError("undeclared symbol '" + t.text + "'", t.line, t.col);
    }
    fail("expected an expression");
  }

  // Boolean expressions in the algebraic surface: + ; ! over tests.
  BExpPtr parse_kat_bexp() {
    BExpPtr e = parse_kat_bterm();
    while (accept(Tok::kPlus)) e = b_or(std::move(e), parse_kat_bterm());
    return e;
  }

  BExpPtr parse_kat_bterm() {
    BExpPtr e = parse_kat_bfact();
    while (accept(Tok::kSemi)) e = b_and(std::move(e), parse_kat_bfact());
    return e;
  }

  BExpPtr parse_kat_bfact() {
    if (accept(Tok::kBang)) return b_not(parse_kat_bfact());
    if (accept(Tok::kZero)) return b_zero();
    if (accept(Tok::kOne)) return b_one();
    if (accept(Tok::kLParen)) {
      BExpPtr e = parse_kat_bexp();
      expect(Tok::kRParen, "')'");
      return e;
    }
    if (at(Tok::kIdent)) {
      const Token& t = peek();
      if (keywords().count(t.text) != 0) fail("expected a test");
      auto test = universe_->test_id(t.text);
      if (!test) {
        if (universe_->action_id(t.text)) {
          throw ParseError("action '" + t.text +
                               "' used inside a Boolean expression",
                           t.line, t.col);
        }
        throw ParseError("undeclared symbol '" + t.text + "'", t.line, t.col);
      }
      get();
      return b_test(*test);
    }
    fail("expected a test");
  }

  std::vector<Token> tokens_;
  std::size_t idx_ = 0;
  UniversePtr universe_;
};

}  // namespace

GkatProgram parse_gkat(std::string_view text, std::size_t max_tests) {
  Parser p(text, max_tests);
  GkatExpPtr e = p.gkat_program();
  return {p.universe(), std::move(e)};
}

KatProgram parse_kat(std::string_view text, std::size_t max_tests) {
  Parser p(text, max_tests);
  KatExpPtr e = p.kat_program();
  return {p.universe(), std::move(e)};
}

}  // namespace gkat
