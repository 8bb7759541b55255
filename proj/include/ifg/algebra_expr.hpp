#pragma once
// Expression language over a fixed algebra of team-family pairs, for the
// command line:
//
//   expr    := product ('+' jset? product)*
//   product := unary ('*' jset? unary)*
//   unary   := '~' unary | 'C' '(' var ',' jset ')' unary | primary
//   primary := '(' expr ')' | 'D' '(' var ',' var ')' | '[[' formula ']]' | name
//   jset    := '{' (index (',' index)*)? '}'        index := 0 | v0 | ...
//
// '*' binds tighter than '+', both associate left, and a bare join or meet
// defaults to the fully hidden split J = ∅.  Names come from the catalog
// ("B", "~A", "Omega", ...); '[[φ]]' is the meaning of φ over the structure
// in scope.  Everything is evaluated on the fly; there is no expression AST.

#include <cctype>
#include <string>

#include "ifg/algebra.hpp"
#include "ifg/catalog.hpp"
#include "ifg/parser.hpp"
#include "ifg/semantics.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct ExprContext {
  Dims dims;
  const Catalog* catalog = nullptr;      // named elements, optional
  const Structure* structure = nullptr;  // needed only for [[φ]]
};

namespace detail {

class ExprCursor {
 public:
  ExprCursor(const std::string& text, const ExprContext& ctx) : text_(text), ctx_(ctx) {}

  AlgebraElement parse() {
    AlgebraElement x = sum();
    skip_ws();
    if (pos_ < text_.size()) fail("trailing input");
    return x;
  }

 private:
  AlgebraElement sum() {
    AlgebraElement x = product();
    while (peek() == '+') {
      ++pos_;
      VarSet j = jset_or_empty();
      x = plus(x, product(), j);
    }
    return x;
  }

  AlgebraElement product() {
    AlgebraElement x = unary();
    while (peek() == '*') {
      ++pos_;
      VarSet j = jset_or_empty();
      x = times(x, unary(), j);
    }
    return x;
  }

  AlgebraElement unary() {
    if (peek() == '~') {
      ++pos_;
      return neg(unary());
    }
    std::size_t mark = pos_;
    std::string word = peek_word();
    if (word == "C" && peek_past_word() == '(') {
      pos_ = mark;
      skip_ws();
      pos_ += 1;  // C
      expect('(');
      int var = index();
      expect(',');
      VarSet j = jset();
      expect(')');
      return cyl(var, j, unary());
    }
    return primary();
  }

  AlgebraElement primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("expected an element");
    if (text_[pos_] == '(') {
      ++pos_;
      AlgebraElement x = sum();
      expect(')');
      return x;
    }
    if (text_.compare(pos_, 2, "[[") == 0) return meaning_block();
    std::string word = take_word();
    if (word.empty()) fail("expected an element");
    if (word == "D" && peek() == '(') {
      ++pos_;
      int i = index();
      expect(',');
      int j = index();
      expect(')');
      return diag(ctx_.dims, i, j);
    }
    if (ctx_.catalog)
      if (const AlgebraElement* x = ctx_.catalog->find(word)) return *x;
    fail("unknown element '" + word + "'");
  }

  AlgebraElement meaning_block() {
    pos_ += 2;
    std::size_t close = text_.find("]]", pos_);
    if (close == std::string::npos) fail("unterminated [[");
    std::string body = text_.substr(pos_, close - pos_);
    pos_ = close + 2;
    if (!ctx_.structure) fail("no structure in scope for [[...]]");
    AlgebraElement x = meaning(ifg::parse(body, ctx_.dims.vars), *ctx_.structure);
    if (x.dims() != ctx_.dims)
      fail("the formula needs more variables than the session provides");
    return x;
  }

  // ---- lexing ----

  VarSet jset_or_empty() {
    skip_ws();
    return peek() == '{' ? jset() : 0;
  }

  VarSet jset() {
    expect('{');
    VarSet j = 0;
    skip_ws();
    while (peek() != '}') {
      j |= VarSet{1} << index();
      skip_ws();
      if (peek() == ',') ++pos_;
    }
    ++pos_;  // }
    return j;
  }

  int index() {
    skip_ws();
    if (peek() == 'v') ++pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      fail("expected a variable index");
    int n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      n = n * 10 + (text_[pos_++] - '0');
    if (n >= ctx_.dims.vars) fail("variable v" + std::to_string(n) + " is out of range");
    return n;
  }

  std::string take_word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string peek_word() {
    std::size_t save = pos_;
    std::string w = take_word();
    pos_ = save;
    return w;
  }

  char peek_past_word() {
    std::size_t save = pos_;
    take_word();
    skip_ws();
    char c = pos_ < text_.size() ? text_[pos_] : '\0';
    pos_ = save;
    return c;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }

  const std::string& text_;
  const ExprContext& ctx_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline AlgebraElement parse_algebra_expr(const std::string& text, const ExprContext& ctx) {
  return detail::ExprCursor(text, ctx).parse();
}

}  // namespace ifg
