#pragma once
// Concrete syntax.
//
//   formula  := 'E' var iset formula          existential, e.g.  E v1/{v0} ...
//             | 'A' var iset formula          universal
//             | '~' formula                   negation
//             | '(' formula [binop formula] ')'
//             | atom
//   binop    := ('\/' | '/\' | '->' | '<->') iset
//   iset     := ['/'] '{' [item (',' item)*] '}'     items: 'v0' or bare '0'
//   atom     := term '=' term | term '!=' term | ident '(' term {',' term} ')'
//   term     := 'v' digits | ident
//
// t != t' is sugar for ~(t = t').  Canonical printing uses v-names in
// independence sets, '\/{...}' and '/\{...}' for the lattice connectives, and
// '->/{...}', '<->/{...}' and 'E v1/{v0}' for the slashed forms.

#include <cctype>
#include <string>

#include "ifg/formula.hpp"

namespace ifg {

namespace detail {

struct Cursor {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  bool lookahead(const char* s) {
    skip_ws();
    std::size_t n = std::char_traits<char>::length(s);
    return text.compare(pos, n, s) == 0;
  }
  bool eat(const char* s) {
    if (!lookahead(s)) return false;
    pos += std::char_traits<char>::length(s);
    return true;
  }
  void expect(const char* s, const char* what) {
    if (!eat(s)) throw parse_error(std::string("expected ") + what, pos);
  }
  int digits() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw parse_error("expected a number", pos);
    int n = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      n = n * 10 + (text[pos++] - '0');
    return n;
  }
  std::string ident() {
    skip_ws();
    std::string s;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      s += text[pos++];
    if (s.empty()) throw parse_error("expected an identifier", pos);
    return s;
  }
};

inline VarSet parse_iset(Cursor& c) {
  c.eat("/");  // optional slash before the braces
  c.expect("{", "'{' opening an independence set");
  VarSet j = 0;
  if (!c.eat("}")) {
    for (;;) {
      c.skip_ws();
      if (c.pos < c.text.size() && c.text[c.pos] == 'v') ++c.pos;
      int idx = c.digits();
      if (idx >= 32) throw parse_error("variable index too large", c.pos);
      j |= VarSet{1} << idx;
      if (c.eat("}")) break;
      c.expect(",", "',' or '}' in an independence set");
    }
  }
  return j;
}

inline TermRef parse_term(Cursor& c) {
  c.skip_ws();
  if (c.pos < c.text.size() && c.text[c.pos] == 'v' && c.pos + 1 < c.text.size() &&
      std::isdigit(static_cast<unsigned char>(c.text[c.pos + 1]))) {
    ++c.pos;
    return TermRef::v(c.digits());
  }
  return TermRef::c(c.ident());
}

inline FNode parse_formula(Cursor& c);

inline FNode parse_atom(Cursor& c) {
  TermRef lhs = parse_term(c);
  if (!lhs.is_var && c.peek() == '(') {
    // relation atom R(t, ...)
    c.expect("(", "'('");
    std::vector<TermRef> args;
    args.push_back(parse_term(c));
    while (c.eat(",")) args.push_back(parse_term(c));
    c.expect(")", "')' closing a relation atom");
    return atom_rel(lhs.constant, std::move(args));
  }
  if (c.eat("!=")) return neg(atom_eq(std::move(lhs), parse_term(c)));
  c.expect("=", "'=' or '!=' in an atom");
  return atom_eq(std::move(lhs), parse_term(c));
}

inline FNode parse_formula(Cursor& c) {
  c.skip_ws();
  if (c.pos >= c.text.size()) throw parse_error("unexpected end of formula", c.pos);
  char ch = c.text[c.pos];

  // quantifiers: E/A must be followed by a variable
  if ((ch == 'E' || ch == 'A') && c.pos + 1 < c.text.size()) {
    std::size_t save = c.pos;
    ++c.pos;
    c.skip_ws();
    if (c.pos < c.text.size() && c.text[c.pos] == 'v' && c.pos + 1 < c.text.size() &&
        std::isdigit(static_cast<unsigned char>(c.text[c.pos + 1]))) {
      ++c.pos;
      int var = c.digits();
      VarSet j = parse_iset(c);
      FNode body = parse_formula(c);
      return quantifier(ch == 'E' ? FKind::Exists : FKind::Forall, var, j, std::move(body));
    }
    c.pos = save;  // not a quantifier; fall through to atom (e.g. a constant named E...)
  }

  if (ch == '~') {
    ++c.pos;
    return neg(parse_formula(c));
  }

  if (ch == '(') {
    ++c.pos;
    FNode lhs = parse_formula(c);
    c.skip_ws();
    FKind kind;
    if (c.eat("\\/")) kind = FKind::Or;
    else if (c.eat("/\\")) kind = FKind::And;
    else if (c.eat("<->")) kind = FKind::Iff;
    else if (c.eat("->")) kind = FKind::Implies;
    else {
      c.expect(")", "a binary connective or ')'");
      return lhs;
    }
    VarSet j = parse_iset(c);
    FNode rhs = parse_formula(c);
    c.expect(")", "')' closing a binary connective");
    return binary(kind, std::move(lhs), std::move(rhs), j);
  }

  return parse_atom(c);
}

inline std::string iset_to_string(VarSet j) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if ((j >> i) & 1) {
      if (!first) s += ", ";
      first = false;
      s += "v" + std::to_string(i);
    }
  return s + "}";
}

inline std::string pretty_node(const FNode& n) {
  switch (n.kind) {
    case FKind::Atom: {
      if (n.is_equality) return n.terms[0].str() + " = " + n.terms[1].str();
      std::string s = n.relation + "(";
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) s += ", ";
        s += n.terms[i].str();
      }
      return s + ")";
    }
    case FKind::Neg: {
      const FNode& k = n.kids[0];
      if (k.kind == FKind::Atom) return "~ (" + pretty_node(k) + ")";
      return "~ " + pretty_node(k);
    }
    case FKind::Or:
      return "(" + pretty_node(n.kids[0]) + " \\/" + iset_to_string(n.jset) + " " +
             pretty_node(n.kids[1]) + ")";
    case FKind::And:
      return "(" + pretty_node(n.kids[0]) + " /\\" + iset_to_string(n.jset) + " " +
             pretty_node(n.kids[1]) + ")";
    case FKind::Implies:
      return "(" + pretty_node(n.kids[0]) + " ->/" + iset_to_string(n.jset) + " " +
             pretty_node(n.kids[1]) + ")";
    case FKind::Iff:
      return "(" + pretty_node(n.kids[0]) + " <->/" + iset_to_string(n.jset) + " " +
             pretty_node(n.kids[1]) + ")";
    case FKind::Exists:
    case FKind::Forall:
      return std::string(n.kind == FKind::Exists ? "E" : "A") + " v" + std::to_string(n.var) +
             "/" + iset_to_string(n.jset) + " " + pretty_node(n.kids[0]);
  }
  return "";
}

}  // namespace detail

// Parses a formula.  N defaults to 1 + the maximum variable index appearing
// anywhere in it (minimum 1); a positive `vars` overrides upward.
inline Formula parse(const std::string& text, int vars = 0) {
  detail::Cursor c{text};
  FNode root = detail::parse_formula(c);
  if (!c.at_end()) throw parse_error("trailing input after formula", c.pos);
  int need = std::max(1, min_vars(root));
  if (vars > 0 && vars < need)
    throw error("formula uses v" + std::to_string(need - 1) + " but N=" + std::to_string(vars));
  return {std::move(root), vars > 0 ? vars : need};
}

inline std::string pretty(const Formula& f) { return detail::pretty_node(f.root); }

}  // namespace ifg
