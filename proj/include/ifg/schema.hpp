#pragma once
// Formula schemas and algebraic terms.
//
// A schema is a core formula skeleton over placeholders α_0..α_{k-1} plus
// equality atoms between variables; instantiating it with k formulas yields a
// formula.  Each schema induces an algebraic term: α_i becomes the term
// variable X_i, v_i = v_j becomes the diagonal D_ij, ¬ becomes complement,
// ∨_J becomes +_J and ∃v_n/J becomes the cylindrification C_{n,J}.

#include <string>
#include <vector>

#include "ifg/formula.hpp"

namespace ifg {

enum class SKind { FormulaVar, Equal, Neg, Or, Exists };

struct SNode {
  SKind kind = SKind::FormulaVar;
  int fvar = -1;     // FormulaVar index
  int vi = -1, vj = -1;  // Equal
  int var = -1;      // Exists
  VarSet jset = 0;   // Or/Exists
  std::vector<SNode> kids;

  bool operator==(const SNode&) const = default;
};

struct Schema {
  SNode root;
  int vars = 1;          // N
  int formula_vars = 0;  // k

  bool operator==(const Schema&) const = default;
};

inline SNode s_fvar(int i) {
  SNode n;
  n.kind = SKind::FormulaVar;
  n.fvar = i;
  return n;
}
inline SNode s_eq(int vi, int vj) {
  SNode n;
  n.kind = SKind::Equal;
  n.vi = vi;
  n.vj = vj;
  return n;
}
inline SNode s_neg(SNode kid) {
  SNode n;
  n.kind = SKind::Neg;
  n.kids.push_back(std::move(kid));
  return n;
}
inline SNode s_or(SNode a, SNode b, VarSet jset) {
  SNode n;
  n.kind = SKind::Or;
  n.jset = jset;
  n.kids.push_back(std::move(a));
  n.kids.push_back(std::move(b));
  return n;
}
inline SNode s_exists(int var, VarSet jset, SNode kid) {
  SNode n;
  n.kind = SKind::Exists;
  n.var = var;
  n.jset = jset;
  n.kids.push_back(std::move(kid));
  return n;
}

namespace detail {
inline FNode instantiate_node(const SNode& n, const std::vector<Formula>& fs) {
  switch (n.kind) {
    case SKind::FormulaVar:
      return fs[n.fvar].root;
    case SKind::Equal:
      return atom_eq(TermRef::v(n.vi), TermRef::v(n.vj));
    case SKind::Neg:
      return neg(instantiate_node(n.kids[0], fs));
    case SKind::Or:
      return or_(instantiate_node(n.kids[0], fs), instantiate_node(n.kids[1], fs), n.jset);
    case SKind::Exists:
      return exists(n.var, n.jset, instantiate_node(n.kids[0], fs));
  }
  return {};
}
}  // namespace detail

inline Formula instantiate(const Schema& s, const std::vector<Formula>& fs) {
  if (static_cast<int>(fs.size()) != s.formula_vars)
    throw error("schema expects " + std::to_string(s.formula_vars) + " formulas, got " +
                std::to_string(fs.size()));
  for (const Formula& f : fs)
    if (f.vars != s.vars)
      throw error("schema has N=" + std::to_string(s.vars) + " but an argument has N=" +
                  std::to_string(f.vars));
  return {detail::instantiate_node(s.root, fs), s.vars};
}

// ---- algebraic terms -------------------------------------------------------

enum class TKind { Var, Diag, Neg, Plus, Times, Cyl };

struct TNode {
  TKind kind = TKind::Var;
  int tvar = -1;     // Var index
  int di = -1, dj = -1;  // Diag
  int var = -1;      // Cyl
  VarSet jset = 0;   // Plus/Times/Cyl
  std::vector<TNode> kids;

  bool operator==(const TNode&) const = default;
};

struct Term {
  TNode root;
  int term_vars = 0;  // number of X_i slots

  bool operator==(const Term&) const = default;
};

inline TNode t_var(int i) {
  TNode n;
  n.kind = TKind::Var;
  n.tvar = i;
  return n;
}
inline TNode t_diag(int i, int j) {
  TNode n;
  n.kind = TKind::Diag;
  n.di = i;
  n.dj = j;
  return n;
}
inline TNode t_neg(TNode kid) {
  TNode n;
  n.kind = TKind::Neg;
  n.kids.push_back(std::move(kid));
  return n;
}
inline TNode t_binary(TKind kind, TNode a, TNode b, VarSet jset) {
  TNode n;
  n.kind = kind;
  n.jset = jset;
  n.kids.push_back(std::move(a));
  n.kids.push_back(std::move(b));
  return n;
}
inline TNode t_plus(TNode a, TNode b, VarSet jset) { return t_binary(TKind::Plus, std::move(a), std::move(b), jset); }
inline TNode t_times(TNode a, TNode b, VarSet jset) { return t_binary(TKind::Times, std::move(a), std::move(b), jset); }
inline TNode t_cyl(int var, VarSet jset, TNode kid) {
  TNode n;
  n.kind = TKind::Cyl;
  n.var = var;
  n.jset = jset;
  n.kids.push_back(std::move(kid));
  return n;
}

namespace detail {
inline TNode schema_term_node(const SNode& n) {
  switch (n.kind) {
    case SKind::FormulaVar:
      return t_var(n.fvar);
    case SKind::Equal:
      return t_diag(n.vi, n.vj);
    case SKind::Neg:
      return t_neg(schema_term_node(n.kids[0]));
    case SKind::Or:
      return t_plus(schema_term_node(n.kids[0]), schema_term_node(n.kids[1]), n.jset);
    case SKind::Exists:
      return t_cyl(n.var, n.jset, schema_term_node(n.kids[0]));
  }
  return {};
}
}  // namespace detail

inline Term schema_to_term(const Schema& s) {
  return {detail::schema_term_node(s.root), s.formula_vars};
}

inline std::string pretty_term(const TNode& n) {
  auto jset_str = [](VarSet j) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
      if ((j >> i) & 1) {
        if (!first) s += ",";
        first = false;
        s += std::to_string(i);
      }
    return s + "}";
  };
  switch (n.kind) {
    case TKind::Var:
      return "X" + std::to_string(n.tvar);
    case TKind::Diag:
      return "D" + std::to_string(n.di) + std::to_string(n.dj);
    case TKind::Neg:
      return "~" + pretty_term(n.kids[0]);
    case TKind::Plus:
      return "(" + pretty_term(n.kids[0]) + " +" + jset_str(n.jset) + " " +
             pretty_term(n.kids[1]) + ")";
    case TKind::Times:
      return "(" + pretty_term(n.kids[0]) + " *" + jset_str(n.jset) + " " +
             pretty_term(n.kids[1]) + ")";
    case TKind::Cyl:
      return "C(" + std::to_string(n.var) + "," + jset_str(n.jset) + ")" + pretty_term(n.kids[0]);
  }
  return "";
}

inline std::string pretty_term(const Term& t) { return pretty_term(t.root); }

}  // namespace ifg
