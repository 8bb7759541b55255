#pragma once
// Formula AST.  Core connectives are atoms, ~, \/ with an independence set,
// and E (exists) with an independence set; A (forall), /\, -> and <-> are
// sugar.  Formulas are immutable value trees; every operation returns a new
// formula.  The variable count N is carried alongside the tree.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "ifg/independence.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"

namespace ifg {

enum class FKind { Atom, Neg, Or, And, Implies, Iff, Exists, Forall };

// A term inside an atom: a variable v_i or a named constant.
struct TermRef {
  bool is_var = false;
  int var = -1;
  std::string constant;

  bool operator==(const TermRef&) const = default;

  static TermRef v(int i) { return {true, i, ""}; }
  static TermRef c(std::string name) { return {false, -1, std::move(name)}; }

  std::string str() const { return is_var ? "v" + std::to_string(var) : constant; }
};

struct FNode {
  FKind kind = FKind::Atom;
  // Atom: equality (terms.size()==2) or a named relation.
  bool is_equality = true;
  std::string relation;
  std::vector<TermRef> terms;
  // Exists/Forall: bound variable.
  int var = -1;
  // independence set for Or/And/Implies/Iff/Exists/Forall
  VarSet jset = 0;
  std::vector<FNode> kids;

  bool operator==(const FNode&) const = default;
};

struct Formula {
  FNode root;
  int vars = 1;  // N

  bool operator==(const Formula&) const = default;
};

// ---- node factories ------------------------------------------------------

inline FNode atom_eq(TermRef a, TermRef b) {
  FNode n;
  n.kind = FKind::Atom;
  n.is_equality = true;
  n.terms = {std::move(a), std::move(b)};
  return n;
}

inline FNode atom_rel(std::string name, std::vector<TermRef> terms) {
  FNode n;
  n.kind = FKind::Atom;
  n.is_equality = false;
  n.relation = std::move(name);
  n.terms = std::move(terms);
  return n;
}

inline FNode neg(FNode kid) {
  FNode n;
  n.kind = FKind::Neg;
  n.kids.push_back(std::move(kid));
  return n;
}

inline FNode binary(FKind kind, FNode a, FNode b, VarSet jset) {
  FNode n;
  n.kind = kind;
  n.jset = jset;
  n.kids.push_back(std::move(a));
  n.kids.push_back(std::move(b));
  return n;
}

inline FNode or_(FNode a, FNode b, VarSet jset) { return binary(FKind::Or, std::move(a), std::move(b), jset); }
inline FNode and_(FNode a, FNode b, VarSet jset) { return binary(FKind::And, std::move(a), std::move(b), jset); }

inline FNode quantifier(FKind kind, int var, VarSet jset, FNode kid) {
  FNode n;
  n.kind = kind;
  n.var = var;
  n.jset = jset;
  n.kids.push_back(std::move(kid));
  return n;
}

inline FNode exists(int var, VarSet jset, FNode kid) { return quantifier(FKind::Exists, var, jset, std::move(kid)); }
inline FNode forall(int var, VarSet jset, FNode kid) { return quantifier(FKind::Forall, var, jset, std::move(kid)); }

// ---- inspection ----------------------------------------------------------

// 1 + max variable index used anywhere (atoms, binders, independence sets); 0 if none.
inline int min_vars(const FNode& n) {
  int need = 0;
  if (n.kind == FKind::Atom) {
    for (const TermRef& t : n.terms)
      if (t.is_var) need = std::max(need, t.var + 1);
  }
  if (n.var >= 0) need = std::max(need, n.var + 1);
  for (int i = 0; i < 32; ++i)
    if ((n.jset >> i) & 1) need = std::max(need, i + 1);
  for (const FNode& k : n.kids) need = std::max(need, min_vars(k));
  return need;
}

inline bool is_core(const FNode& n) {
  switch (n.kind) {
    case FKind::And:
    case FKind::Implies:
    case FKind::Iff:
    case FKind::Forall:
      return false;
    default:
      break;
  }
  for (const FNode& k : n.kids)
    if (!is_core(k)) return false;
  return true;
}

// ---- desugar -------------------------------------------------------------
//
//   ∀v/J ψ      = ¬∃v/J ¬ψ
//   φ ∧_J ψ     = ¬(¬φ ∨_J ¬ψ)
//   φ →_J ψ     = ¬φ ∨_J ψ
//   φ ↔_J ψ     = (φ →_J ψ) ∧_J (ψ →_J φ)

inline FNode desugar(const FNode& n) {
  std::vector<FNode> kids;
  kids.reserve(n.kids.size());
  for (const FNode& k : n.kids) kids.push_back(desugar(k));
  switch (n.kind) {
    case FKind::Forall:
      return neg(exists(n.var, n.jset, neg(std::move(kids[0]))));
    case FKind::And:
      return neg(or_(neg(std::move(kids[0])), neg(std::move(kids[1])), n.jset));
    case FKind::Implies:
      return or_(neg(std::move(kids[0])), std::move(kids[1]), n.jset);
    case FKind::Iff: {
      FNode fwd = or_(neg(kids[0]), kids[1], n.jset);
      FNode bwd = or_(neg(kids[1]), kids[0], n.jset);
      return neg(or_(neg(std::move(fwd)), neg(std::move(bwd)), n.jset));
    }
    default: {
      FNode out = n;
      out.kids = std::move(kids);
      return out;
    }
  }
}

inline Formula desugar(const Formula& f) { return {desugar(f.root), f.vars}; }

// ---- validation against a structure --------------------------------------

inline void validate(const FNode& n, const Structure& st, int vars) {
  if (n.kind == FKind::Atom) {
    for (const TermRef& t : n.terms) {
      if (t.is_var) {
        if (t.var < 0 || t.var >= vars)
          throw error("variable v" + std::to_string(t.var) + " out of range for N=" +
                      std::to_string(vars));
      } else if (!st.constants.count(t.constant)) {
        throw error("unknown constant '" + t.constant + "' in structure '" + st.name + "'");
      }
    }
    if (!n.is_equality) {
      auto it = st.relations.find(n.relation);
      if (it == st.relations.end())
        throw error("unknown relation '" + n.relation + "' in structure '" + st.name + "'");
      if (static_cast<int>(n.terms.size()) != it->second.arity)
        throw error("relation '" + n.relation + "' expects " + std::to_string(it->second.arity) +
                    " arguments, got " + std::to_string(n.terms.size()));
    }
  }
  if (n.var >= vars)
    throw error("bound variable v" + std::to_string(n.var) + " out of range for N=" +
                std::to_string(vars));
  if (n.jset >= (VarSet{1} << vars))
    throw error("independence set mentions a variable out of range for N=" + std::to_string(vars));
  for (const FNode& k : n.kids) validate(k, st, vars);
}

inline void validate(const Formula& f, const Structure& st) {
  if (f.vars < 1) throw error("formula needs at least one variable slot");
  validate(f.root, st, f.vars);
}

// ---- formulas from teams ---------------------------------------------------
//
// φ_ā : the /\_∅ chain  v_0 = c_{a_0} /\{} ... /\{} v_{N-1} = c_{a_{N-1}},
// φ_V : the \/{} chain of φ_ā over V's valuations ascending, and
// φ_∅ := ~(v0 = v0).
// Over a fully named structure, the meaning of φ_V is ⟨P(V), P(complement)⟩.

inline FNode valuation_formula(Dims d, std::uint32_t val, const Structure& st) {
  FNode out = atom_eq(TermRef::v(0), TermRef::c(st.constant_for(valuation_entry(d, val, 0))));
  for (int i = 1; i < d.vars; ++i)
    out = and_(std::move(out),
               atom_eq(TermRef::v(i), TermRef::c(st.constant_for(valuation_entry(d, val, i)))),
               0);
  return out;
}

inline Formula formula_for_team(const Team& v, const Structure& st) {
  if (!st.fully_named()) throw error("team formulas need a fully named structure");
  if (v.empty()) return {neg(atom_eq(TermRef::v(0), TermRef::v(0))), v.dims.vars};
  FNode out;
  bool first = true;
  for (std::uint32_t val : v.valuations()) {
    FNode piece = valuation_formula(v.dims, val, st);
    out = first ? std::move(piece) : or_(std::move(out), std::move(piece), 0);
    first = false;
  }
  return {std::move(out), v.dims.vars};
}

}  // namespace ifg
