#pragma once
// Team (trump) semantics.  Satisfaction is two-sided and relative to a team
// of valuations:
//
//   ⊨+ atom [V]        every valuation in V satisfies it pointwise
//   ⊨− atom [W]        no valuation in W satisfies it
//   ⊨± ¬ψ [V]          ⊨∓ ψ [V]
//   ⊨+ ψ1 ∨_J ψ2 [V]   some J-saturated disjoint cover V = V1 ∪ V2 has
//                      ⊨+ ψ1 [V1] and ⊨+ ψ2 [V2]
//   ⊨− ψ1 ∨_J ψ2 [W]   ⊨− ψ1 [W] and ⊨− ψ2 [W]
//   ⊨+ ∃v_n/J ψ [V]    ⊨+ ψ [V(n:f)] for some choice f independent of J
//   ⊨− ∃v_n/J ψ [W]    ⊨− ψ [W(n:A)]
//
// The empty team satisfies every formula both ways.  The meaning of a
// formula is the double suit ⟨trumps, cotrumps⟩; evaluation memoizes on
// (subformula, team, sign) so computing a whole meaning shares work across
// the team lattice.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/formula.hpp"
#include "ifg/independence.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"

namespace ifg {

namespace detail {

inline int term_value(const TermRef& t, const Structure& st, Dims d, std::uint32_t val) {
  if (t.is_var) return valuation_entry(d, val, t.var);
  auto it = st.constants.find(t.constant);
  if (it == st.constants.end()) throw error("unknown constant " + t.constant);
  return it->second;
}

inline bool atom_holds(const FNode& n, const Structure& st, Dims d, std::uint32_t val) {
  if (n.is_equality)
    return term_value(n.terms[0], st, d, val) == term_value(n.terms[1], st, d, val);
  auto it = st.relations.find(n.relation);
  if (it == st.relations.end()) throw error("unknown relation " + n.relation);
  std::vector<int> tuple;
  tuple.reserve(n.terms.size());
  for (const TermRef& t : n.terms) tuple.push_back(term_value(t, st, d, val));
  return it->second.tuples.count(tuple) > 0;
}

}  // namespace detail

class Evaluator {
 public:
  Evaluator(const Formula& f, const Structure& st)
      : formula_(desugar(f)), structure_(st), dims_{st.universe, formula_.vars} {
    validate(formula_, structure_);
  }

  Dims dims() const { return dims_; }

  bool plus(const Team& v) { return eval(formula_.root, v.bits, true); }
  bool minus(const Team& w) { return eval(formula_.root, w.bits, false); }

  // the double suit ⟨trumps, cotrumps⟩ over all teams
  AlgebraElement meaning(int guard = limits::meaning_valuations) {
    dims_.check_family_guard(guard);
    TeamFamily p(dims_), m(dims_);
    for (std::uint32_t t = 0; t < dims_.teams(); ++t) {
      if (eval(formula_.root, t, true)) p.set(t);
      if (eval(formula_.root, t, false)) m.set(t);
    }
    return {p, m};
  }

 private:
  struct Key {
    const FNode* node;
    std::uint32_t team;
    bool sign;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = reinterpret_cast<std::uintptr_t>(k.node);
      h ^= (std::size_t{k.team} << 1) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      return h ^ (k.sign ? 0x5555555555555555ull : 0);
    }
  };

  bool eval(const FNode& n, std::uint32_t team, bool sign) {
    if (team == 0) return true;
    Key key{&n, team, sign};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool result = false;
    switch (n.kind) {
      case FKind::Atom: {
        result = true;
        for (std::uint32_t val : Team{dims_, team}.valuations()) {
          if (detail::atom_holds(n, structure_, dims_, val) != sign) {
            result = false;
            break;
          }
        }
        break;
      }
      case FKind::Neg:
        result = eval(n.kids[0], team, !sign);
        break;
      case FKind::Or: {
        if (sign) {
          for_each_saturated_cover(Team{dims_, team}, n.jset, [&](Team v1, Team v2) {
            if (eval(n.kids[0], v1.bits, true) && eval(n.kids[1], v2.bits, true)) {
              result = true;
              return false;  // stop
            }
            return true;
          });
        } else {
          result = eval(n.kids[0], team, false) && eval(n.kids[1], team, false);
        }
        break;
      }
      case FKind::Exists: {
        if (sign) {
          for_each_independent_choice(Team{dims_, team}, n.jset, [&](const ChoiceFunction& f) {
            if (eval(n.kids[0], substitute(Team{dims_, team}, n.var, f).bits, true)) {
              result = true;
              return false;
            }
            return true;
          });
        } else {
          result = eval(n.kids[0], expand(Team{dims_, team}, n.var).bits, false);
        }
        break;
      }
      default:
        throw error("evaluator expects a desugared formula");
    }
    memo_.emplace(key, result);
    return result;
  }

  Formula formula_;
  Structure structure_;
  Dims dims_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

inline AlgebraElement meaning(const Formula& f, const Structure& st,
                              int guard = limits::meaning_valuations) {
  Evaluator e(f, st);
  return e.meaning(guard);
}

// Truth of a formula evaluated over the team of all valuations.
enum class SentenceStatus { True, False, Undetermined };

inline SentenceStatus sentence_status(const Formula& f, const Structure& st) {
  Evaluator e(f, st);
  Dims d = e.dims();
  d.check_eval_guard();
  Team full = Team::full(d);
  if (e.plus(full)) return SentenceStatus::True;
  if (e.minus(full)) return SentenceStatus::False;
  return SentenceStatus::Undetermined;
}

inline std::string to_string(SentenceStatus s) {
  switch (s) {
    case SentenceStatus::True: return "true";
    case SentenceStatus::False: return "false";
    default: return "undetermined";
  }
}

// ---- classical (single-valuation) semantics ----------------------------------
//
// Reads every connective classically and ignores independence sets.  Used as
// an oracle: on slash-free formulas the trumps are exactly the teams all of
// whose members satisfy the formula classically.

inline bool classical_satisfaction(const FNode& n, const Structure& st, Dims d,
                                   std::uint32_t val) {
  switch (n.kind) {
    case FKind::Atom:
      return detail::atom_holds(n, st, d, val);
    case FKind::Neg:
      return !classical_satisfaction(n.kids[0], st, d, val);
    case FKind::Or:
      return classical_satisfaction(n.kids[0], st, d, val) ||
             classical_satisfaction(n.kids[1], st, d, val);
    case FKind::And:
      return classical_satisfaction(n.kids[0], st, d, val) &&
             classical_satisfaction(n.kids[1], st, d, val);
    case FKind::Implies:
      return !classical_satisfaction(n.kids[0], st, d, val) ||
             classical_satisfaction(n.kids[1], st, d, val);
    case FKind::Iff:
      return classical_satisfaction(n.kids[0], st, d, val) ==
             classical_satisfaction(n.kids[1], st, d, val);
    case FKind::Exists:
    case FKind::Forall: {
      bool want_all = n.kind == FKind::Forall;
      for (int b = 0; b < d.base; ++b) {
        bool sub = classical_satisfaction(n.kids[0], st, d, valuation_with(d, val, n.var, b));
        if (sub != want_all) return !want_all;
      }
      return want_all;
    }
  }
  throw error("malformed formula");
}

inline bool classical_satisfaction(const Formula& f, const Structure& st, std::uint32_t val) {
  return classical_satisfaction(f.root, st, Dims{st.universe, f.vars}, val);
}

// ---- realization -------------------------------------------------------------
//
// Builds a formula whose meaning over a fully named structure is a given
// double suit.  Ingredients, writing ∨ and ∧ for ∨_N and ∧_N:
//
//   φ    describes the trump suit: the join of the team formulas of the
//        maximal trumps V_0, …, V_{k-1}
//   ψ    = ¬(join of team formulas of the maximal cotrumps)
//   φ_V  team formula of V = V_0 ∪ … ∪ V_{k-1}
//   χ    a formula with meaning Ω: ∃v_0/∅ ¬(v_0 = c ∨ v_0 ≠ c), where c
//        names some element — the inner disjunction has a flat nonzero
//        meaning ≤ 1, so its negation sits in (0, Ω] and cylindrifying on
//        an unslashed variable lands exactly on Ω
//
// and the result is (φ ∨ χ) ∧ ((ψ ∧ χ) ∨ φ_V).

inline Formula omega_formula(const Structure& st, int vars) {
  if (st.universe < 2) throw error("omega formula needs at least two elements");
  std::string c = st.constant_for(0);
  VarSet nset = full_varset(vars);
  FNode eq = atom_eq(TermRef::v(0), TermRef::c(c));
  FNode body = neg(or_(eq, neg(eq), nset));
  return Formula{exists(0, 0, body), vars};
}

inline Formula realize_double_suit(const AlgebraElement& x, const Structure& st) {
  Dims d = x.dims();
  if (st.universe != d.base) throw error("structure size does not match the element");
  if (!st.fully_named()) throw error("realization needs a fully named structure");
  if (st.universe < 2) throw error("realization needs at least two elements");
  if (!classify(x).double_suit) throw error("only double suits are realizable");
  VarSet nset = full_varset(d.vars);

  auto join_over = [&](const std::vector<std::uint32_t>& teams) {
    FNode acc = formula_for_team(Team{d, teams[0]}, st).root;
    for (std::size_t i = 1; i < teams.size(); ++i)
      acc = or_(std::move(acc), formula_for_team(Team{d, teams[i]}, st).root, nset);
    return acc;
  };

  std::vector<std::uint32_t> trumps = x.plus.maximal_teams();
  std::vector<std::uint32_t> cotrumps = x.minus.maximal_teams();
  Team v{d, 0};
  for (std::uint32_t t : trumps) v.bits |= t;

  FNode phi = join_over(trumps);
  FNode psi = neg(join_over(cotrumps));
  FNode chi = omega_formula(st, d.vars).root;
  FNode right = or_(and_(std::move(psi), chi, nset), formula_for_team(v, st).root, nset);
  return Formula{and_(or_(std::move(phi), std::move(chi), nset), std::move(right), nset), d.vars};
}

}  // namespace ifg
