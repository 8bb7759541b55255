#pragma once
// Seeded random formulas, schemas and teams for property testing.  All
// randomness flows through a caller-owned mt19937_64, so a fixed seed
// reproduces a run exactly.

#include <random>
#include <string>
#include <vector>

#include "ifg/formula.hpp"
#include "ifg/schema.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct GenOptions {
  int vars = 2;                         // variable slots v_0..v_{vars-1}
  int max_depth = 3;
  bool allow_sugar = false;             // ∧, →, ↔, ∀ in addition to the core
  bool slash_free = false;              // keep every independence set empty
  std::vector<std::string> constants;   // constant names usable in atoms
};

namespace detail {

inline int pick(std::mt19937_64& rng, int n) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(n));
}

inline VarSet random_jset(std::mt19937_64& rng, const GenOptions& o) {
  if (o.slash_free) return 0;
  return static_cast<VarSet>(rng() & ((std::uint64_t{1} << o.vars) - 1));
}

inline TermRef random_term(std::mt19937_64& rng, const GenOptions& o) {
  if (!o.constants.empty() && pick(rng, 3) == 0)
    return TermRef::c(o.constants[pick(rng, static_cast<int>(o.constants.size()))]);
  return TermRef::v(pick(rng, o.vars));
}

inline FNode random_node(std::mt19937_64& rng, const GenOptions& o, int depth) {
  if (depth <= 0) return atom_eq(random_term(rng, o), random_term(rng, o));
  switch (pick(rng, o.allow_sugar ? 8 : 4)) {
    case 0:
      return atom_eq(random_term(rng, o), random_term(rng, o));
    case 1:
      return neg(random_node(rng, o, depth - 1));
    case 2:
      return or_(random_node(rng, o, depth - 1), random_node(rng, o, depth - 1),
                 random_jset(rng, o));
    case 3:
      return exists(pick(rng, o.vars), random_jset(rng, o), random_node(rng, o, depth - 1));
    case 4:
      return and_(random_node(rng, o, depth - 1), random_node(rng, o, depth - 1),
                  random_jset(rng, o));
    case 5:
      return binary(FKind::Implies, random_node(rng, o, depth - 1),
                    random_node(rng, o, depth - 1), random_jset(rng, o));
    case 6:
      return binary(FKind::Iff, random_node(rng, o, depth - 1), random_node(rng, o, depth - 1),
                    random_jset(rng, o));
    default:
      return forall(pick(rng, o.vars), random_jset(rng, o), random_node(rng, o, depth - 1));
  }
}

}  // namespace detail

inline Formula random_formula(std::mt19937_64& rng, const GenOptions& o) {
  return {detail::random_node(rng, o, o.max_depth), o.vars};
}

inline Team random_team(std::mt19937_64& rng, Dims d) {
  return {d, static_cast<std::uint32_t>(rng() & (d.teams() - 1))};
}

// schema over formula placeholders α_0..α_{formula_vars-1}
inline Schema random_schema(std::mt19937_64& rng, int vars, int formula_vars, int max_depth) {
  GenOptions o;
  o.vars = vars;
  auto node = [&](auto&& self, int depth) -> SNode {
    if (depth <= 0) {
      if (detail::pick(rng, 2) == 0) return s_fvar(detail::pick(rng, formula_vars));
      return s_eq(detail::pick(rng, vars), detail::pick(rng, vars));
    }
    switch (detail::pick(rng, 4)) {
      case 0:
        return detail::pick(rng, 2) == 0 ? s_fvar(detail::pick(rng, formula_vars))
                                         : s_eq(detail::pick(rng, vars), detail::pick(rng, vars));
      case 1:
        return s_neg(self(self, depth - 1));
      case 2:
        return s_or(self(self, depth - 1), self(self, depth - 1), detail::random_jset(rng, o));
      default:
        return s_exists(detail::pick(rng, vars), detail::random_jset(rng, o),
                        self(self, depth - 1));
    }
  };
  return {node(node, max_depth), vars, formula_vars};
}

}  // namespace ifg
