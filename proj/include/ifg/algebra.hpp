#pragma once
// Cylindric power set algebra over teams.  An element is a pair
// ⟨plus, minus⟩ of team families; meanings of formulas are the double suits
// (both parts nonempty and downward closed, intersecting only in the empty
// team).  Operations:
//
//   ¬X        = ⟨X⁻, X⁺⟩
//   X +_J Y   : V is a plus-team iff some J-saturated disjoint cover splits it
//               between X⁺ and Y⁺; minus is X⁻ ∩ Y⁻
//   X ·_J Y   : dual (plus is X⁺ ∩ Y⁺, minus by cover search)
//   C_{n,J} X : plus via an independent choice V(n:f) ∈ X⁺, minus via the
//               full expansion W(n:A) ∈ X⁻
//   0 = ⟨{∅}, all⟩,  1 = ⟨all, {∅}⟩,  Ω = ⟨{∅}, {∅}⟩,
//   D_ij = ⟨P({ā : a_i = a_j}), P({ā : a_i ≠ a_j})⟩
//
// The order is X ≤ Y iff X⁺ ⊆ Y⁺ and Y⁻ ⊆ X⁻.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifg/independence.hpp"
#include "ifg/schema.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct AlgebraElement {
  TeamFamily plus, minus;

  bool operator==(const AlgebraElement&) const = default;
  Dims dims() const { return plus.dims; }
};

// "<{max trumps} | {max cotrumps}>", families by their maximal teams.
inline std::string element_to_string(const AlgebraElement& x) {
  return "<" + family_to_string(x.plus) + " | " + family_to_string(x.minus) + ">";
}

// deterministic total order: lexicographic on (plus, minus) bit words
inline bool element_less(const AlgebraElement& a, const AlgebraElement& b) {
  for (std::size_t i = a.plus.words.size(); i-- > 0;) {
    if (a.plus.words[i] != b.plus.words[i]) return a.plus.words[i] < b.plus.words[i];
  }
  for (std::size_t i = a.minus.words.size(); i-- > 0;) {
    if (a.minus.words[i] != b.minus.words[i]) return a.minus.words[i] < b.minus.words[i];
  }
  return false;
}

struct ElementHash {
  std::size_t operator()(const AlgebraElement& x) const {
    std::size_t h = 0xcbf29ce484222325ull;
    auto mix = [&](std::uint64_t w) {
      h ^= w;
      h *= 0x100000001b3ull;
    };
    for (auto w : x.plus.words) mix(w);
    mix(0x9e3779b97f4a7c15ull);
    for (auto w : x.minus.words) mix(w);
    return h;
  }
};

// ---- constants -------------------------------------------------------------

inline AlgebraElement zero(Dims d) { return {TeamFamily::just_empty(d), TeamFamily::all(d)}; }
inline AlgebraElement one(Dims d) { return {TeamFamily::all(d), TeamFamily::just_empty(d)}; }
inline AlgebraElement omega(Dims d) { return {TeamFamily::just_empty(d), TeamFamily::just_empty(d)}; }

// perfect element ⟨P(V), P(^NA ∖ V)⟩
inline AlgebraElement perfect_element(const Team& v) {
  Team comp{v.dims, Team::full(v.dims).bits & ~v.bits};
  return {TeamFamily::powerset(v), TeamFamily::powerset(comp)};
}

inline AlgebraElement diag(Dims d, int i, int j) {
  if (i < 0 || i >= d.vars || j < 0 || j >= d.vars)
    throw error("diagonal index out of range for N=" + std::to_string(d.vars));
  Team v{d, 0};
  for (std::uint32_t val = 0; val < static_cast<std::uint32_t>(d.valuations()); ++val)
    if (valuation_entry(d, val, i) == valuation_entry(d, val, j))
      v.bits |= std::uint32_t{1} << val;
  return perfect_element(v);
}

// ---- operations ------------------------------------------------------------

inline AlgebraElement neg(const AlgebraElement& x) { return {x.minus, x.plus}; }

namespace detail {

// Teams V admitting a J-saturated disjoint cover V = V1 ∪_J V2 with V1 ∈ a,
// V2 ∈ b.  Blocks of V under ≈_J are assigned to the two cells in all 2^k
// ways; for J = ∅ this is a plain submask walk.
inline TeamFamily cover_join(const TeamFamily& a, const TeamFamily& b, VarSet jset) {
  Dims d = a.dims;
  TeamFamily out(d);
  for (std::uint32_t v = 0; v < d.teams(); ++v) {
    if (jset == 0) {
      // disjoint splits = submask enumeration
      std::uint32_t sub = v;
      for (;;) {
        if (a.test(sub) && b.test(v ^ sub)) {
          out.set(v);
          break;
        }
        if (sub == 0) break;
        sub = (sub - 1) & v;
      }
      continue;
    }
    std::vector<Team> blocks = agreement_blocks(Team{d, v}, jset);
    int k = static_cast<int>(blocks.size());
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
      std::uint32_t v2 = 0;
      for (int j = 0; j < k; ++j)
        if ((mask >> j) & 1) v2 |= blocks[j].bits;
      if (a.test(v ^ v2) && b.test(v2)) {
        out.set(v);
        break;
      }
    }
  }
  return out;
}

}  // namespace detail

inline AlgebraElement plus(const AlgebraElement& x, const AlgebraElement& y, VarSet jset) {
  return {detail::cover_join(x.plus, y.plus, jset), x.minus & y.minus};
}

inline AlgebraElement times(const AlgebraElement& x, const AlgebraElement& y, VarSet jset) {
  return {x.plus & y.plus, detail::cover_join(x.minus, y.minus, jset)};
}

inline AlgebraElement cyl(int var, VarSet jset, const AlgebraElement& x) {
  Dims d = x.dims();
  if (var < 0 || var >= d.vars)
    throw error("cylindrification variable out of range for N=" + std::to_string(d.vars));
  TeamFamily p(d), m(d);
  for (std::uint32_t v = 0; v < d.teams(); ++v) {
    // plus: V(n:f) ∈ X⁺ for some independent choice f.  Assemble V(n:f)
    // block-by-block from precomputed shifted block masks.
    std::vector<Team> blocks = agreement_blocks(Team{d, v}, jset);
    int k = static_cast<int>(blocks.size());
    std::vector<std::vector<std::uint32_t>> moved(k);
    for (int j = 0; j < k; ++j) {
      moved[j].assign(d.base, 0);
      for (std::uint32_t val : blocks[j].valuations())
        for (int b = 0; b < d.base; ++b)
          moved[j][b] |= std::uint32_t{1} << valuation_with(d, val, var, b);
    }
    std::vector<int> choice(k, 0);
    for (;;) {
      std::uint32_t image = 0;
      for (int j = 0; j < k; ++j) image |= moved[j][choice[j]];
      if (x.plus.test(image)) {
        p.set(v);
        break;
      }
      int i = k - 1;
      while (i >= 0 && choice[i] == d.base - 1) choice[i--] = 0;
      if (i < 0) break;
      ++choice[i];
    }
    // minus: W(n:A) ∈ X⁻
    if (x.minus.test(expand(Team{d, v}, var).bits)) m.set(v);
  }
  return {p, m};
}

inline bool leq(const AlgebraElement& x, const AlgebraElement& y) {
  return x.plus.subset_of(y.plus) && y.minus.subset_of(x.minus);
}

// ---- classification --------------------------------------------------------

struct Classification {
  bool suit_pair = false;    // both parts nonempty and downward closed
  bool double_suit = false;  // suit pair with X⁺ ∩ X⁻ = {∅}
  bool flat = false;         // X⁺ = P(V) for some V
  bool perfect = false;      // flat with X⁻ = P(complement)
};

inline Classification classify(const AlgebraElement& x) {
  Classification c;
  c.suit_pair = !x.plus.empty() && !x.minus.empty() && x.plus.downward_closed() &&
                x.minus.downward_closed();
  if (!c.suit_pair) return c;
  TeamFamily common = x.plus & x.minus;
  c.double_suit = common == TeamFamily::just_empty(x.dims());
  if (!c.double_suit) return c;
  std::uint32_t support = 0;
  for (std::uint32_t t : x.plus.members()) support |= t;
  Team v{x.dims(), support};
  c.flat = x.plus == TeamFamily::powerset(v);
  if (c.flat) {
    Team comp{x.dims(), Team::full(x.dims()).bits & ~support};
    c.perfect = x.minus == TeamFamily::powerset(comp);
  }
  return c;
}

// ---- iterated join and order ------------------------------------------------

// X +_∅ X +_∅ ... (k copies, left-associated)
inline AlgebraElement nfold_join(const AlgebraElement& x, int copies) {
  if (copies < 1) throw error("nfold_join needs at least one copy");
  AlgebraElement acc = x;
  for (int i = 1; i < copies; ++i) acc = plus(acc, x, 0);
  return acc;
}

struct OrderResult {
  bool finite = false;
  int copies = 0;  // least k with k-fold ∅-join equal to 1; 0 when infinite

  bool operator==(const OrderResult&) const = default;
};

// Least number of copies of X whose +_∅ join is 1 (one more than the count
// of +_∅ occurrences in the joined formula).  The plus part grows monotonely
// and the minus part is fixed after the first join, so reaching a fixpoint
// short of 1 means no number of copies ever suffices.
inline OrderResult order(const AlgebraElement& x) {
  AlgebraElement target = one(x.dims());
  AlgebraElement acc = x;
  int copies = 1;
  for (;;) {
    if (acc == target) return {true, copies};
    AlgebraElement next = plus(acc, x, 0);
    if (next == acc) return {false, 0};
    acc = next;
    ++copies;
  }
}

// ---- term evaluation ---------------------------------------------------------

namespace detail {
inline AlgebraElement eval_term_node(const TNode& n, std::span<const AlgebraElement> xs, Dims d) {
  switch (n.kind) {
    case TKind::Var:
      if (n.tvar < 0 || n.tvar >= static_cast<int>(xs.size()))
        throw error("term variable X" + std::to_string(n.tvar) + " unbound");
      return xs[n.tvar];
    case TKind::Diag:
      return diag(d, n.di, n.dj);
    case TKind::Neg:
      return neg(eval_term_node(n.kids[0], xs, d));
    case TKind::Plus:
      return plus(eval_term_node(n.kids[0], xs, d), eval_term_node(n.kids[1], xs, d), n.jset);
    case TKind::Times:
      return times(eval_term_node(n.kids[0], xs, d), eval_term_node(n.kids[1], xs, d), n.jset);
    case TKind::Cyl:
      return cyl(n.var, n.jset, eval_term_node(n.kids[0], xs, d));
  }
  throw error("malformed term");
}
}  // namespace detail

inline AlgebraElement eval_term(const Term& t, std::span<const AlgebraElement> xs, Dims d) {
  for (const AlgebraElement& x : xs)
    if (x.dims() != d) throw error("term argument has mismatched dimensions");
  return detail::eval_term_node(t.root, xs, d);
}

// ---- Kleene reduct check ------------------------------------------------------
//
// Over a carrier closed under ¬, +_N and ·_N and containing 0 and 1, checks
// the bounded distributive lattice axioms, the De Morgan involution laws and
// the Kleene axiom  x ·_N ¬x  ≤  y +_N ¬y.

struct KleeneReport {
  bool passed = true;
  std::string failure;  // description of the first violated law, if any

  void fail(const std::string& what) {
    if (passed) {
      passed = false;
      failure = what;
    }
  }
};

inline KleeneReport check_kleene(std::span<const AlgebraElement> carrier) {
  KleeneReport rep;
  if (carrier.empty()) {
    rep.fail("empty carrier");
    return rep;
  }
  Dims d = carrier[0].dims();
  VarSet nset = full_varset(d.vars);
  int n = static_cast<int>(carrier.size());

  auto index_of = [&](const AlgebraElement& x) {
    for (int i = 0; i < n; ++i)
      if (carrier[i] == x) return i;
    return -1;
  };
  int i0 = index_of(zero(d)), i1 = index_of(one(d));
  if (i0 < 0 || i1 < 0) {
    rep.fail("carrier is missing 0 or 1");
    return rep;
  }

  // operation tables; also detects non-closure
  std::vector<int> join(n * n), meet(n * n), compl_(n);
  for (int i = 0; i < n; ++i) {
    compl_[i] = index_of(neg(carrier[i]));
    if (compl_[i] < 0) {
      rep.fail("carrier not closed under complement at " + element_to_string(carrier[i]));
      return rep;
    }
    for (int j = 0; j < n; ++j) {
      join[i * n + j] = index_of(plus(carrier[i], carrier[j], nset));
      meet[i * n + j] = index_of(times(carrier[i], carrier[j], nset));
      if (join[i * n + j] < 0 || meet[i * n + j] < 0) {
        rep.fail("carrier not closed under +_N / ·_N at pair (" + element_to_string(carrier[i]) +
                 ", " + element_to_string(carrier[j]) + ")");
        return rep;
      }
    }
  }

  auto pair_name = [&](int i, int j) {
    return element_to_string(carrier[i]) + ", " + element_to_string(carrier[j]);
  };
  for (int i = 0; i < n && rep.passed; ++i) {
    if (compl_[compl_[i]] != i) rep.fail("~~x = x fails at " + element_to_string(carrier[i]));
    if (join[i * n + i] != i) rep.fail("x + x = x fails at " + element_to_string(carrier[i]));
    if (meet[i * n + i] != i) rep.fail("x * x = x fails at " + element_to_string(carrier[i]));
    if (join[i * n + i0] != i) rep.fail("x + 0 = x fails at " + element_to_string(carrier[i]));
    if (meet[i * n + i1] != i) rep.fail("x * 1 = x fails at " + element_to_string(carrier[i]));
    if (join[i * n + i1] != i1) rep.fail("x + 1 = 1 fails at " + element_to_string(carrier[i]));
    if (meet[i * n + i0] != i0) rep.fail("x * 0 = 0 fails at " + element_to_string(carrier[i]));
    for (int j = 0; j < n && rep.passed; ++j) {
      if (join[i * n + j] != join[j * n + i]) rep.fail("+ not commutative at " + pair_name(i, j));
      if (meet[i * n + j] != meet[j * n + i]) rep.fail("* not commutative at " + pair_name(i, j));
      if (join[i * n + meet[i * n + j]] != i) rep.fail("absorption x+(x*y) fails at " + pair_name(i, j));
      if (meet[i * n + join[i * n + j]] != i) rep.fail("absorption x*(x+y) fails at " + pair_name(i, j));
      if (compl_[join[i * n + j]] != meet[compl_[i] * n + compl_[j]])
        rep.fail("De Morgan ~(x+y) = ~x * ~y fails at " + pair_name(i, j));
      // Kleene: x*~x ≤ y+~y
      int lhs = meet[i * n + compl_[i]], rhs = join[j * n + compl_[j]];
      if (join[lhs * n + rhs] != rhs) rep.fail("Kleene axiom fails at " + pair_name(i, j));
      for (int k = 0; k < n && rep.passed; ++k) {
        if (join[i * n + join[j * n + k]] != join[join[i * n + j] * n + k])
          rep.fail("+ not associative at triple starting " + pair_name(i, j));
        if (meet[i * n + meet[j * n + k]] != meet[meet[i * n + j] * n + k])
          rep.fail("* not associative at triple starting " + pair_name(i, j));
        if (meet[i * n + join[j * n + k]] != join[meet[i * n + j] * n + meet[i * n + k]])
          rep.fail("x*(y+z) = x*y + x*z fails at triple starting " + pair_name(i, j));
        if (join[i * n + meet[j * n + k]] != meet[join[i * n + j] * n + join[i * n + k]])
          rep.fail("x+(y*z) = (x+y)*(x+z) fails at triple starting " + pair_name(i, j));
      }
    }
  }
  return rep;
}

}  // namespace ifg
