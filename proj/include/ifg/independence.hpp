#pragma once
// Information independence over teams.  J is a set of variable indices
// (bitmask over v_0..v_{N-1}) that a player is *denied* access to:
//
//   ā ≈_J b̄        agree on every variable outside J
//   V = V1 ∪_J V2   disjoint cover whose cells are closed under ≈_J
//   f : V →_J A     choice function constant on ≈_J blocks
//
// Blocks are ordered by their minimum valuation index, and enumerations run in
// a fixed order so results are deterministic; no caller depends on the order.

#include <bit>
#include <cstdint>
#include <functional>
#include <type_traits>
#include <utility>
#include <vector>

#include "ifg/team.hpp"

namespace ifg {

using VarSet = std::uint32_t;  // subset of {0..N-1}

inline VarSet full_varset(int vars) { return (VarSet{1} << vars) - 1; }

// The valuation with every J-coordinate zeroed; equal keys <=> ā ≈_J b̄.
inline std::uint32_t outside_key(Dims d, std::uint32_t val, VarSet jset) {
  std::uint32_t key = val;
  for (int i = 0; i < d.vars; ++i)
    if ((jset >> i) & 1) key = valuation_with(d, key, i, 0);
  return key;
}

inline bool agree_outside(Dims d, std::uint32_t a, std::uint32_t b, VarSet jset) {
  return outside_key(d, a, jset) == outside_key(d, b, jset);
}

// Partition of V into ≈_J equivalence classes, ordered by minimum member.
inline std::vector<Team> agreement_blocks(const Team& v, VarSet jset) {
  std::vector<std::uint32_t> keys;   // distinct keys in order of first appearance
  std::vector<Team> blocks;
  for (std::uint32_t val : v.valuations()) {
    std::uint32_t key = outside_key(v.dims, val, jset);
    std::size_t i = 0;
    while (i < keys.size() && keys[i] != key) ++i;
    if (i == keys.size()) {
      keys.push_back(key);
      blocks.push_back(Team{v.dims, 0});
    }
    blocks[i].bits |= std::uint32_t{1} << val;
  }
  // first appearance == minimum valuation index, since valuations() ascends
  return blocks;
}

// Enumerates every J-saturated disjoint cover V = V1 ∪_J V2 as an ordered
// pair; with k blocks there are exactly 2^k of them.  Iteration assigns blocks
// by increasing representative, V1 first: (V, ∅) comes first, (∅, V) last.
// A callback returning bool may return false to stop early.
template <class Fn>
void for_each_saturated_cover(const Team& v, VarSet jset, Fn&& fn) {
  std::vector<Team> blocks = agreement_blocks(v, jset);
  int k = static_cast<int>(blocks.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
    Team v1{v.dims, 0}, v2{v.dims, 0};
    for (int j = 0; j < k; ++j) {
      if ((mask >> (k - 1 - j)) & 1)
        v2.bits |= blocks[j].bits;
      else
        v1.bits |= blocks[j].bits;
    }
    if constexpr (std::is_convertible_v<decltype(fn(v1, v2)), bool>) {
      if (!fn(v1, v2)) return;
    } else {
      fn(v1, v2);
    }
  }
}

inline std::vector<std::pair<Team, Team>> saturated_disjoint_covers(const Team& v, VarSet jset) {
  std::vector<std::pair<Team, Team>> out;
  for_each_saturated_cover(v, jset, [&](const Team& a, const Team& b) { out.emplace_back(a, b); });
  return out;
}

// f : V →_J A, stored per block representative (minimum valuation index).
struct ChoiceFunction {
  Dims dims;
  VarSet jset = 0;
  std::vector<std::uint32_t> reps;  // block representatives, ascending
  std::vector<int> values;          // chosen element per block

  int at(std::uint32_t val) const {
    std::uint32_t key = outside_key(dims, val, jset);
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (outside_key(dims, reps[i], jset) == key) return values[i];
    throw error("choice function applied outside its domain");
  }
};

// Enumerates all m^k functions f : V →_J A in lexicographic order of the value
// vector (first block most significant).  A callback returning bool may
// return false to stop early.
template <class Fn>
void for_each_independent_choice(const Team& v, VarSet jset, Fn&& fn) {
  std::vector<Team> blocks = agreement_blocks(v, jset);
  ChoiceFunction f;
  f.dims = v.dims;
  f.jset = jset;
  for (const Team& b : blocks) {
    f.reps.push_back(static_cast<std::uint32_t>(std::countr_zero(b.bits)));
    f.values.push_back(0);
  }
  int k = static_cast<int>(blocks.size());
  for (;;) {
    const ChoiceFunction& cf = f;
    if constexpr (std::is_convertible_v<decltype(fn(cf)), bool>) {
      if (!fn(cf)) return;
    } else {
      fn(cf);
    }
    int i = k - 1;
    while (i >= 0 && f.values[i] == v.dims.base - 1) f.values[i--] = 0;
    if (i < 0) break;
    ++f.values[i];
  }
}

inline std::vector<ChoiceFunction> independent_choices(const Team& v, VarSet jset) {
  std::vector<ChoiceFunction> out;
  for_each_independent_choice(v, jset, [&](const ChoiceFunction& f) { out.push_back(f); });
  return out;
}

// V(n:f) = { ā(n : f(ā)) : ā ∈ V }
inline Team substitute(const Team& v, int var, const ChoiceFunction& f) {
  Team out{v.dims, 0};
  for (std::uint32_t val : v.valuations())
    out.bits |= std::uint32_t{1} << valuation_with(v.dims, val, var, f.at(val));
  return out;
}

// W(n:A) = { ā(n:b) : ā ∈ W, b ∈ A }
inline Team expand(const Team& w, int var) {
  Team out{w.dims, 0};
  for (std::uint32_t val : w.valuations())
    for (int b = 0; b < w.dims.base; ++b)
      out.bits |= std::uint32_t{1} << valuation_with(w.dims, val, var, b);
  return out;
}

}  // namespace ifg
