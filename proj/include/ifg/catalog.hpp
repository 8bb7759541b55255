#pragma once
// Named elements of the two reference algebras, built directly from team
// families.  Over a two-element universe with one variable the double suits
// form an 11-element algebra:
//
//   0, Ω, 1,   E0 = ⟨P({0}), P({1})⟩,   E1 = ⟨P({1}), P({0})⟩,
//   B = ⟨P({0}), {∅}⟩,   C = ⟨P({1}), {∅}⟩,   A = ⟨P({0}) ∪ P({1}), {∅}⟩,
//   and the complements ¬A, ¬B, ¬C.
//
// Over a three-element universe (one variable) the named landmarks are
//
//   A = ⟨P({0,1}), {∅}⟩,   B = ⟨P({0}) ∪ P({1}), {∅}⟩,   ¬A, ¬B, 0, Ω, 1
//
// where {0,1} is the team of the valuations sending v0 to 0 and to 1.

#include <string>
#include <utility>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct Catalog {
  Dims dims;
  std::vector<std::pair<std::string, AlgebraElement>> entries;

  const AlgebraElement* find(const std::string& name) const {
    for (const auto& [n, x] : entries)
      if (n == name) return &x;
    return nullptr;
  }

  // "" when the element has no name here
  std::string name_of(const AlgebraElement& x) const {
    for (const auto& [n, y] : entries)
      if (y == x) return n;
    return "";
  }
};

inline Catalog catalog_for(Dims d) {
  Catalog cat{d, {}};
  auto up = [&](std::uint32_t team_bits) {  // ⟨P(team), {∅}⟩
    return AlgebraElement{TeamFamily::powerset(Team{d, team_bits}), TeamFamily::just_empty(d)};
  };
  auto add = [&](const std::string& name, const AlgebraElement& x) {
    cat.entries.emplace_back(name, x);
    if (name != "0" && name != "1" && name != "Omega")
      cat.entries.emplace_back("~" + name, neg(x));
  };
  add("0", zero(d));
  add("1", one(d));
  add("Omega", omega(d));
  if (d.base == 2 && d.vars == 1) {
    add("E0", perfect_element(Team{d, 0b01}));
    add("E1", perfect_element(Team{d, 0b10}));
    add("B", up(0b01));
    add("C", up(0b10));
    AlgebraElement a{TeamFamily::powerset(Team{d, 0b01}) | TeamFamily::powerset(Team{d, 0b10}),
                     TeamFamily::just_empty(d)};
    add("A", a);
  } else if (d.base == 3 && d.vars == 1) {
    add("A", up(0b011));
    AlgebraElement b{TeamFamily::powerset(Team{d, 0b001}) | TeamFamily::powerset(Team{d, 0b010}),
                     TeamFamily::just_empty(d)};
    add("B", b);
  }
  return cat;
}

}  // namespace ifg
