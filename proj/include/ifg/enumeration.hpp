#pragma once
// Counting and enumerating suits and double suits.
//
// A suit is a nonempty downward-closed family of teams, so it is determined
// by its antichain of maximal teams; enumerating suits = enumerating
// antichains of nonempty teams (the empty antichain gives the suit {∅}).
// Double suits are pairs of suits meeting only in the empty team.  Counts
// over a bare universe of size m (one variable):
//
//   m      0  1  2   3    4     5
//   suits  1  2  5  19  167  7580
//   pairs  1  3  11  55  489  17279

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/team.hpp"

namespace ifg {

inline void check_enumeration_guard(Dims d) {
  if (d.valuations() > 5)
    throw guard_error("suit enumeration is capped at 5 valuations (" +
                      std::to_string(d.valuations()) + " requested)");
}

inline std::vector<TeamFamily> enumerate_suits(Dims d) {
  check_enumeration_guard(d);
  std::vector<TeamFamily> out;
  std::vector<std::uint32_t> chosen;
  TeamFamily family = TeamFamily::just_empty(d);

  auto dfs = [&](auto&& self, std::uint32_t next) -> void {
    out.push_back(family);
    for (std::uint32_t t = next; t < d.teams(); ++t) {
      if (family.test(t)) continue;  // t below a chosen maximal team
      bool above = false;
      for (std::uint32_t s : chosen)
        if ((t & s) == s) {
          above = true;
          break;
        }
      if (above) continue;
      TeamFamily saved = family;
      chosen.push_back(t);
      family = family | TeamFamily::powerset(Team{d, t});
      self(self, t + 1);
      chosen.pop_back();
      family = saved;
    }
  };
  dfs(dfs, 1);
  return out;
}

inline std::vector<AlgebraElement> enumerate_double_suits(Dims d) {
  std::vector<TeamFamily> suits = enumerate_suits(d);
  TeamFamily just_empty = TeamFamily::just_empty(d);
  std::vector<AlgebraElement> out;
  for (const TeamFamily& p : suits)
    for (const TeamFamily& m : suits)
      if ((p & m) == just_empty) out.push_back({p, m});
  std::sort(out.begin(), out.end(), element_less);
  return out;
}

// ---- count table -------------------------------------------------------------

struct CountRow {
  int m = 0;
  std::uint64_t teams = 0;        // 2^m
  std::uint64_t suits = 0;        // nonempty downward-closed families
  std::uint64_t double_suits = 0; // pairs meeting only in {∅}
};

inline CountRow count_row(int m) {
  Dims d{m, 1};
  std::vector<TeamFamily> suits = enumerate_suits(d);
  CountRow row{m, std::uint64_t{1} << m, suits.size(), 0};

  // suits meet only in {∅} iff their words AND down to the empty-team bit
  std::size_t nwords = suits[0].words.size();
  for (const TeamFamily& a : suits)
    for (const TeamFamily& b : suits) {
      bool clean = true;
      for (std::size_t w = 0; w < nwords; ++w) {
        std::uint64_t common = a.words[w] & b.words[w];
        if (common != (w == 0 ? std::uint64_t{1} : 0)) {
          clean = false;
          break;
        }
      }
      if (clean) ++row.double_suits;
    }
  return row;
}

inline std::vector<CountRow> count_table(int max_m) {
  if (max_m < 0 || max_m > 5)
    throw guard_error("count table is tabulated for m between 0 and 5");
  std::vector<CountRow> rows;
  for (int m = 0; m <= max_m; ++m) rows.push_back(count_row(m));
  return rows;
}

}  // namespace ifg
