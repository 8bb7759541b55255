// Suit and double-suit enumeration: cross-checked against a brute-force
// filter over every family of teams, known counts, and the resource guards.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/team.hpp"

using namespace ifg;

// every family over at most 8 teams, kept iff it is a suit: contains the
// empty team and is downward closed
static std::vector<TeamFamily> suits_brute(Dims d) {
  REQUIRE(d.teams() <= 8);
  std::vector<TeamFamily> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d.teams()); ++mask) {
    TeamFamily f(d);
    f.words[0] = mask;
    if (f.test(0) && f.downward_closed()) out.push_back(f);
  }
  return out;
}

static bool family_less(const TeamFamily& a, const TeamFamily& b) {
  return a.words < b.words;
}

TEST_CASE("suit enumeration agrees with the brute-force filter", "[enumeration]") {
  for (int m : {0, 1, 2, 3}) {
    Dims d{m, 1};
    std::vector<TeamFamily> fast = enumerate_suits(d);
    std::vector<TeamFamily> slow = suits_brute(d);
    std::sort(fast.begin(), fast.end(), family_less);
    std::sort(slow.begin(), slow.end(), family_less);
    REQUIRE(fast == slow);
  }
}

TEST_CASE("suits decompose into their maximal teams", "[enumeration]") {
  Dims d{3, 1};
  for (const TeamFamily& suit : enumerate_suits(d)) {
    std::vector<std::uint32_t> tops = suit.maximal_teams();
    TeamFamily rebuilt = TeamFamily::just_empty(d);
    for (std::uint32_t t : tops) {
      rebuilt = rebuilt | TeamFamily::powerset(Team{d, t});
      for (std::uint32_t s : tops)  // antichain: no containment between tops
        if (s != t) REQUIRE((t & s) != s);
    }
    REQUIRE(rebuilt == suit);
  }
}

TEST_CASE("double suits over small universes", "[enumeration]") {
  REQUIRE(enumerate_double_suits(Dims{2, 1}).size() == 11);
  REQUIRE(enumerate_double_suits(Dims{3, 1}).size() == 55);
  REQUIRE(enumerate_double_suits(Dims{2, 2}).size() == 489);  // 4 valuations, like m=4

  SECTION("every pair meets only in the empty team, sorted without duplicates") {
    Dims d{3, 1};
    std::vector<AlgebraElement> all = enumerate_double_suits(d);
    for (std::size_t i = 0; i < all.size(); ++i) {
      REQUIRE((all[i].plus & all[i].minus) == TeamFamily::just_empty(d));
      REQUIRE(classify(all[i]).double_suit);
      if (i > 0) REQUIRE(element_less(all[i - 1], all[i]));
    }
  }
}

TEST_CASE("count table", "[enumeration]") {
  const std::uint64_t want_suits[] = {1, 2, 5, 19, 167, 7580};
  const std::uint64_t want_pairs[] = {1, 3, 11, 55, 489, 17279};

  std::vector<CountRow> rows = count_table(5);
  REQUIRE(rows.size() == 6);
  for (int m = 0; m <= 5; ++m) {
    REQUIRE(rows[m].m == m);
    REQUIRE(rows[m].teams == (std::uint64_t{1} << m));
    REQUIRE(rows[m].suits == want_suits[m]);
    REQUIRE(rows[m].double_suits == want_pairs[m]);
  }
}

TEST_CASE("enumeration guards", "[enumeration]") {
  REQUIRE_THROWS_AS(enumerate_suits(Dims{6, 1}), guard_error);
  REQUIRE_THROWS_AS(enumerate_suits(Dims{3, 2}), guard_error);  // 9 valuations
  REQUIRE_THROWS_AS(count_table(6), guard_error);
  REQUIRE_THROWS_AS(count_table(-1), guard_error);
  REQUIRE_NOTHROW(enumerate_suits(Dims{5, 1}));
}
