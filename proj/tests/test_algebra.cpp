// The cylindric power set algebra: constants, operations against
// brute-force oracles, hand-verified identity tables over the 11-element
// algebra, absorption laws, the cylindrification trichotomy, order, term
// evaluation, and the Kleene reduct checker.

#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <random>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/algebra_expr.hpp"
#include "ifg/catalog.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/independence.hpp"
#include "ifg/schema.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"
#include "ifg/ualg.hpp"

using namespace ifg;

// ==== oracles ================================================================

// plus via the definition: V is a plus-team iff some J-saturated disjoint
// cover (from the enumerator, itself oracle-tested) splits it between the
// arguments; minus intersects pointwise.
static AlgebraElement plus_brute(const AlgebraElement& x, const AlgebraElement& y, VarSet jset) {
  Dims d = x.dims();
  TeamFamily p(d), m(d);
  for (std::uint32_t t = 0; t < d.teams(); ++t) {
    for (auto& [v1, v2] : saturated_disjoint_covers(Team{d, t}, jset))
      if (x.plus.test(v1.bits) && y.plus.test(v2.bits)) {
        p.set(t);
        break;
      }
    if (x.minus.test(t) && y.minus.test(t)) m.set(t);
  }
  return {p, m};
}

// cylindrification via the definition: V(n:f) for independent f on the plus
// side, the full expansion on the minus side.
static AlgebraElement cyl_brute(int var, VarSet jset, const AlgebraElement& x) {
  Dims d = x.dims();
  TeamFamily p(d), m(d);
  for (std::uint32_t t = 0; t < d.teams(); ++t) {
    for (const ChoiceFunction& f : independent_choices(Team{d, t}, jset))
      if (x.plus.test(substitute(Team{d, t}, var, f).bits)) {
        p.set(t);
        break;
      }
    if (x.minus.test(expand(Team{d, t}, var).bits)) m.set(t);
  }
  return {p, m};
}

// seeded random general element (not necessarily a suit pair)
static AlgebraElement random_element(std::mt19937_64& rng, Dims d) {
  TeamFamily p(d), m(d);
  for (auto& w : p.words) w = rng();
  for (auto& w : m.words) w = rng();
  std::uint32_t n = d.teams();
  if (n & 63) {
    p.words.back() &= (std::uint64_t{1} << (n & 63)) - 1;
    m.words.back() &= (std::uint64_t{1} << (n & 63)) - 1;
  }
  return {p, m};
}

// ==== constants and order relation ===========================================

TEST_CASE("constants and the order", "[algebra]") {
  Dims d{2, 1};
  REQUIRE(leq(zero(d), omega(d)));
  REQUIRE(leq(omega(d), one(d)));
  REQUIRE(!leq(one(d), omega(d)));

  for (const AlgebraElement& x : enumerate_double_suits(d)) {
    REQUIRE(leq(zero(d), x));
    REQUIRE(leq(x, one(d)));
    REQUIRE(leq(x, x));
  }

  SECTION("diagonals") {
    REQUIRE(diag(d, 0, 0) == one(d));
    Dims d2{2, 2};
    AlgebraElement d01 = diag(d2, 0, 1);
    REQUIRE(d01 == perfect_element(team_from_string(d2, "{00, 11}")));
    REQUIRE(d01.minus == TeamFamily::powerset(team_from_string(d2, "{10, 01}")));
    REQUIRE_THROWS_AS(diag(d, 0, 1), error);  // v1 out of range for N=1
  }

  SECTION("negation is an involution swapping the sides") {
    Dims d2{2, 2};
    std::mt19937_64 rng(7);
    for (int i = 0; i < 20; ++i) {
      AlgebraElement x = random_element(rng, d2);
      REQUIRE(neg(neg(x)) == x);
      REQUIRE(neg(x).plus == x.minus);
    }
  }
}

// ==== operations against the oracles =========================================

TEST_CASE("join and cylindrification match their definitions", "[algebra]") {
  Dims d{2, 2};
  std::mt19937_64 rng(0xa1);
  std::vector<AlgebraElement> sample;
  for (int i = 0; i < 12; ++i) sample.push_back(random_element(rng, d));
  sample.push_back(zero(d));
  sample.push_back(one(d));
  sample.push_back(omega(d));
  sample.push_back(diag(d, 0, 1));

  for (VarSet j = 0; j <= full_varset(2); ++j) {
    for (const AlgebraElement& x : sample) {
      for (int var = 0; var < 2; ++var) REQUIRE(cyl(var, j, x) == cyl_brute(var, j, x));
      for (const AlgebraElement& y : sample) {
        REQUIRE(plus(x, y, j) == plus_brute(x, y, j));
        // ·_J is the De Morgan dual, for arbitrary elements
        REQUIRE(times(x, y, j) == neg(plus(neg(x), neg(y), j)));
      }
    }
  }
}

TEST_CASE("join and meet are commutative", "[algebra]") {
  Dims d{3, 1};
  std::mt19937_64 rng(0xa2);
  for (int i = 0; i < 30; ++i) {
    AlgebraElement x = random_element(rng, d), y = random_element(rng, d);
    for (VarSet j = 0; j <= 1; ++j) {
      REQUIRE(plus(x, y, j) == plus(y, x, j));
      REQUIRE(times(x, y, j) == times(y, x, j));
    }
  }
}

// ==== hand-verified identities over the 11-element algebra ==================

TEST_CASE("landmark identities over two elements", "[algebra]") {
  Dims d{2, 1};
  Catalog cat = catalog_for(d);
  auto el = [&](const char* n) { return *cat.find(n); };

  REQUIRE(plus(el("A"), el("A"), 0) == el("1"));
  REQUIRE(plus(el("B"), el("C"), 0) == el("1"));
  REQUIRE(plus(el("~B"), el("~C"), 0) == el("Omega"));
  REQUIRE(plus(el("B"), el("C"), 0b01) == el("A"));
  REQUIRE(plus(el("B"), el("E0"), 0b01) == el("B"));
  REQUIRE(plus(el("C"), el("E0"), 0b01) == el("A"));
  REQUIRE(plus(el("E0"), el("E1"), 0b01) == el("A"));
  REQUIRE(plus(el("E0"), el("E1"), 0) == el("1"));
  REQUIRE(plus(el("B"), el("Omega"), 0b01) == el("B"));
  REQUIRE(plus(el("E0"), el("Omega"), 0b01) == el("B"));
  REQUIRE(plus(el("E1"), el("Omega"), 0b01) == el("C"));

  SECTION("Ω is reachable from the atoms by cylindrification") {
    REQUIRE(cyl(0, 0, neg(plus(el("E0"), el("E1"), 0b01))) == el("Omega"));
  }

  SECTION("printing") {
    REQUIRE(element_to_string(el("E0")) == "<{0} | {1}>");
    REQUIRE(element_to_string(el("A")) == "<{0}, {1} | {}>");
    REQUIRE(element_to_string(el("Omega")) == "<{} | {}>");
  }
}

// ==== lattice facts and absorption ===========================================

TEST_CASE("identities with the bounds hold for double suits", "[algebra]") {
  Dims d{2, 1};
  for (const AlgebraElement& x : enumerate_double_suits(d)) {
    for (VarSet j = 0; j <= 1; ++j) {
      REQUIRE(plus(x, zero(d), j) == x);
      REQUIRE(plus(x, one(d), j) == one(d));
      REQUIRE(times(x, one(d), j) == x);
      REQUIRE(times(x, zero(d), j) == zero(d));
    }
    // the unhidden-split join and meet act coordinatewise
    for (const AlgebraElement& y : enumerate_double_suits(d)) {
      REQUIRE(plus(x, y, full_varset(1)) ==
              AlgebraElement{x.plus | y.plus, x.minus & y.minus});
      REQUIRE(times(x, y, full_varset(1)) ==
              AlgebraElement{x.plus & y.plus, x.minus | y.minus});
    }
  }
}

TEST_CASE("absorption laws", "[algebra]") {
  Dims d{2, 1};
  std::vector<AlgebraElement> all = enumerate_double_suits(d);
  for (const AlgebraElement& x : all)
    for (const AlgebraElement& y : all)
      for (VarSet j = 0; j <= 1; ++j) {
        if (leq(x, omega(d)) && leq(x, y)) REQUIRE(plus(x, y, j) == y);
        if (leq(x, y) && classify(y).flat) REQUIRE(plus(x, y, j) == y);
      }
}

TEST_CASE("full cylindrification lands on 0, Ω or 1", "[algebra]") {
  Dims d{2, 1};
  for (const AlgebraElement& x : enumerate_double_suits(d))
    for (VarSet j = 0; j <= 1; ++j) {
      AlgebraElement c = cyl(0, j, x);
      if (x == zero(d)) {
        REQUIRE(c == zero(d));
      } else if (leq(x, omega(d))) {
        REQUIRE(c == omega(d));
      } else {
        REQUIRE(c == one(d));
      }
    }
}

// ==== iterated joins and order ===============================================

TEST_CASE("order of an element", "[algebra]") {
  Dims d{2, 1};
  Catalog cat = catalog_for(d);

  REQUIRE(order(one(d)) == OrderResult{true, 1});
  REQUIRE(order(*cat.find("A")) == OrderResult{true, 2});
  REQUIRE(order(*cat.find("B")).finite == false);
  REQUIRE(order(zero(d)).finite == false);
  REQUIRE(order(omega(d)).finite == false);

  SECTION("over three elements") {
    Dims d3{3, 1};
    auto up3 = [&](std::uint32_t bits) {
      return AlgebraElement{TeamFamily::powerset(Team{d3, bits}), TeamFamily::just_empty(d3)};
    };
    AlgebraElement pair_single{TeamFamily::powerset(Team{d3, 0b011}) |
                                   TeamFamily::powerset(Team{d3, 0b100}),
                               TeamFamily::just_empty(d3)};
    AlgebraElement singles{TeamFamily::powerset(Team{d3, 0b001}) |
                               TeamFamily::powerset(Team{d3, 0b010}) |
                               TeamFamily::powerset(Team{d3, 0b100}),
                           TeamFamily::just_empty(d3)};
    REQUIRE(order(pair_single) == OrderResult{true, 2});
    REQUIRE(order(singles) == OrderResult{true, 3});
    REQUIRE(order(up3(0b011)).finite == false);  // the flat pair never covers 2
  }

  SECTION("join monotonicity behind the fixpoint argument") {
    for (const AlgebraElement& x : enumerate_double_suits(d)) {
      AlgebraElement prev = x;
      for (int k = 2; k <= 4; ++k) {
        AlgebraElement next = nfold_join(x, k);
        REQUIRE(prev.plus.subset_of(next.plus));
        REQUIRE(next.minus == prev.minus);
        prev = next;
      }
    }
  }
}

// ==== term evaluation ========================================================

TEST_CASE("terms evaluate over the algebra", "[algebra]") {
  Dims d{2, 1};
  Catalog cat = catalog_for(d);
  std::vector<AlgebraElement> args = {*cat.find("E0"), *cat.find("E1")};

  Term omega_term{t_cyl(0, 0, t_neg(t_plus(t_var(0), t_var(1), 0b01))), 2};
  REQUIRE(eval_term(omega_term, args, d) == *cat.find("Omega"));

  Term diag_term{t_diag(0, 0), 0};
  REQUIRE(eval_term(diag_term, {}, d) == one(d));

  Term bad{t_var(5), 6};
  REQUIRE_THROWS_AS(eval_term(bad, args, d), error);
}

// ==== Kleene reduct ==========================================================

TEST_CASE("Kleene laws hold on the two-element carrier", "[algebra]") {
  std::vector<AlgebraElement> carrier = enumerate_double_suits(Dims{2, 1});
  REQUIRE(carrier.size() == 11);
  KleeneReport rep = check_kleene(carrier);
  INFO(rep.failure);
  REQUIRE(rep.passed);
}

TEST_CASE("Kleene checker reports violations", "[algebra]") {
  Dims d{2, 1};

  SECTION("missing closure") {
    std::vector<AlgebraElement> open = {zero(d), one(d), perfect_element(Team{d, 0b01})};
    KleeneReport rep = check_kleene(open);  // lacks the complement of E0
    REQUIRE(!rep.passed);
    REQUIRE(rep.failure.find("closed") != std::string::npos);
  }

  SECTION("a pair that is not a double suit breaks the Kleene axiom") {
    AlgebraElement bad{TeamFamily::all(d), TeamFamily::all(d)};
    std::vector<AlgebraElement> carrier = {zero(d), one(d), omega(d), bad};
    KleeneReport rep = check_kleene(carrier);  // closed, but bad·¬bad ≰ Ω+¬Ω
    REQUIRE(!rep.passed);
    REQUIRE(rep.failure.find("Kleene") != std::string::npos);
  }
}

// ==== expression parser ======================================================

TEST_CASE("algebra expressions", "[algebra][expr]") {
  Dims d{2, 1};
  Catalog cat = catalog_for(d);
  Structure two = make_structure("2");
  ExprContext ctx{d, &cat, &two};
  auto ev = [&](const std::string& s) { return parse_algebra_expr(s, ctx); };

  SECTION("named elements, joins, slash sets") {
    REQUIRE(ev("B +{} C") == *cat.find("1"));
    REQUIRE(ev("B + C") == *cat.find("1"));  // bare + defaults to J = {}
    REQUIRE(ev("B +{0} C") == *cat.find("A"));
    REQUIRE(ev("B +{v0} C") == *cat.find("A"));
    REQUIRE(ev("~B +{} ~C") == *cat.find("Omega"));
  }

  SECTION("negation, cylindrification, grouping") {
    REQUIRE(ev("~(E0 +{0} E1)") == neg(*cat.find("A")));
    REQUIRE(ev("C(0,{}) ~(E0 +{0} E1)") == *cat.find("Omega"));
    REQUIRE(ev("~~A") == *cat.find("A"));
    REQUIRE(ev("D(0,0)") == one(d));
  }

  SECTION("meet binds tighter than join") {
    REQUIRE(ev("A *{0} 0 +{0} 1") == one(d));
    REQUIRE(ev("A *{0} (0 +{0} 1)") == *cat.find("A"));
  }

  SECTION("meanings in brackets") {
    REQUIRE(ev("[[v0 = c0]]") == *cat.find("E0"));
    REQUIRE(ev("[[v0 = c0]] +{0} [[v0 = c1]]") == *cat.find("A"));
  }

  SECTION("errors carry positions") {
    REQUIRE_THROWS_AS(ev("B + Q"), parse_error);
    REQUIRE_THROWS_AS(ev("B + C)"), parse_error);
    REQUIRE_THROWS_AS(ev("[[v0 = c0"), parse_error);
    REQUIRE_THROWS_AS(ev("C(1,{}) B"), parse_error);  // v1 out of range
    REQUIRE_THROWS_AS(ev(""), parse_error);
    ExprContext bare{d, &cat, nullptr};
    REQUIRE_THROWS_AS(parse_algebra_expr("[[v0 = c0]]", bare), parse_error);
  }
}
