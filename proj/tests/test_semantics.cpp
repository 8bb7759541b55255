// Trump semantics: the two-sided evaluator against hand-worked games, the
// classical-satisfaction oracle on slash-free formulas, the meaning/algebra
// homomorphism bridge, and realization of double suits as formulas.

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/catalog.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/gen.hpp"
#include "ifg/parser.hpp"
#include "ifg/semantics.hpp"
#include "ifg/structure.hpp"

using namespace ifg;

static AlgebraElement meaning_of(const std::string& text, const Structure& st, int vars = 0) {
  return meaning(parse(text, vars), st);
}

// ==== hand-worked games ======================================================

TEST_CASE("pennies", "[semantics]") {
  Structure two = Structure::named(2);

  SECTION("classical choice succeeds") {
    REQUIRE(sentence_status(parse("A v0/{} E v1/{} v0 != v1"), two) == SentenceStatus::True);
  }
  SECTION("blind choice is undetermined") {
    REQUIRE(sentence_status(parse("A v0/{} E v1/{v0} v0 != v1"), two) ==
            SentenceStatus::Undetermined);
  }
  SECTION("no way to differ in a singleton universe") {
    Structure one = Structure::named(1);
    REQUIRE(sentence_status(parse("A v0/{} E v1/{v0} v0 != v1"), one) == SentenceStatus::False);
  }
  SECTION("trumps of the open formula") {
    Evaluator e(parse("E v1/{v0} v0 != v1"), two);
    Dims d{2, 2};
    REQUIRE(e.plus(team_from_string(d, "{00, 01}")));
    // with v0 varying, a v0-blind choice cannot avoid both values
    REQUIRE(!e.plus(team_from_string(d, "{00, 10}")));
    REQUIRE(e.plus(team_from_string(d, "{00}")));
    REQUIRE(e.plus(Team::empty_team(d)));
    REQUIRE(e.minus(Team::empty_team(d)));
  }
}

TEST_CASE("two-sided atoms", "[semantics]") {
  Structure two = Structure::named(2);
  Evaluator e(parse("v0 = c0", 1), two);
  Dims d{2, 1};
  REQUIRE(e.plus(Team{d, 0b01}));
  REQUIRE(!e.plus(Team{d, 0b11}));
  REQUIRE(e.minus(Team{d, 0b10}));
  REQUIRE(!e.minus(Team{d, 0b11}));
}

// ==== meanings against the named catalogue ===================================

TEST_CASE("meanings of landmark formulas", "[semantics]") {
  Structure two = Structure::named(2);
  Dims d{2, 1};
  Catalog cat = catalog_for(d);

  REQUIRE(meaning_of("v0 = c0", two) == *cat.find("E0"));
  REQUIRE(meaning_of("v0 = c1", two) == *cat.find("E1"));
  REQUIRE(meaning_of("v0 != v0", two) == *cat.find("0"));
  REQUIRE(meaning_of("v0 = v0", two) == *cat.find("1"));

  SECTION("unhidden split reaches 1, hidden split only A") {
    REQUIRE(meaning_of("(v0 = c0 \\/{} v0 = c1)", two) == *cat.find("1"));
    REQUIRE(meaning_of("(v0 = c0 \\/{v0} v0 = c1)", two) == *cat.find("A"));
  }

  SECTION("joining a refutable disjunct changes nothing") {
    REQUIRE(meaning_of("(v0 = c0 \\/{} v0 != v0)", two) == *cat.find("E0"));
  }

  SECTION("joining the undetermined formula erases the cotrumps") {
    // B = E0 +_{v0} Ω and C = E1 +_{v0} Ω
    std::string omega_text = "E v0/{} ~ (v0 = c0 \\/{v0} ~ (v0 = c0))";
    REQUIRE(meaning_of("(v0 = c0 \\/{v0} " + omega_text + ")", two) == *cat.find("B"));
    REQUIRE(meaning_of("(v0 = c1 \\/{v0} " + omega_text + ")", two) == *cat.find("C"));
  }

  SECTION("negation swaps the sides") {
    REQUIRE(meaning_of("~ (v0 = c0 \\/{v0} v0 = c1)", two) == *cat.find("~A"));
  }
}

TEST_CASE("the blind excluded middle is A, not Ω", "[semantics]") {
  Structure two = Structure::named(2);
  Dims d{2, 1};
  Catalog cat = catalog_for(d);

  // Splitting between v0=c0 and its negation with v0 hidden keeps whole
  // ≈-blocks together, so the trumps are P({0}) ∪ P({1}): the element A,
  // which is far above Ω.
  AlgebraElement naive = meaning_of("(v0 = c0 \\/{v0} v0 != c0)", two);
  REQUIRE(naive == *cat.find("A"));
  REQUIRE(naive != omega(d));
  REQUIRE(leq(omega(d), naive));

  // Cylindrifying its negation on an unhidden variable lands exactly on Ω.
  REQUIRE(meaning(omega_formula(two, 1), two) == omega(d));
  REQUIRE(meaning_of("E v0/{} ~ (v0 = c0 \\/{v0} ~ (v0 = c0))", two) == omega(d));

  SECTION("Ω-formula works across structures and widths") {
    Structure three = Structure::named(3);
    REQUIRE(meaning(omega_formula(three, 1), three) == omega(Dims{3, 1}));
    REQUIRE(meaning(omega_formula(two, 2), two) == omega(Dims{2, 2}));
  }
}

// ==== slash-free flatness against the classical oracle ======================

// ⊨+ φ[V] iff every member satisfies φ classically; ⊨− dually with none.
static void require_flat(const Formula& f, const Structure& st) {
  Dims d{st.universe, f.vars};
  Evaluator e(f, st);
  TeamFamily plus_expected(d), minus_expected(d);
  for (std::uint32_t t = 0; t < d.teams(); ++t) {
    bool all = true, none = true;
    for (std::uint32_t val : Team{d, t}.valuations())
      (classical_satisfaction(f, st, val) ? none : all) = false;
    if (all) plus_expected.set(t);
    if (none) minus_expected.set(t);
  }
  AlgebraElement m = e.meaning();
  INFO(pretty(f));
  REQUIRE(m.plus == plus_expected);
  REQUIRE(m.minus == minus_expected);
}

TEST_CASE("quantifier-free slash-free formulas are flat", "[semantics]") {
  Structure two = Structure::named(2);
  // every formula with ≤ one connective over the N=1 atoms, exhaustively
  std::vector<FNode> atoms;
  std::vector<TermRef> terms{TermRef::v(0), TermRef::c("c0"), TermRef::c("c1")};
  for (const TermRef& a : terms)
    for (const TermRef& b : terms) atoms.push_back(atom_eq(a, b));
  std::vector<FNode> depth1 = atoms;
  for (const FNode& a : atoms) {
    depth1.push_back(neg(a));
    for (const FNode& b : atoms) depth1.push_back(or_(a, b, 0));
  }
  for (const FNode& f : depth1) require_flat(Formula{f, 1}, two);
}

TEST_CASE("slash-free formulas with quantifiers are flat", "[semantics]") {
  std::mt19937_64 rng(0xf1a7);
  GenOptions opt;
  opt.vars = 2;
  opt.max_depth = 3;
  opt.slash_free = true;
  opt.allow_sugar = true;
  opt.constants = {"c0", "c1"};
  Structure two = Structure::named(2);
  for (int i = 0; i < 200; ++i) require_flat(random_formula(rng, opt), two);

  opt.constants = {"c0", "c1", "c2"};
  opt.max_depth = 2;
  Structure three = Structure::named(3);
  for (int i = 0; i < 50; ++i) require_flat(random_formula(rng, opt), three);
}

// ==== structural invariants on random formulas ===============================

TEST_CASE("meanings are double suits", "[semantics]") {
  std::mt19937_64 rng(0xd0b1e);
  GenOptions opt;
  opt.vars = 2;
  opt.max_depth = 3;
  opt.allow_sugar = true;
  opt.constants = {"c0", "c1"};
  Structure two = Structure::named(2);
  for (int i = 0; i < 200; ++i) {
    Formula f = random_formula(rng, opt);
    AlgebraElement m = meaning(f, two);
    INFO(pretty(f));
    Classification c = classify(m);
    REQUIRE(c.suit_pair);
    REQUIRE(c.double_suit);  // a nonempty team is never both trump and cotrump
  }
}

TEST_CASE("memoized evaluation matches fresh evaluation", "[semantics]") {
  std::mt19937_64 rng(0x5eed);
  GenOptions opt;
  opt.vars = 2;
  opt.max_depth = 3;
  opt.constants = {"c0", "c1"};
  Structure two = Structure::named(2);
  Dims d{2, 2};
  for (int i = 0; i < 20; ++i) {
    Formula f = random_formula(rng, opt);
    AlgebraElement m = meaning(f, two);
    for (std::uint32_t t = 0; t < d.teams(); ++t) {
      Evaluator fresh_plus(f, two), fresh_minus(f, two);
      REQUIRE(m.plus.test(t) == fresh_plus.plus(Team{d, t}));
      REQUIRE(m.minus.test(t) == fresh_minus.minus(Team{d, t}));
    }
  }
}

// ==== the semantics/algebra bridge ==========================================

TEST_CASE("connectives act as algebra operations on meanings", "[semantics]") {
  Structure two = Structure::named(2);
  std::vector<Formula> pool = {
      parse("v0 = v1", 2),
      parse("v0 = c0", 2),
      parse("~ v1 = c1", 2),
      parse("E v1/{v0} v0 != v1", 2),
  };
  std::vector<VarSet> jsets = {0, 0b01, 0b11};

  for (const Formula& f : pool) {
    AlgebraElement mf = meaning(f, two);
    REQUIRE(meaning(Formula{neg(f.root), 2}, two) == neg(mf));
    for (int var = 0; var < 2; ++var)
      for (VarSet j : jsets)
        REQUIRE(meaning(Formula{exists(var, j, f.root), 2}, two) == cyl(var, j, mf));
    for (const Formula& g : pool) {
      AlgebraElement mg = meaning(g, two);
      for (VarSet j : jsets) {
        REQUIRE(meaning(Formula{or_(f.root, g.root, j), 2}, two) == plus(mf, mg, j));
        REQUIRE(meaning(Formula{and_(f.root, g.root, j), 2}, two) == times(mf, mg, j));
      }
    }
  }
}

TEST_CASE("slashed iff has the displayed satisfaction clause", "[semantics]") {
  // ⊨+ (φ <->/N ψ)[V]  iff  both ⊨+ on V or both ⊨− on V
  Structure two = Structure::named(2);
  std::vector<Formula> pool = {
      parse("v0 = c0", 2),
      parse("v0 = v1", 2),
      parse("E v1/{v0} v0 != v1", 2),
  };
  Dims d{2, 2};
  VarSet nset = full_varset(2);
  for (const Formula& f : pool)
    for (const Formula& g : pool) {
      Evaluator ef(f, two), eg(g, two);
      Evaluator both(Formula{binary(FKind::Iff, f.root, g.root, nset), 2}, two);
      for (std::uint32_t t = 1; t < d.teams(); ++t) {
        Team v{d, t};
        bool expected = (ef.plus(v) && eg.plus(v)) || (ef.minus(v) && eg.minus(v));
        REQUIRE(both.plus(v) == expected);
      }
    }
}

// ==== realization ============================================================

TEST_CASE("realization recovers every double suit over two elements", "[semantics]") {
  Structure two = Structure::named(2);
  Dims d{2, 1};
  for (const AlgebraElement& x : enumerate_double_suits(d)) {
    Formula f = realize_double_suit(x, two);
    INFO(element_to_string(x) << "  via  " << pretty(f));
    REQUIRE(meaning(f, two) == x);
  }
}

TEST_CASE("realization recovers every double suit over three elements", "[semantics]") {
  Structure three = Structure::named(3);
  Dims d{3, 1};
  std::vector<AlgebraElement> all = enumerate_double_suits(d);
  REQUIRE(all.size() == 55);
  for (const AlgebraElement& x : all) REQUIRE(meaning(realize_double_suit(x, three), three) == x);
}

TEST_CASE("realization spot checks", "[semantics]") {
  Structure two = Structure::named(2);
  Dims d{2, 1};

  SECTION("a perfect element") {
    AlgebraElement e0 = perfect_element(Team{d, 0b01});
    REQUIRE(meaning(realize_double_suit(e0, two), two) == e0);
  }
  SECTION("Ω itself") {
    REQUIRE(meaning(realize_double_suit(omega(d), two), two) == omega(d));
  }
  SECTION("width two") {
    AlgebraElement x = perfect_element(team_from_string(Dims{2, 2}, "{00, 11}"));
    REQUIRE(meaning(realize_double_suit(x, two), two) == x);
  }
  SECTION("rejects bad inputs") {
    AlgebraElement not_ds{TeamFamily::all(d), TeamFamily::all(d)};
    REQUIRE_THROWS_AS(realize_double_suit(not_ds, two), error);
    REQUIRE_THROWS_AS(realize_double_suit(omega(d), Structure::named(3)), error);
    Structure unnamed;
    unnamed.universe = 2;
    REQUIRE_THROWS_AS(realize_double_suit(omega(d), unnamed), error);
  }
}

// ==== guards =================================================================

TEST_CASE("semantics guards", "[semantics]") {
  Structure two = Structure::named(2);
  REQUIRE_THROWS_AS(meaning(parse("v0 = v0", 4), two), guard_error);   // 16 valuations
  REQUIRE_NOTHROW(sentence_status(parse("v0 = v0", 4), two));          // single-team is fine
  REQUIRE_THROWS_AS(sentence_status(parse("v0 = v0", 5), two), guard_error);
}
