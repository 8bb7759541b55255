// Concrete syntax: parsing, canonical printing, desugaring, validation, and
// the schema/term layer.

#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "ifg/formula.hpp"
#include "ifg/parser.hpp"
#include "ifg/schema.hpp"
#include "ifg/structure.hpp"

using namespace ifg;

// ==== parsing ================================================================

TEST_CASE("atoms", "[syntax]") {
  REQUIRE(parse("v0 = v1").root == atom_eq(TermRef::v(0), TermRef::v(1)));
  REQUIRE(parse("v0 = c1").root == atom_eq(TermRef::v(0), TermRef::c("c1")));
  REQUIRE(parse("v0 != v1").root == neg(atom_eq(TermRef::v(0), TermRef::v(1))));
  REQUIRE(parse("R(v0, c0)").root == atom_rel("R", {TermRef::v(0), TermRef::c("c0")}));
  REQUIRE(parse("Edge(v1)").root == atom_rel("Edge", {TermRef::v(1)}));
}

TEST_CASE("connectives and quantifiers", "[syntax]") {
  Formula f = parse("(v0 = v1 \\/{v0} v1 = c1)");
  REQUIRE(f.root == or_(atom_eq(TermRef::v(0), TermRef::v(1)),
                        atom_eq(TermRef::v(1), TermRef::c("c1")), 0b01));

  REQUIRE(parse("E v1/{v0} v0 = v1").root ==
          exists(1, 0b01, atom_eq(TermRef::v(0), TermRef::v(1))));
  REQUIRE(parse("A v0/{} E v1/{v0} v0 = v1").root ==
          forall(0, 0, exists(1, 0b01, atom_eq(TermRef::v(0), TermRef::v(1)))));
  REQUIRE(parse("~ v0 = c0").root == neg(atom_eq(TermRef::v(0), TermRef::c("c0"))));
  REQUIRE(parse("(v0 = c0 -> {} v0 = c0)").root.kind == FKind::Implies);
  REQUIRE(parse("(v0 = c0 <-> {} v0 = c0)").root.kind == FKind::Iff);

  SECTION("plain parentheses group") {
    REQUIRE(parse("((v0 = v1))") == parse("v0 = v1"));
  }

  SECTION("E and A can still start constant names") {
    REQUIRE(parse("E0 = v0").root == atom_eq(TermRef::c("E0"), TermRef::v(0)));
    REQUIRE(parse("Apple = v0").root.terms[0].constant == "Apple");
  }
}

TEST_CASE("liberal independence sets", "[syntax]") {
  // optional slash, bare indices, v-names, spaces
  std::string canon = pretty(parse("E v1/{v0} v0 = v1"));
  REQUIRE(pretty(parse("E v1 {v0} v0 = v1")) == canon);
  REQUIRE(pretty(parse("E v1/{0} v0 = v1")) == canon);
  REQUIRE(pretty(parse("E v1 { 0 } v0=v1")) == canon);
  REQUIRE(parse("(v0 = v1 \\/ {v0, 1} v1 = v0)").root.jset == 0b11);
}

TEST_CASE("canonical printing round-trips", "[syntax]") {
  std::vector<std::string> canonical = {
      "v0 = v1",
      "R(v0, c0)",
      "~ (v0 = c0)",
      "~ ~ (v0 = v0)",
      "(v0 = v0 \\/{} v1 = v1)",
      "(v0 = v1 /\\{v0} v1 = c1)",
      "(v0 = c0 ->/{} v0 = c1)",
      "(v0 = c0 <->/{v0, v1} v1 = c1)",
      "E v1/{v0} v0 = v1",
      "A v0/{} E v1/{v0} v0 = v1",
      "~ (v0 = v0 \\/{} v0 = c0)",
  };
  for (const std::string& s : canonical) {
    INFO(s);
    REQUIRE(pretty(parse(s)) == s);
    REQUIRE(parse(pretty(parse(s))) == parse(s));
  }
}

TEST_CASE("inequality prints in negation form", "[syntax]") {
  REQUIRE(pretty(parse("v0 != c0")) == "~ (v0 = c0)");
}

TEST_CASE("variable count inference", "[syntax]") {
  REQUIRE(parse("c0 = c0").vars == 1);  // minimum is one slot
  REQUIRE(parse("v0 = v0").vars == 1);
  REQUIRE(parse("v0 = v3").vars == 4);
  REQUIRE(parse("E v0/{v2} v0 = v0").vars == 3);  // independence sets count
  REQUIRE(parse("v0 = v0", 3).vars == 3);         // explicit override upward
  REQUIRE_THROWS_AS(parse("v1 = v1", 1), error);  // cannot override below use
}

TEST_CASE("parse errors carry positions", "[syntax]") {
  REQUIRE_THROWS_AS(parse(""), parse_error);
  REQUIRE_THROWS_AS(parse("(v0 = v1"), parse_error);
  REQUIRE_THROWS_AS(parse("v0 ="), parse_error);
  REQUIRE_THROWS_AS(parse("v0 = v1 v2"), parse_error);   // trailing input
  REQUIRE_THROWS_AS(parse("(v0 = v1 \\/ v1 = v0)"), parse_error);  // missing iset
  REQUIRE_THROWS_AS(parse("E v1/{v40} v0 = v0"), parse_error);

  try {
    parse("v0 = v1 v2");
  } catch (const parse_error& e) {
    REQUIRE(e.position == 8);  // points at the stray 'v2'
  }
}

// ==== desugaring =============================================================

TEST_CASE("sugar reduces to the core", "[syntax]") {
  FNode a = atom_eq(TermRef::v(0), TermRef::c("c0"));
  FNode b = atom_eq(TermRef::v(1), TermRef::c("c1"));

  REQUIRE(!is_core(parse("A v0/{} v0 = c0").root));
  REQUIRE(is_core(desugar(parse("A v0/{} v0 = c0")).root));

  SECTION("forall") {
    REQUIRE(desugar(forall(0, 0b10, a)) == neg(exists(0, 0b10, neg(a))));
  }
  SECTION("conjunction") {
    REQUIRE(desugar(and_(a, b, 0b01)) == neg(or_(neg(a), neg(b), 0b01)));
  }
  SECTION("implication") {
    REQUIRE(desugar(binary(FKind::Implies, a, b, 0)) == or_(neg(a), b, 0));
  }
  SECTION("iff is the conjunction of both implications") {
    FNode fwd = or_(neg(a), b, 0b01);
    FNode bwd = or_(neg(b), a, 0b01);
    REQUIRE(desugar(binary(FKind::Iff, a, b, 0b01)) ==
            neg(or_(neg(fwd), neg(bwd), 0b01)));
  }
  SECTION("core formulas are untouched") {
    Formula f = parse("E v1/{v0} ~ (v0 = v1 \\/{} v0 = c0)");
    REQUIRE(desugar(f) == f);
  }
}

// ==== validation =============================================================

TEST_CASE("validation against a structure", "[syntax]") {
  Structure two = Structure::named(2);
  REQUIRE_NOTHROW(validate(parse("v0 = c1"), two));
  REQUIRE_THROWS_AS(validate(parse("v0 = c7"), two), error);
  REQUIRE_THROWS_AS(validate(parse("R(v0)"), two), error);

  Structure graph = two;
  graph.relations["R"] = {2, {{0, 1}}};
  REQUIRE_NOTHROW(validate(parse("R(v0, v1)"), graph));
  REQUIRE_THROWS_AS(validate(parse("R(v0)"), graph), error);  // arity
}

// ==== team formulas ==========================================================

TEST_CASE("team formulas", "[syntax]") {
  Structure two = Structure::named(2);
  Dims d{2, 1};
  REQUIRE(pretty(formula_for_team(Team::empty_team(d), two)) == "~ (v0 = v0)");
  REQUIRE(pretty(formula_for_team(Team{d, 0b01}, two)) == "v0 = c0");
  REQUIRE(pretty(formula_for_team(Team{d, 0b11}, two)) == "(v0 = c0 \\/{} v0 = c1)");

  Dims d2{2, 2};
  REQUIRE(pretty(formula_for_team(Team{d2, 0b0001}, two)) == "(v0 = c0 /\\{} v1 = c0)");

  Structure unnamed;
  unnamed.universe = 2;
  REQUIRE_THROWS_AS(formula_for_team(Team{d, 0b01}, unnamed), error);
}

// ==== schemas and terms ======================================================

TEST_CASE("schema instantiation", "[syntax]") {
  // α_0 ∨_{v0} ¬α_1
  Schema s{s_or(s_fvar(0), s_neg(s_fvar(1)), 0b01), 2, 2};
  Formula f0 = parse("v0 = v1", 2);
  Formula f1 = parse("E v1/{v0} v0 = v1", 2);

  Formula got = instantiate(s, {f0, f1});
  REQUIRE(got.root == or_(f0.root, neg(f1.root), 0b01));
  REQUIRE(got.vars == 2);

  REQUIRE_THROWS_AS(instantiate(s, {f0}), error);                    // wrong count
  REQUIRE_THROWS_AS(instantiate(s, {f0, parse("v0 = v0")}), error);  // wrong N
}

TEST_CASE("schemas translate to terms", "[syntax]") {
  // ∃v0/{v1} (α_0 ∨_{v0} v0 = v1)  ↦  C(0,{1}) (X0 +{0} D01)
  Schema s{s_exists(0, 0b10, s_or(s_fvar(0), s_eq(0, 1), 0b01)), 2, 1};
  Term t = schema_to_term(s);
  REQUIRE(t.root == t_cyl(0, 0b10, t_plus(t_var(0), t_diag(0, 1), 0b01)));
  REQUIRE(pretty_term(t) == "C(0,{1})(X0 +{0} D01)");
  REQUIRE(t.term_vars == 1);

  REQUIRE(pretty_term(t_times(t_neg(t_var(2)), t_diag(1, 1), 0)) == "(~X2 *{} D11)");
}
