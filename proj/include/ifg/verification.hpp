#pragma once
// Mechanical verification of the landmark results: each verify_* function
// checks one headline claim about the logic or its algebras and returns a
// report of named sub-claims.  run_all() executes the whole battery.
//
//  1. matching pennies      slash-free vs slashed sentence over two elements
//  2. count table           suits and double suits for m = 0..5
//  3. generated carriers    atomic meanings generate the full algebras
//  4. interval diagrams     the order on 11 elements; the interval [Ω,1] on 55
//  5. kleene reduct         +_N, ·_N, ¬ form a Kleene algebra on both carriers
//  6. lattice identities    bounds, absorption, cylindrification trichotomy
//  7. subuniverses of the 11-element algebra, hereditary simplicity
//  8. congruences of the 55-element algebra, the subalgebra ⟨B⟩ and θ
//  9. iff terms             T_J(X,Y) = 1 characterizations
// 10. schema bridge         meanings commute with term evaluation
// 11. no iff term           θ kills every equality-detecting term over ⟨B⟩
// 12. semantic invariants   meanings of random formulas are double suits

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/catalog.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/formula.hpp"
#include "ifg/gen.hpp"
#include "ifg/parser.hpp"
#include "ifg/schema.hpp"
#include "ifg/semantics.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"
#include "ifg/ualg.hpp"

namespace ifg {

struct ClaimResult {
  std::string id;
  bool passed = false;
  std::string detail;  // counterexample or a short count summary
};

struct VerificationReport {
  std::string name;
  std::string description;
  std::vector<ClaimResult> claims;
  double seconds = 0;

  bool passed() const {
    for (const ClaimResult& c : claims)
      if (!c.passed) return false;
    return !claims.empty();
  }
};

namespace detail {

class Checker {
 public:
  Checker(std::string name, std::string description) {
    report_.name = std::move(name);
    report_.description = std::move(description);
    start_ = std::chrono::steady_clock::now();
  }

  void claim(const std::string& id, bool ok, const std::string& detail = "") {
    report_.claims.push_back({id, ok, detail});
  }

  // all-of claim over a sweep: pass iff no counterexample was recorded
  void sweep(const std::string& id, std::size_t checked, const std::string& counterexample) {
    report_.claims.push_back({id, counterexample.empty(),
                              counterexample.empty()
                                  ? std::to_string(checked) + " instances checked"
                                  : counterexample});
  }

  VerificationReport finish() {
    report_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

// primary catalog name (prefers "E1" over the alias "~E0")
inline std::string primary_name(const Catalog& cat, const AlgebraElement& x) {
  std::string best;
  for (const auto& [n, y] : cat.entries)
    if (y == x && (best.empty() || n.size() < best.size())) best = n;
  return best.empty() ? element_to_string(x) : best;
}

}  // namespace detail

// ---- 1. matching pennies -------------------------------------------------------

inline VerificationReport verify_matching_pennies() {
  detail::Checker ck("matching-pennies",
                     "hiding the first move flips a valid sentence to undetermined");

  Structure two = make_structure("2");
  Formula fo = parse("A v0/{} E v1/{} v0 != v1");
  Formula ifg = parse("A v0/{} E v1/{v0} v0 != v1");

  ck.claim("slash-free-true-on-2", sentence_status(fo, two) == SentenceStatus::True,
           "status " + to_string(sentence_status(fo, two)));
  ck.claim("slashed-undetermined-on-2",
           sentence_status(ifg, two) == SentenceStatus::Undetermined,
           "status " + to_string(sentence_status(ifg, two)));

  Structure one_el = Structure::named(1);
  ck.claim("slashed-false-on-1", sentence_status(ifg, one_el) == SentenceStatus::False,
           "status " + to_string(sentence_status(ifg, one_el)));

  // the open half: a team where v1 already differs from a constant v0 is a
  // trump even though the choice of v1 may not depend on v0
  Evaluator open_eval(parse("E v1/{v0} v0 != v1", 2), two);
  Dims d{2, 2};
  ck.claim("open-trump", open_eval.plus(team_from_string(d, "{00, 01}")));
  ck.claim("open-non-trump", !open_eval.plus(team_from_string(d, "{00, 10}")));

  return ck.finish();
}

// ---- 2. count table ------------------------------------------------------------

inline VerificationReport verify_count_table() {
  detail::Checker ck("count-table", "suit and double-suit counts for m = 0..5");
  const std::uint64_t want_suits[] = {1, 2, 5, 19, 167, 7580};
  const std::uint64_t want_pairs[] = {1, 3, 11, 55, 489, 17279};

  std::vector<CountRow> rows = count_table(5);
  for (int m = 0; m <= 5; ++m) {
    ck.claim("suits-m" + std::to_string(m), rows[m].suits == want_suits[m],
             "counted " + std::to_string(rows[m].suits));
    ck.claim("double-suits-m" + std::to_string(m), rows[m].double_suits == want_pairs[m],
             "counted " + std::to_string(rows[m].double_suits));
  }
  return ck.finish();
}

// ---- 3. generated carriers -----------------------------------------------------

inline VerificationReport verify_generated_carriers() {
  detail::Checker ck("generated-carriers",
                     "closing the atomic meanings under the signature yields every double suit");

  for (int m : {2, 3}) {
    Structure st = make_structure(std::to_string(m));
    Dims d{m, 1};
    std::vector<AlgebraElement> seeds;
    for (int c = 0; c < m; ++c)
      seeds.push_back(meaning(parse("v0 = c" + std::to_string(c)), st));
    std::vector<AlgebraElement> closed = generate_closure(d, seeds);
    std::vector<AlgebraElement> all = enumerate_double_suits(d);
    ck.claim("closure-size-" + std::to_string(m), closed.size() == all.size(),
             std::to_string(closed.size()) + " generated, " + std::to_string(all.size()) +
                 " enumerated");
    ck.claim("closure-carrier-" + std::to_string(m), closed == all);
  }
  return ck.finish();
}

// ---- 4. interval diagrams ------------------------------------------------------

inline VerificationReport verify_interval_diagrams() {
  detail::Checker ck("interval-diagrams",
                     "the order diagram on 11 elements and the interval above Ω on 55");

  // cover relation of a finite order
  auto covers = [](const std::vector<AlgebraElement>& elems) {
    std::vector<std::pair<int, int>> edges;
    int n = static_cast<int>(elems.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !leq(elems[i], elems[j])) continue;
        bool direct = true;
        for (int k = 0; k < n && direct; ++k)
          if (k != i && k != j && leq(elems[i], elems[k]) && leq(elems[k], elems[j]))
            direct = false;
        if (direct) edges.emplace_back(i, j);
      }
    return edges;
  };

  {
    Dims d{2, 1};
    std::vector<AlgebraElement> all = enumerate_double_suits(d);
    Catalog cat = catalog_for(d);
    std::set<std::pair<std::string, std::string>> got;
    for (auto [i, j] : covers(all))
      got.insert({detail::primary_name(cat, all[i]), detail::primary_name(cat, all[j])});

    std::set<std::pair<std::string, std::string>> want = {
        {"0", "~A"},    {"~A", "~B"},   {"~A", "~C"}, {"~B", "Omega"}, {"~B", "E1"},
        {"~C", "Omega"}, {"~C", "E0"},  {"Omega", "B"}, {"Omega", "C"}, {"E0", "B"},
        {"E1", "C"},    {"B", "A"},     {"C", "A"},   {"A", "1"},
    };
    std::string diff;
    for (const auto& e : want)
      if (!got.count(e)) diff += " missing " + e.first + "<" + e.second;
    for (const auto& e : got)
      if (!want.count(e)) diff += " extra " + e.first + "<" + e.second;
    ck.claim("order-11-edges", got == want,
             diff.empty() ? "14 covering pairs" : diff);
  }

  {
    Dims d{3, 1};
    std::vector<AlgebraElement> interval;  // [Ω, 1] = suits paired with {∅}
    for (const AlgebraElement& x : enumerate_double_suits(d))
      if (leq(omega(d), x)) interval.push_back(x);
    ck.claim("interval-vertices", interval.size() == 19,
             std::to_string(interval.size()) + " elements above Ω");

    // vertices and covers by the bitmask of the suit (bit t = team t present)
    auto mask_of = [](const AlgebraElement& x) {
      return static_cast<std::uint32_t>(x.plus.words[0]);
    };
    std::set<std::uint32_t> got_masks;
    for (const AlgebraElement& x : interval) got_masks.insert(mask_of(x));
    const std::set<std::uint32_t> want_masks = {0x01, 0x03, 0x05, 0x11, 0x07, 0x13, 0x15,
                                                0x0F, 0x17, 0x33, 0x55, 0x1F, 0x37, 0x57,
                                                0x3F, 0x5F, 0x77, 0x7F, 0xFF};
    ck.claim("interval-vertex-masks", got_masks == want_masks);

    std::set<std::pair<std::uint32_t, std::uint32_t>> got_edges;
    for (auto [i, j] : covers(interval))
      got_edges.insert({mask_of(interval[i]), mask_of(interval[j])});
    std::set<std::pair<std::uint32_t, std::uint32_t>> want_edges;
    auto fan = [&](std::uint32_t lo, std::initializer_list<std::uint32_t> his) {
      for (std::uint32_t hi : his) want_edges.insert({lo, hi});
    };
    fan(0x01, {0x03, 0x05, 0x11});
    fan(0x03, {0x07, 0x13});
    fan(0x05, {0x07, 0x15});
    fan(0x11, {0x13, 0x15});
    fan(0x07, {0x0F, 0x17});
    fan(0x13, {0x17, 0x33});
    fan(0x15, {0x17, 0x55});
    fan(0x0F, {0x1F});
    fan(0x17, {0x1F, 0x37, 0x57});
    fan(0x33, {0x37});
    fan(0x55, {0x57});
    fan(0x1F, {0x3F, 0x5F});
    fan(0x37, {0x3F, 0x77});
    fan(0x57, {0x5F, 0x77});
    fan(0x3F, {0x7F});
    fan(0x5F, {0x7F});
    fan(0x77, {0x7F});
    fan(0x7F, {0xFF});
    ck.claim("interval-edges", got_edges == want_edges,
             std::to_string(got_edges.size()) + " covering pairs, 31 expected");

    // [Ω, 1) is generated from the three flat suits on two-element teams by
    // the unhidden join and meet, and is the 18-element free distributive
    // lattice on them
    VarSet nset = full_varset(d.vars);
    std::vector<AlgebraElement> gens = {
        {TeamFamily::powerset(Team{d, 0b011}), TeamFamily::just_empty(d)},
        {TeamFamily::powerset(Team{d, 0b101}), TeamFamily::just_empty(d)},
        {TeamFamily::powerset(Team{d, 0b110}), TeamFamily::just_empty(d)},
    };
    std::vector<AlgebraElement> closed = gens;
    auto add = [&](const AlgebraElement& x) {
      if (std::find(closed.begin(), closed.end(), x) == closed.end()) closed.push_back(x);
    };
    for (std::size_t i = 0; i < closed.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        add(plus(closed[i], closed[j], nset));
        add(times(closed[i], closed[j], nset));
      }
    ck.claim("interval-below-top-generated", closed.size() == 18,
             std::to_string(closed.size()) + " elements from the three flat generators");
    bool proper = true;
    for (const AlgebraElement& x : closed)
      if (!leq(omega(d), x) || x == one(d)) proper = false;
    ck.claim("interval-below-top-proper", proper && closed.size() + 1 == interval.size());
  }

  return ck.finish();
}

// ---- 5. kleene reduct ----------------------------------------------------------

inline VerificationReport verify_kleene_reduct() {
  detail::Checker ck("kleene-reduct",
                     "unhidden join, meet and negation form Kleene algebras");

  for (int m : {2, 3}) {
    std::vector<AlgebraElement> carrier = enumerate_double_suits(Dims{m, 1});
    KleeneReport rep = check_kleene(carrier);
    ck.claim("kleene-" + std::to_string(carrier.size()), rep.passed, rep.failure);
  }

  // sanity of the checker itself: a pair meeting off the empty team breaks
  // the Kleene axiom, and the checker names the violation
  Dims d{2, 1};
  AlgebraElement bad{TeamFamily::all(d), TeamFamily::all(d)};
  std::vector<AlgebraElement> tainted = {zero(d), one(d), omega(d), bad};
  KleeneReport rep = check_kleene(tainted);
  ck.claim("kleene-detects-violation",
           !rep.passed && rep.failure.find("Kleene") != std::string::npos, rep.failure);

  return ck.finish();
}

// ---- 6. lattice identities -----------------------------------------------------

inline VerificationReport verify_lattice_identities() {
  detail::Checker ck("lattice-identities",
                     "bound laws, absorption and the cylindrification trichotomy");

  {
    Dims d{3, 1};
    std::vector<AlgebraElement> all = enumerate_double_suits(d);
    std::size_t checked = 0;
    std::string bad_bounds, bad_pointwise;
    for (const AlgebraElement& x : all)
      for (VarSet j = 0; j <= 1; ++j) {
        ++checked;
        if (bad_bounds.empty() &&
            !(plus(x, zero(d), j) == x && plus(x, one(d), j) == one(d) &&
              times(x, one(d), j) == x && times(x, zero(d), j) == zero(d)))
          bad_bounds = "bounds fail at " + element_to_string(x);
      }
    ck.sweep("bound-laws", checked, bad_bounds);

    for (const AlgebraElement& x : all)
      for (const AlgebraElement& y : all)
        if (bad_pointwise.empty()) {
          AlgebraElement pw{x.plus | y.plus, x.minus & y.minus};
          if (!(plus(x, y, 1) == pw))
            bad_pointwise = "unhidden join is not pointwise at " + element_to_string(x) +
                            ", " + element_to_string(y);
        }
    ck.sweep("unhidden-join-pointwise", all.size() * all.size(), bad_pointwise);

    std::size_t pairs = 0;
    std::string bad_low, bad_flat;
    for (const AlgebraElement& x : all)
      for (const AlgebraElement& y : all)
        for (VarSet j = 0; j <= 1; ++j) {
          if (leq(x, omega(d)) && leq(x, y)) {
            ++pairs;
            if (bad_low.empty() && !(plus(x, y, j) == y))
              bad_low = "absorption below Ω fails at " + element_to_string(x) + " + " +
                        element_to_string(y);
          }
          if (leq(x, y) && classify(y).flat) {
            if (bad_flat.empty() && !(plus(x, y, j) == y))
              bad_flat = "flat absorption fails at " + element_to_string(x) + " + " +
                         element_to_string(y);
          }
        }
    ck.sweep("absorption-below-omega", pairs, bad_low);
    ck.sweep("absorption-into-flat", all.size() * all.size() * 2, bad_flat);
  }

  // full cylindrification collapses every element to 0, Ω or 1
  std::size_t checked = 0;
  std::string bad;
  for (Dims d : {Dims{2, 1}, Dims{3, 1}, Dims{2, 2}}) {
    for (const AlgebraElement& x : enumerate_double_suits(d)) {
      AlgebraElement want = x == zero(d) ? zero(d) : leq(x, omega(d)) ? omega(d) : one(d);
      // every variable once, in both orders, under every choice of slash sets
      for (VarSet j0 = 0; j0 <= full_varset(d.vars); ++j0)
        for (VarSet j1 = 0; j1 <= full_varset(d.vars); ++j1) {
          ++checked;
          AlgebraElement up = cyl(0, j0, x), down = x;
          for (int v = 1; v < d.vars; ++v) up = cyl(v, j1, up);
          for (int v = d.vars - 1; v >= 1; --v) down = cyl(v, j1, down);
          down = cyl(0, j0, down);
          if (bad.empty() && !(up == want && down == want))
            bad = "trichotomy fails at " + element_to_string(x);
        }
    }
  }
  ck.sweep("cylindrification-trichotomy", checked, bad);

  return ck.finish();
}

// ---- 7. subuniverses of the 11-element algebra ---------------------------------

inline VerificationReport verify_two_element_subuniverses() {
  detail::Checker ck("subuniverses-11", "the 11-element algebra is hereditarily simple");

  Dims d{2, 1};
  FiniteAlgebra alg = FiniteAlgebra::full_double_suit_algebra(d);
  std::vector<std::vector<int>> subs = alg.enumerate_subuniverses();
  ck.claim("exactly-9", subs.size() == 9, std::to_string(subs.size()) + " subuniverses");

  std::multiset<std::size_t> sizes;
  for (const auto& s : subs) sizes.insert(s.size());
  ck.claim("sizes", sizes == std::multiset<std::size_t>{2, 3, 5, 5, 5, 7, 7, 9, 11});

  std::string bad;
  for (const auto& s : subs)
    if (bad.empty() && s.size() >= 2 && !alg.subalgebra(s).is_simple())
      bad = "subuniverse of size " + std::to_string(s.size()) + " is not simple";
  ck.sweep("each-simple", subs.size(), bad);
  ck.claim("hereditarily-simple", alg.is_hereditarily_simple());

  return ck.finish();
}

// ---- 8. congruences of the 55-element algebra ----------------------------------

inline VerificationReport verify_three_element_congruences() {
  detail::Checker ck("congruences-55",
                     "the 55-element algebra is simple; its subalgebra ⟨B⟩ is not");

  Dims d{3, 1};
  FiniteAlgebra alg = FiniteAlgebra::full_double_suit_algebra(d);
  Catalog cat = catalog_for(d);

  int total = 0, pairs = 0;
  for (int a = 0; a < alg.size(); ++a)
    for (int b = a + 1; b < alg.size(); ++b) {
      ++pairs;
      if (FiniteAlgebra::is_total(alg.principal_congruence(a, b))) ++total;
    }
  ck.claim("all-principal-total", pairs == 1485 && total == pairs,
           std::to_string(total) + " of " + std::to_string(pairs) + " total");

  std::vector<int> gen_b = alg.generated_subuniverse({alg.index_of(*cat.find("B"))});
  ck.claim("gen-b-size", gen_b.size() == 7, std::to_string(gen_b.size()) + " elements");

  const AlgebraElement &a = *cat.find("A"), &b = *cat.find("B");
  struct Identity {
    const char* id;
    AlgebraElement lhs;
    AlgebraElement rhs;
  };
  const AlgebraElement na = neg(a), nb = neg(b);
  std::vector<Identity> ids;
  auto both = [&](const char* n0, const char* n1, const AlgebraElement& x,
                  const AlgebraElement& y, const AlgebraElement& want_e,
                  const AlgebraElement& want_h) {
    ids.push_back({n0, plus(x, y, 0), want_e});
    ids.push_back({n1, plus(x, y, 1), want_h});
  };
  both("A+A=A", "A+'A=A", a, a, a, a);
  both("A+B=A", "A+'B=A", a, b, a, a);
  both("B+B=A", "B+'B=B", b, b, a, b);
  both("A+~A=A", "A+'~A=A", a, na, a, a);
  both("A+~B=A", "A+'~B=A", a, nb, a, a);
  both("B+~A=B", "B+'~A=B", b, na, b, b);
  both("B+~B=B", "B+'~B=B", b, nb, b, b);
  both("~A+~A=~A", "~A+'~A=~A", na, na, na, na);
  both("~A+~B=~B", "~A+'~B=~B", na, nb, nb, nb);
  both("~B+~B=~B", "~B+'~B=~B", nb, nb, nb, nb);
  bool all_ok = true;
  std::string bad;
  for (const Identity& i : ids)
    if (!(i.lhs == i.rhs)) {
      all_ok = false;
      bad += std::string(" ") + i.id;
    }
  ck.claim("join-identities-20", all_ok && ids.size() == 20,
           all_ok ? "20 identities hold" : "failing:" + bad);

  FiniteAlgebra sub = alg.subalgebra(gen_b);
  auto at = [&](const char* n) { return sub.index_of(*cat.find(n)); };
  std::vector<int> theta = sub.principal_congruence(at("A"), at("B"));
  ck.claim("theta-congruence", sub.is_congruence(theta));
  ck.claim("theta-nontrivial", theta[at("A")] == theta[at("B")] && at("A") != at("B"));
  ck.claim("theta-not-total", !FiniteAlgebra::is_total(theta));
  ck.claim("sub-not-simple", !sub.is_simple());
  ck.claim("not-hereditarily-simple", !alg.is_hereditarily_simple());

  return ck.finish();
}

// ---- 9. iff terms --------------------------------------------------------------

inline VerificationReport verify_iff_terms() {
  detail::Checker ck("iff-terms", "when the biconditional term evaluates to 1");

  for (int m : {2, 3}) {
    Dims d{m, 1};
    std::vector<AlgebraElement> all = enumerate_double_suits(d);
    std::string tag = "-" + std::to_string(all.size());

    int perfect = 0;
    for (const AlgebraElement& x : all)
      if (classify(x).perfect) ++perfect;
    if (m == 2)
      ck.claim("perfect-count" + tag, perfect == 4, std::to_string(perfect) + " perfect");

    auto iff_term = [&](const AlgebraElement& x, const AlgebraElement& y, VarSet j) {
      return times(plus(neg(x), y, j), plus(x, neg(y), j), j);
    };

    std::string bad_e, bad_h;
    for (const AlgebraElement& x : all)
      for (const AlgebraElement& y : all) {
        bool hidden_one = iff_term(x, y, 0) == one(d);
        bool want_hidden = x == y && classify(x).perfect;
        if (bad_e.empty() && hidden_one != want_hidden)
          bad_e = "T_∅ misfires at " + element_to_string(x) + ", " + element_to_string(y);

        bool open_one = iff_term(x, y, 1) == one(d);
        bool want_open = x == y && (x == zero(d) || x == one(d));
        if (bad_h.empty() && open_one != want_open)
          bad_h = "T_N misfires at " + element_to_string(x) + ", " + element_to_string(y);
      }
    ck.sweep("iff-hidden" + tag, all.size() * all.size(), bad_e);
    ck.sweep("iff-unhidden" + tag, all.size() * all.size(), bad_h);
  }

  return ck.finish();
}

// ---- 10. schema bridge ---------------------------------------------------------

inline VerificationReport verify_schema_bridge(std::uint64_t seed = 2026, int trials = 100) {
  detail::Checker ck("schema-bridge",
                     "meanings of instantiated schemas equal term values of meanings");

  Structure st = make_structure("2");
  std::mt19937_64 rng(seed);
  std::string bad;
  int done = 0;
  for (int t = 0; t < trials; ++t) {
    int vars = 1 + static_cast<int>(rng() % 2);  // one or two variables
    int slots = 1 + static_cast<int>(rng() % 3);
    Schema schema = random_schema(rng, vars, slots, 1 + static_cast<int>(rng() % 3));

    GenOptions opt;
    opt.vars = vars;
    opt.max_depth = 2;
    opt.constants = {"c0", "c1"};
    std::vector<Formula> leaves;
    std::vector<AlgebraElement> args;
    for (int s = 0; s < slots; ++s) {
      leaves.push_back(random_formula(rng, opt));
      args.push_back(meaning(leaves.back(), st));
    }

    AlgebraElement lhs = meaning(instantiate(schema, leaves), st);
    AlgebraElement rhs = eval_term(schema_to_term(schema), args, Dims{2, vars});
    ++done;
    if (bad.empty() && !(lhs == rhs))
      bad = "trial " + std::to_string(t) + ": meaning " + element_to_string(lhs) +
            " vs term " + element_to_string(rhs);
  }
  ck.sweep("bridge-trials", done, bad);

  return ck.finish();
}

// ---- 11. no iff term -----------------------------------------------------------

// Sweep all binary terms of bounded depth over the subalgebra ⟨B⟩, as
// functions ⟨B⟩² → ⟨B⟩.  A term detecting equality would need value 1 on the
// whole diagonal and something else at (A, B); the congruence θ collapsing
// A with B while fixing 1 makes that impossible, and the sweep confirms it.
inline VerificationReport verify_no_iff_term(int max_depth = 3) {
  detail::Checker ck("no-iff-term",
                     "no bounded-depth term over ⟨B⟩ is 1 exactly on the diagonal");

  Dims d{3, 1};
  FiniteAlgebra alg = FiniteAlgebra::full_double_suit_algebra(d);
  Catalog cat = catalog_for(d);
  FiniteAlgebra sub =
      alg.subalgebra(alg.generated_subuniverse({alg.index_of(*cat.find("B"))}));
  const int n = sub.size();
  auto at = [&](const char* name) { return sub.index_of(*cat.find(name)); };
  const int ia = at("A"), ib = at("B"), i1 = at("1");

  std::vector<int> theta = sub.principal_congruence(ia, ib);
  ck.claim("theta-joins-A-B", theta[ia] == theta[ib] && ia != ib);
  bool one_alone = true;
  for (int i = 0; i < n; ++i)
    if (theta[i] == theta[i1] && i != i1) one_alone = false;
  ck.claim("theta-class-of-1-is-1", one_alone);

  // function tables t : ⟨B⟩² → ⟨B⟩, one byte per argument pair
  using Table = std::vector<std::uint8_t>;
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  auto constant = [&](int v) { return Table(cells, static_cast<std::uint8_t>(v)); };
  Table proj_x(cells), proj_y(cells);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      proj_x[x * n + y] = static_cast<std::uint8_t>(x);
      proj_y[x * n + y] = static_cast<std::uint8_t>(y);
    }

  std::vector<const std::vector<int>*> utabs, btabs;
  for (std::size_t op = 0; op < sub.unaries().size(); ++op)
    utabs.push_back(&sub.unary_table(op));
  for (std::size_t op = 0; op < sub.binaries().size(); ++op)
    btabs.push_back(&sub.binary_table(op));

  auto apply_u = [&](const std::vector<int>& t, const Table& a) {
    Table r(cells);
    for (std::size_t i = 0; i < cells; ++i) r[i] = static_cast<std::uint8_t>(t[a[i]]);
    return r;
  };
  auto apply_b = [&](const std::vector<int>& t, const Table& a, const Table& b) {
    Table r(cells);
    for (std::size_t i = 0; i < cells; ++i)
      r[i] = static_cast<std::uint8_t>(t[a[i] * n + b[i]]);
    return r;
  };

  // diagonal all 1 but (A, B) ≠ 1 would be an equality detector
  long long diag_hits = 0;
  std::string detector;
  auto inspect = [&](const Table& t) {
    for (int x = 0; x < n; ++x)
      if (t[x * n + x] != i1) return;
    ++diag_hits;
    if (t[ia * n + ib] != i1 && detector.empty())
      detector = "term separates (A, B) from the diagonal";
  };

  // distinct tables by depth; depth-(max) candidates are inspected and dropped
  std::set<Table> seen;
  std::vector<Table> frontier;  // all distinct tables of depth < max_depth
  auto keep = [&](const Table& t, bool store) {
    inspect(t);
    if (store && seen.insert(t).second) frontier.push_back(t);
  };

  std::vector<Table> leaves = {proj_x, proj_y, constant(sub.index_of(zero(d))),
                               constant(sub.index_of(one(d)))};
  for (const Table& t : leaves) keep(t, true);

  std::size_t level_start = 0, terms_seen = leaves.size();
  for (int depth = 1; depth <= max_depth; ++depth) {
    bool store = depth < max_depth;
    std::size_t level_end = frontier.size();
    std::vector<Table> fresh;
    auto emit = [&](Table t) {
      ++terms_seen;
      inspect(t);
      if (store && seen.insert(t).second) fresh.push_back(std::move(t));
    };
    // at least one argument from the previous level keeps depths exact
    for (const std::vector<int>* t : utabs)
      for (std::size_t i = level_start; i < level_end; ++i) emit(apply_u(*t, frontier[i]));
    for (const std::vector<int>* t : btabs)
      for (std::size_t i = 0; i < level_end; ++i)
        for (std::size_t j = level_start; j < level_end; ++j) {
          emit(apply_b(*t, frontier[i], frontier[j]));
          if (i < level_start) emit(apply_b(*t, frontier[j], frontier[i]));
        }
    level_start = level_end;
    for (Table& t : fresh) frontier.push_back(std::move(t));
  }

  ck.claim("no-equality-detector", detector.empty(),
           detector.empty() ? std::to_string(terms_seen) + " terms swept, " +
                                  std::to_string(diag_hits) + " constant 1 on the diagonal"
                            : detector);

  return ck.finish();
}

// ---- 12. semantic invariants ---------------------------------------------------

inline VerificationReport verify_semantics_invariants(std::uint64_t seed = 2026,
                                                      int cases = 500) {
  detail::Checker ck("semantic-invariants",
                     "random formulas have double-suit meanings with the expected shape");

  Structure st = make_structure("2");
  std::mt19937_64 rng(seed);
  std::string bad_suit, bad_empty, bad_status, bad_flat;
  int flat_cases = 0;

  for (int t = 0; t < cases; ++t) {
    GenOptions opt;
    opt.vars = 1 + static_cast<int>(rng() % 2);
    opt.max_depth = 3;
    opt.constants = {"c0", "c1"};
    opt.allow_sugar = (t % 2) == 0;
    opt.slash_free = (t % 4) == 1;  // a quarter of the cases are slash-free
    Formula f = random_formula(rng, opt);
    AlgebraElement x = meaning(f, st);
    Dims d = x.dims();

    Classification cls = classify(x);
    if (bad_suit.empty() && !cls.double_suit)
      bad_suit = "meaning of " + pretty(f) + " is not a double suit";
    if (bad_empty.empty() && !(x.plus.test(0) && x.minus.test(0)))
      bad_empty = "empty team missing for " + pretty(f);

    // the full team is never both a trump and a cotrump
    std::uint32_t full = Team::full(d).bits;
    if (bad_status.empty() && x.plus.test(full) && x.minus.test(full))
      bad_status = "full team on both sides for " + pretty(f);

    if (opt.slash_free) {
      ++flat_cases;
      AlgebraElement flipped = neg(x);
      if (bad_flat.empty() && !(cls.flat && classify(flipped).flat))
        bad_flat = "slash-free " + pretty(f) + " has a non-flat meaning";
    }
  }

  ck.sweep("double-suit", cases, bad_suit);
  ck.sweep("empty-team-everywhere", cases, bad_empty);
  ck.sweep("never-both-on-full", cases, bad_status);
  ck.sweep("slash-free-flat", flat_cases, bad_flat);

  return ck.finish();
}

// ---- battery -------------------------------------------------------------------

inline std::vector<VerificationReport> run_all(std::uint64_t seed = 2026) {
  return {
      verify_matching_pennies(),
      verify_count_table(),
      verify_generated_carriers(),
      verify_interval_diagrams(),
      verify_kleene_reduct(),
      verify_lattice_identities(),
      verify_two_element_subuniverses(),
      verify_three_element_congruences(),
      verify_iff_terms(),
      verify_schema_bridge(seed),
      verify_no_iff_term(),
      verify_semantics_invariants(seed),
  };
}

}  // namespace ifg
