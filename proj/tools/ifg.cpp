// Command-line laboratory: parse and evaluate formulas, compute meanings,
// work in the algebra of team-family pairs, count suits, explore
// subuniverses and congruences, and run the verification battery.
//
// Exit codes: 0 success, 1 verification failure or internal error, 2 bad
// usage or unparsable input, 3 a resource guard refused the computation.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ifg/algebra.hpp"
#include "ifg/algebra_expr.hpp"
#include "ifg/catalog.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/parser.hpp"
#include "ifg/semantics.hpp"
#include "ifg/structure.hpp"
#include "ifg/team.hpp"
#include "ifg/ualg.hpp"
#include "ifg/verification.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string text;          // formula or expression argument
  std::string structure = "2";
  std::string team;
  std::string format = "text";
  std::string seed_a, seed_b;        // congruence pair
  std::vector<std::string> generate; // subalgebra seeds for congruence
  int vars = 0;
  int max_m = 5;
  int guard = ifg::limits::meaning_valuations;
  int criterion = 0;
  std::uint64_t seed = 2026;
  bool json_out() const { return format == "json"; }
};

std::string element_name(const ifg::Catalog& cat, const ifg::AlgebraElement& x) {
  return ifg::detail::primary_name(cat, x);  // falls back to raw printing
}

json element_json(const ifg::Catalog& cat, const ifg::AlgebraElement& x) {
  auto teams = [&](const ifg::TeamFamily& fam) {
    json arr = json::array();
    for (std::uint32_t t : fam.maximal_teams())
      arr.push_back(ifg::team_to_string(ifg::Team{x.dims(), t}));
    return arr;
  };
  ifg::Classification cls = ifg::classify(x);
  json j{{"element", ifg::element_to_string(x)},
         {"maximal_trumps", teams(x.plus)},
         {"maximal_cotrumps", teams(x.minus)},
         {"double_suit", cls.double_suit},
         {"flat", cls.flat},
         {"perfect", cls.perfect}};
  std::string name = cat.name_of(x).empty() ? "" : element_name(cat, x);
  if (!name.empty()) j["name"] = name;
  return j;
}

void emit(const json& j) { std::printf("%s\n", j.dump(2).c_str()); }

int cmd_parse(const Options& o) {
  ifg::Formula f = ifg::parse(o.text, o.vars);
  if (o.json_out()) {
    emit(json{{"input", o.text},
              {"vars", f.vars},
              {"pretty", ifg::pretty(f)},
              {"core", ifg::pretty(ifg::desugar(f))}});
  } else {
    std::printf("%s\n", ifg::pretty(f).c_str());
  }
  return 0;
}

int cmd_eval(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::Evaluator ev(ifg::parse(o.text, o.vars), st);
  ifg::Team team = ifg::team_from_string(ev.dims(), o.team);
  bool plus = ev.plus(team), minus = ev.minus(team);
  if (o.json_out()) {
    emit(json{{"formula", o.text},
              {"structure", st.name},
              {"team", ifg::team_to_string(team)},
              {"plus", plus},
              {"minus", minus}});
  } else {
    std::printf("team %s  plus: %s  minus: %s\n", ifg::team_to_string(team).c_str(),
                plus ? "yes" : "no", minus ? "yes" : "no");
  }
  return 0;
}

int cmd_meaning(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::Formula f = ifg::parse(o.text, o.vars);
  ifg::AlgebraElement x = ifg::meaning(f, st, o.guard);
  ifg::Catalog cat = ifg::catalog_for(x.dims());
  if (o.json_out()) {
    json j = element_json(cat, x);
    j["formula"] = o.text;
    j["structure"] = st.name;
    j["vars"] = f.vars;
    emit(j);
  } else {
    std::string name = cat.name_of(x).empty() ? "" : " = " + element_name(cat, x);
    std::printf("%s%s\n", ifg::element_to_string(x).c_str(), name.c_str());
  }
  return 0;
}

int cmd_status(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::SentenceStatus s = ifg::sentence_status(ifg::parse(o.text, o.vars), st);
  if (o.json_out()) {
    emit(json{{"formula", o.text}, {"structure", st.name}, {"status", ifg::to_string(s)}});
  } else {
    std::printf("%s\n", ifg::to_string(s).c_str());
  }
  return 0;
}

int cmd_algebra(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::Dims d{static_cast<int>(st.universe), o.vars > 0 ? o.vars : 1};
  ifg::Catalog cat = ifg::catalog_for(d);
  ifg::ExprContext ctx{d, &cat, &st};
  ifg::AlgebraElement x = ifg::parse_algebra_expr(o.text, ctx);
  if (o.json_out()) {
    json j = element_json(cat, x);
    j["expression"] = o.text;
    emit(j);
  } else {
    std::string name = cat.name_of(x).empty() ? "" : " = " + element_name(cat, x);
    std::printf("%s%s\n", ifg::element_to_string(x).c_str(), name.c_str());
  }
  return 0;
}

int cmd_count_suits(const Options& o) {
  std::vector<ifg::CountRow> rows = ifg::count_table(o.max_m);
  if (o.json_out()) {
    json arr = json::array();
    for (const ifg::CountRow& r : rows)
      arr.push_back(json{{"m", r.m},
                         {"teams", r.teams},
                         {"suits", r.suits},
                         {"double_suits", r.double_suits}});
    emit(json{{"rows", arr}});
  } else {
    std::printf("%3s %6s %8s %14s\n", "m", "teams", "suits", "double suits");
    for (const ifg::CountRow& r : rows)
      std::printf("%3d %6llu %8llu %14llu\n", r.m,
                  static_cast<unsigned long long>(r.teams),
                  static_cast<unsigned long long>(r.suits),
                  static_cast<unsigned long long>(r.double_suits));
  }
  return 0;
}

int cmd_subalgebras(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::Dims d{static_cast<int>(st.universe), o.vars > 0 ? o.vars : 1};
  ifg::FiniteAlgebra alg = ifg::FiniteAlgebra::full_double_suit_algebra(d);
  ifg::Catalog cat = ifg::catalog_for(d);
  std::vector<std::vector<int>> subs = alg.enumerate_subuniverses();

  json arr = json::array();
  for (const std::vector<int>& members : subs) {
    json names = json::array();
    std::string line;
    for (int i : members) {
      std::string n = element_name(cat, alg.element(i));
      names.push_back(n);
      line += (line.empty() ? "" : ", ") + n;
    }
    if (o.json_out()) {
      arr.push_back(json{{"size", members.size()}, {"elements", names}});
    } else {
      std::printf("%2zu  { %s }\n", members.size(), line.c_str());
    }
  }
  if (o.json_out())
    emit(json{{"structure", st.name}, {"count", subs.size()}, {"subuniverses", arr}});
  else
    std::printf("%zu subuniverses\n", subs.size());
  return 0;
}

int cmd_congruence(const Options& o) {
  ifg::Structure st = ifg::make_structure(o.structure);
  ifg::Dims d{static_cast<int>(st.universe), o.vars > 0 ? o.vars : 1};
  ifg::Catalog cat = ifg::catalog_for(d);
  ifg::ExprContext ctx{d, &cat, &st};

  ifg::FiniteAlgebra full = ifg::FiniteAlgebra::full_double_suit_algebra(d);
  ifg::FiniteAlgebra* alg = &full;
  ifg::FiniteAlgebra sub = full;  // replaced when --generate is given
  if (!o.generate.empty()) {
    std::vector<int> seeds;
    for (const std::string& g : o.generate)
      seeds.push_back(full.index_of(ifg::parse_algebra_expr(g, ctx)));
    sub = full.subalgebra(full.generated_subuniverse(seeds));
    alg = &sub;
  }

  int a = alg->index_of(ifg::parse_algebra_expr(o.seed_a, ctx));
  int b = alg->index_of(ifg::parse_algebra_expr(o.seed_b, ctx));
  if (a < 0 || b < 0) throw ifg::error("an argument lies outside the algebra");

  std::vector<int> label = alg->principal_congruence(a, b);
  std::vector<std::vector<int>> blocks(alg->size());
  for (int i = 0; i < alg->size(); ++i) blocks[label[i]].push_back(i);

  json jblocks = json::array();
  int nontrivial = 0;
  for (const std::vector<int>& block : blocks) {
    if (block.empty()) continue;
    if (block.size() > 1) ++nontrivial;
    json names = json::array();
    std::string line;
    for (int i : block) {
      std::string n = element_name(cat, alg->element(i));
      names.push_back(n);
      line += (line.empty() ? "" : ", ") + n;
    }
    if (o.json_out())
      jblocks.push_back(names);
    else if (block.size() > 1)
      std::printf("{ %s }\n", line.c_str());
  }
  bool total = ifg::FiniteAlgebra::is_total(label);
  if (o.json_out()) {
    emit(json{{"algebra_size", alg->size()},
              {"blocks", jblocks},
              {"total", total},
              {"trivial", nontrivial == 0}});
  } else {
    std::printf("%s on %d elements\n",
                total ? "total" : nontrivial == 0 ? "trivial" : "proper nontrivial",
                alg->size());
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<ifg::VerificationReport> reports;
  if (o.criterion > 0) {
    std::vector<ifg::VerificationReport> all = ifg::run_all(o.seed);
    if (o.criterion > static_cast<int>(all.size()))
      throw ifg::error("criteria run from 1 to " + std::to_string(all.size()));
    reports.push_back(all[o.criterion - 1]);
  } else {
    reports = ifg::run_all(o.seed);
  }

  bool all_passed = true;
  json jreports = json::array();
  for (const ifg::VerificationReport& rep : reports) {
    if (!rep.passed()) all_passed = false;
    if (o.json_out()) {
      json claims = json::array();
      for (const ifg::ClaimResult& c : rep.claims)
        claims.push_back(json{{"id", c.id}, {"passed", c.passed}, {"detail", c.detail}});
      jreports.push_back(json{{"name", rep.name},
                              {"description", rep.description},
                              {"passed", rep.passed()},
                              {"seconds", rep.seconds},
                              {"claims", claims}});
    } else {
      std::printf("%s %s (%.2fs)\n", rep.passed() ? "PASS" : "FAIL", rep.name.c_str(),
                  rep.seconds);
      for (const ifg::ClaimResult& c : rep.claims)
        if (!c.passed) std::printf("     %s: %s\n", c.id.c_str(), c.detail.c_str());
    }
  }
  if (o.json_out()) emit(json{{"passed", all_passed}, {"reports", jreports}});
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"laboratory for independence-friendly logic over finite structures"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_structure = [&](CLI::App* cmd) {
    cmd->add_option("--structure", o.structure,
                    "builtin name (\"2\", \"3\") or a JSON file path");
  };
  auto add_vars = [&](CLI::App* cmd) {
    cmd->add_option("--vars", o.vars, "number of variable slots (inferred when 0)");
  };

  CLI::App* parse = app.add_subcommand("parse", "parse a formula and print it back");
  parse->add_option("formula", o.text)->required();
  add_vars(parse);
  add_format(parse);

  CLI::App* eval = app.add_subcommand("eval", "two-sided satisfaction on a team");
  eval->add_option("formula", o.text)->required();
  eval->add_option("--team", o.team, "team such as \"{00, 01}\"")->required();
  add_structure(eval);
  add_vars(eval);
  add_format(eval);

  CLI::App* mean = app.add_subcommand("meaning", "meaning of a formula as a pair of suits");
  mean->add_option("formula", o.text)->required();
  mean->add_option("--guard", o.guard, "valuation-count guard for meanings");
  add_structure(mean);
  add_vars(mean);
  add_format(mean);

  CLI::App* status = app.add_subcommand("status", "truth status of a sentence");
  status->add_option("formula", o.text)->required();
  add_structure(status);
  add_vars(status);
  add_format(status);

  CLI::App* alg = app.add_subcommand("algebra", "evaluate an element expression");
  alg->add_option("expr", o.text, "expression such as \"B +{0} C\" or \"[[v0 = c0]]\"")
      ->required();
  add_structure(alg);
  add_vars(alg);
  add_format(alg);

  CLI::App* count = app.add_subcommand("count-suits", "suit counts for m = 0..max");
  count->add_option("--max-m", o.max_m, "largest universe size (at most 5)");
  add_format(count);

  CLI::App* subs = app.add_subcommand("subalgebras", "enumerate all subuniverses");
  add_structure(subs);
  add_vars(subs);
  add_format(subs);

  CLI::App* cong = app.add_subcommand("congruence", "principal congruence of two elements");
  cong->add_option("a", o.seed_a, "first element expression")->required();
  cong->add_option("b", o.seed_b, "second element expression")->required();
  cong->add_option("--generate", o.generate,
                   "restrict to the subalgebra generated by these elements");
  add_structure(cong);
  add_vars(cong);
  add_format(cong);

  CLI::App* verify = app.add_subcommand("verify", "run the verification battery");
  verify->add_option("--criterion", o.criterion, "run a single criterion (1-12)");
  verify->add_option("--seed", o.seed, "seed for the randomized verifiers");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (parse->parsed()) return cmd_parse(o);
    if (eval->parsed()) return cmd_eval(o);
    if (mean->parsed()) return cmd_meaning(o);
    if (status->parsed()) return cmd_status(o);
    if (alg->parsed()) return cmd_algebra(o);
    if (count->parsed()) return cmd_count_suits(o);
    if (subs->parsed()) return cmd_subalgebras(o);
    if (cong->parsed()) return cmd_congruence(o);
    if (verify->parsed()) return cmd_verify(o);
  } catch (const ifg::guard_error& e) {
    std::fprintf(stderr, "guard: %s\n", e.what());
    return 3;
  } catch (const ifg::parse_error& e) {
    std::fprintf(stderr, "parse error: %s\n", e.what());
    return 2;
  } catch (const ifg::error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
  return 2;
}
