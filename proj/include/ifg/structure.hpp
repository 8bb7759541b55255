#pragma once
// First-order structures over a finite universe {0, .., m-1}: named constants
// and finitary relations.  Builtin structures "2" and "3" are fully named
// (every element has a constant c0, c1, ...) and relation-free.

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct Relation {
  int arity = 0;
  std::set<std::vector<int>> tuples;
};

struct Structure {
  std::string name;
  int universe = 2;  // m >= 1
  std::map<std::string, int> constants;
  std::map<std::string, Relation> relations;

  bool fully_named() const {
    std::vector<bool> named(universe, false);
    for (auto& [_, v] : constants) named[v] = true;
    for (bool b : named)
      if (!b) return false;
    return true;
  }

  // Name of some constant denoting the given element (fully named structures).
  std::string constant_for(int element) const {
    for (auto& [name, v] : constants)
      if (v == element) return name;
    throw error("structure '" + name + "' has no constant naming element " +
                std::to_string(element));
  }

  void validate() const {
    if (universe < 1) throw error("universe must have at least one element");
    for (auto& [cname, v] : constants)
      if (v < 0 || v >= universe)
        throw error("constant " + cname + " denotes " + std::to_string(v) +
                    ", outside universe of size " + std::to_string(universe));
    for (auto& [rname, rel] : relations) {
      if (rel.arity < 1) throw error("relation " + rname + " must have positive arity");
      for (auto& tup : rel.tuples) {
        if (static_cast<int>(tup.size()) != rel.arity)
          throw error("relation " + rname + " has a tuple of wrong arity");
        for (int v : tup)
          if (v < 0 || v >= universe)
            throw error("relation " + rname + " has a tuple entry outside the universe");
      }
    }
  }

  // Fully named relation-free structure with universe {0..m-1}, constants c0..c{m-1}.
  static Structure named(int m) {
    Structure s;
    s.name = std::to_string(m);
    s.universe = m;
    for (int i = 0; i < m; ++i) s.constants["c" + std::to_string(i)] = i;
    s.validate();
    return s;
  }

  static Structure from_json(const nlohmann::json& j, const std::string& name = "") {
    Structure s;
    s.name = name;
    if (!j.contains("universe") || !j["universe"].is_number_integer())
      throw error("structure file needs an integer \"universe\" field");
    s.universe = j["universe"].get<int>();
    if (j.contains("constants"))
      for (auto& [k, v] : j["constants"].items()) s.constants[k] = v.get<int>();
    if (j.contains("relations"))
      for (auto& [k, v] : j["relations"].items()) {
        Relation r;
        r.arity = v.at("arity").get<int>();
        for (auto& tup : v.at("tuples")) r.tuples.insert(tup.get<std::vector<int>>());
        s.relations[k] = r;
      }
    s.validate();
    return s;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["universe"] = universe;
    j["constants"] = nlohmann::json::object();
    for (auto& [k, v] : constants) j["constants"][k] = v;
    if (!relations.empty()) {
      j["relations"] = nlohmann::json::object();
      for (auto& [k, r] : relations) {
        j["relations"][k] = {{"arity", r.arity}, {"tuples", nlohmann::json::array()}};
        for (auto& tup : r.tuples) j["relations"][k]["tuples"].push_back(tup);
      }
    }
    return j;
  }
};

// Builtin name ("2", "3") or a path to a JSON structure file.
inline Structure make_structure(const std::string& name_or_path) {
  if (name_or_path == "2") return Structure::named(2);
  if (name_or_path == "3") return Structure::named(3);
  std::ifstream in(name_or_path);
  if (!in) throw error("unknown structure '" + name_or_path + "' (not a builtin, not a readable file)");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw error("structure file " + name_or_path + ": " + e.what());
  }
  return Structure::from_json(j, name_or_path);
}

}  // namespace ifg
