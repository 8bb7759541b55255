#pragma once
// Valuations and teams over a finite universe.
//
// A valuation assigns one of m universe elements to each of the N variables
// v_0..v_{N-1}; it is packed into an integer index in base m with v_0 as the
// least significant digit.  A team is a set of valuations (bitmask over
// valuation indices), and a team family is a set of teams (bitmask over team
// indices, which are just the team bitmasks themselves).

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ifg {

struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when an operation would exceed a resource guard (CLI exit code 3).
struct guard_error : error {
  using error::error;
};

struct parse_error : error {
  parse_error(const std::string& what, std::size_t pos)
      : error(what + " (at position " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

namespace limits {
// meaning() and anything that materializes team families: at most 2^12 teams.
inline constexpr int meaning_valuations = 12;
// single-team evaluation: teams stay bitmask-sized.
inline constexpr int eval_valuations = 20;
// closure cap for subuniverse generation.
inline constexpr std::size_t generation_cap = 100000;
}  // namespace limits

constexpr std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

// Universe size m and variable count N; fixes the valuation space m^N.
struct Dims {
  int base = 2;  // m, size of the universe
  int vars = 1;  // N, number of variables v_0..v_{N-1}

  bool operator==(const Dims&) const = default;

  int valuations() const { return static_cast<int>(ipow(base, vars)); }

  std::uint32_t teams() const { return std::uint32_t{1} << valuations(); }

  void check_eval_guard() const {
    if (valuations() > limits::eval_valuations)
      throw guard_error("valuation space " + std::to_string(base) + "^" +
                        std::to_string(vars) + " exceeds the evaluation guard of 2^" +
                        std::to_string(limits::eval_valuations) + " teams");
  }

  void check_family_guard(int guard = limits::meaning_valuations) const {
    if (valuations() > guard)
      throw guard_error("valuation space " + std::to_string(base) + "^" +
                        std::to_string(vars) +
                        " exceeds the team-family guard of 2^" + std::to_string(guard));
  }
};

// Digit i of a packed valuation: the value assigned to v_i.
inline int valuation_entry(Dims d, std::uint32_t val, int var) {
  return static_cast<int>((val / ipow(d.base, var)) % d.base);
}

inline std::uint32_t valuation_index(Dims d, std::span<const int> entries) {
  if (static_cast<int>(entries.size()) != d.vars)
    throw error("valuation has " + std::to_string(entries.size()) + " entries, expected " +
                std::to_string(d.vars));
  std::uint32_t idx = 0;
  for (int i = d.vars - 1; i >= 0; --i) {
    if (entries[i] < 0 || entries[i] >= d.base)
      throw error("valuation entry " + std::to_string(entries[i]) + " outside universe of size " +
                  std::to_string(d.base));
    idx = idx * d.base + entries[i];
  }
  return idx;
}

// ā(n:b) — the valuation with the n-th coordinate replaced by b.
inline std::uint32_t valuation_with(Dims d, std::uint32_t val, int var, int value) {
  std::uint32_t p = static_cast<std::uint32_t>(ipow(d.base, var));
  return val - static_cast<std::uint32_t>(valuation_entry(d, val, var)) * p +
         static_cast<std::uint32_t>(value) * p;
}

// Digit string with v_0 first: valuation (v0=0, v1=1) over m=2 prints "01".
inline std::string valuation_to_string(Dims d, std::uint32_t val) {
  std::string s;
  for (int i = 0; i < d.vars; ++i) s += static_cast<char>('0' + valuation_entry(d, val, i));
  return s;
}

inline std::uint32_t valuation_from_string(Dims d, const std::string& s) {
  if (static_cast<int>(s.size()) != d.vars)
    throw error("valuation '" + s + "' has " + std::to_string(s.size()) +
                " digits, expected " + std::to_string(d.vars));
  std::vector<int> entries;
  for (char c : s) {
    if (c < '0' || c > '9') throw error("valuation '" + s + "' contains a non-digit");
    entries.push_back(c - '0');
  }
  return valuation_index(d, entries);
}

// A set of valuations, stored as a bitmask over valuation indices.
struct Team {
  Dims dims;
  std::uint32_t bits = 0;

  bool operator==(const Team&) const = default;

  bool contains(std::uint32_t val) const { return (bits >> val) & 1; }
  Team with(std::uint32_t val) const { return {dims, bits | (std::uint32_t{1} << val)}; }
  int size() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }

  static Team empty_team(Dims d) { return {d, 0}; }
  static Team full(Dims d) {
    d.check_eval_guard();
    int nv = d.valuations();
    return {d, nv >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << nv) - 1};
  }

  std::vector<std::uint32_t> valuations() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t rest = bits; rest;) {
      std::uint32_t v = static_cast<std::uint32_t>(std::countr_zero(rest));
      out.push_back(v);
      rest &= rest - 1;
    }
    return out;
  }
};

// "{00, 01}" — members sorted by valuation index.
inline std::string team_to_string(const Team& t) {
  std::string s = "{";
  bool first = true;
  for (std::uint32_t v : t.valuations()) {
    if (!first) s += ", ";
    first = false;
    s += valuation_to_string(t.dims, v);
  }
  return s + "}";
}

inline Team team_from_string(Dims d, const std::string& text) {
  Team t{d, 0};
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  if (i >= text.size() || text[i] != '{') throw parse_error("team must start with '{'", i);
  ++i;
  skip_ws();
  while (i < text.size() && text[i] != '}') {
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    if (digits.empty()) throw parse_error("expected a valuation digit string", i);
    t.bits |= std::uint32_t{1} << valuation_from_string(d, digits);
    skip_ws();
    if (i < text.size() && text[i] == ',') { ++i; skip_ws(); }
  }
  if (i >= text.size()) throw parse_error("team missing closing '}'", i);
  return t;
}

// A set of teams: one bit per team index (= the team's own bitmask).
struct TeamFamily {
  Dims dims;
  std::vector<std::uint64_t> words;

  TeamFamily() = default;
  explicit TeamFamily(Dims d, int guard = limits::meaning_valuations) : dims(d) {
    d.check_family_guard(guard);
    words.assign((d.teams() + 63) / 64, 0);
  }

  bool operator==(const TeamFamily&) const = default;

  bool test(std::uint32_t team_bits) const { return (words[team_bits >> 6] >> (team_bits & 63)) & 1; }
  void set(std::uint32_t team_bits) { words[team_bits >> 6] |= std::uint64_t{1} << (team_bits & 63); }
  void reset(std::uint32_t team_bits) { words[team_bits >> 6] &= ~(std::uint64_t{1} << (team_bits & 63)); }

  std::uint64_t count() const {
    std::uint64_t n = 0;
    for (auto w : words) n += static_cast<std::uint64_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words) if (w) return false;
    return true;
  }

  TeamFamily operator&(const TeamFamily& o) const {
    TeamFamily r = *this;
    for (std::size_t i = 0; i < words.size(); ++i) r.words[i] &= o.words[i];
    return r;
  }
  TeamFamily operator|(const TeamFamily& o) const {
    TeamFamily r = *this;
    for (std::size_t i = 0; i < words.size(); ++i) r.words[i] |= o.words[i];
    return r;
  }
  bool subset_of(const TeamFamily& o) const {
    for (std::size_t i = 0; i < words.size(); ++i)
      if (words[i] & ~o.words[i]) return false;
    return true;
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t t = 0; t < dims.teams(); ++t)
      if (test(t)) out.push_back(t);
    return out;
  }

  // Members with no proper superset in the family.
  std::vector<std::uint32_t> maximal_teams() const {
    std::vector<std::uint32_t> mem = members(), out;
    for (std::uint32_t t : mem) {
      bool maximal = true;
      for (std::uint32_t u : mem)
        if (u != t && (t & ~u) == 0) { maximal = false; break; }
      if (maximal) out.push_back(t);
    }
    return out;
  }

  bool downward_closed() const {
    for (std::uint32_t t = 0; t < dims.teams(); ++t) {
      if (!test(t)) continue;
      // removing any single valuation must stay inside
      for (std::uint32_t rest = t; rest;) {
        std::uint32_t low = rest & (~rest + 1);
        if (!test(t ^ low)) return false;
        rest ^= low;
      }
    }
    return true;
  }

  // {∅}
  static TeamFamily just_empty(Dims d) {
    TeamFamily f(d);
    f.set(0);
    return f;
  }
  // P(V): all subsets of the given team.
  static TeamFamily powerset(const Team& v) {
    TeamFamily f(v.dims);
    std::uint32_t sub = v.bits;
    for (;;) {
      f.set(sub);
      if (sub == 0) break;
      sub = (sub - 1) & v.bits;
    }
    return f;
  }
  // P(P(^N A)): every team.
  static TeamFamily all(Dims d) {
    TeamFamily f(d);
    for (auto& w : f.words) w = ~std::uint64_t{0};
    std::uint32_t n = d.teams();
    if (n & 63) f.words.back() &= (std::uint64_t{1} << (n & 63)) - 1;
    return f;
  }
};

// "{0}, {1}" — maximal teams sorted by team bitmask.
inline std::string family_to_string(const TeamFamily& f) {
  std::string s;
  bool first = true;
  for (std::uint32_t t : f.maximal_teams()) {
    if (!first) s += ", ";
    first = false;
    s += team_to_string(Team{f.dims, t});
  }
  return s;
}

}  // namespace ifg
