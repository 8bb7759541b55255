#pragma once
// Universal-algebra toolkit for finite algebras of team-family pairs under
// the full signature in N variables:
//
//   constants  0, 1, D_ij          unary  ¬, C_{n,J}        binary  +_J, ·_J
//
// with J ranging over all subsets of the variables.  Provides generated
// closures, subuniverse enumeration, principal congruences (union-find with
// a merge worklist), simplicity and hereditary simplicity.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/enumeration.hpp"
#include "ifg/team.hpp"

namespace ifg {

struct UnaryOpDesc {
  std::string name;
  bool is_cyl = false;  // false: complement
  int var = 0;
  VarSet jset = 0;
};

struct BinaryOpDesc {
  std::string name;
  bool is_plus = true;  // false: ·_J
  VarSet jset = 0;
};

namespace detail {
inline std::string braced(VarSet j) {
  std::string s = "{";
  for (int i = 0; i < 32; ++i)
    if ((j >> i) & 1) {
      if (s.size() > 1) s += ",";
      s += std::to_string(i);
    }
  return s + "}";
}
}  // namespace detail

inline std::vector<UnaryOpDesc> unary_ops(int vars) {
  std::vector<UnaryOpDesc> ops{{"~", false, 0, 0}};
  for (int v = 0; v < vars; ++v)
    for (VarSet j = 0; j < (VarSet{1} << vars); ++j)
      ops.push_back({"C(" + std::to_string(v) + "," + detail::braced(j) + ")", true, v, j});
  return ops;
}

inline std::vector<BinaryOpDesc> binary_ops(int vars) {
  std::vector<BinaryOpDesc> ops;
  for (VarSet j = 0; j < (VarSet{1} << vars); ++j)
    ops.push_back({"+" + detail::braced(j), true, j});
  for (VarSet j = 0; j < (VarSet{1} << vars); ++j)
    ops.push_back({"*" + detail::braced(j), false, j});
  return ops;
}

inline std::vector<AlgebraElement> signature_constants(Dims d) {
  std::vector<AlgebraElement> cs{zero(d), one(d)};
  for (int i = 0; i < d.vars; ++i)
    for (int j = i; j < d.vars; ++j) cs.push_back(diag(d, i, j));
  return cs;
}

inline AlgebraElement apply(const UnaryOpDesc& op, const AlgebraElement& x) {
  return op.is_cyl ? cyl(op.var, op.jset, x) : neg(x);
}

inline AlgebraElement apply(const BinaryOpDesc& op, const AlgebraElement& x,
                            const AlgebraElement& y) {
  return op.is_plus ? plus(x, y, op.jset) : times(x, y, op.jset);
}

// Closure of the seeds (plus the constants) under the full signature.
// Every element produced must again be a double suit; the cap bounds runaway
// closures.
inline std::vector<AlgebraElement> generate_closure(Dims d,
                                                    std::vector<AlgebraElement> seeds,
                                                    std::size_t cap = limits::generation_cap) {
  std::vector<UnaryOpDesc> uops = unary_ops(d.vars);
  std::vector<BinaryOpDesc> bops = binary_ops(d.vars);
  std::vector<AlgebraElement> all;
  std::unordered_set<AlgebraElement, ElementHash> seen;

  auto add = [&](const AlgebraElement& x) {
    if (x.dims() != d) throw error("closure seed has mismatched dimensions");
    if (seen.insert(x).second) {
      if (!classify(x).double_suit)
        throw error("closure left the double suits at " + element_to_string(x));
      all.push_back(x);
      if (all.size() > cap) throw guard_error("closure exceeded the generation cap");
      return true;
    }
    return false;
  };

  for (const AlgebraElement& c : signature_constants(d)) add(c);
  for (const AlgebraElement& s : seeds) add(s);

  for (std::size_t next = 0; next < all.size(); ++next) {
    AlgebraElement x = all[next];  // copy: `all` may reallocate
    for (const UnaryOpDesc& op : uops) add(apply(op, x));
    for (const BinaryOpDesc& op : bops)
      for (std::size_t i = 0; i <= next; ++i) {
        AlgebraElement y = all[i];
        add(apply(op, x, y));
        add(apply(op, y, x));
      }
  }
  std::sort(all.begin(), all.end(), element_less);
  return all;
}

// ---- finite algebra with integer operation tables -----------------------------

class FiniteAlgebra {
 public:
  FiniteAlgebra(Dims d, std::vector<AlgebraElement> carrier)
      : dims_(d),
        carrier_(std::move(carrier)),
        uops_(unary_ops(d.vars)),
        bops_(binary_ops(d.vars)) {
    std::sort(carrier_.begin(), carrier_.end(), element_less);
    for (int i = 0; i < size(); ++i) index_.emplace(carrier_[i], i);
    if (index_.size() != carrier_.size()) throw error("carrier has duplicate elements");
    utab_.resize(uops_.size());
    btab_.resize(bops_.size());
  }

  static FiniteAlgebra full_double_suit_algebra(Dims d);

  Dims dims() const { return dims_; }
  int size() const { return static_cast<int>(carrier_.size()); }
  const std::vector<AlgebraElement>& carrier() const { return carrier_; }
  const AlgebraElement& element(int i) const { return carrier_[i]; }
  int index_of(const AlgebraElement& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
  }

  const std::vector<UnaryOpDesc>& unaries() const { return uops_; }
  const std::vector<BinaryOpDesc>& binaries() const { return bops_; }

  // op tables, filled on first use; indices into the carrier
  const std::vector<int>& unary_table(std::size_t op) {
    std::vector<int>& t = utab_.at(op);
    if (t.empty()) {
      t.resize(size());
      for (int i = 0; i < size(); ++i) t[i] = checked_index(apply(uops_[op], carrier_[i]));
    }
    return t;
  }

  const std::vector<int>& binary_table(std::size_t op) {
    std::vector<int>& t = btab_.at(op);
    if (t.empty()) {
      t.resize(size() * size());
      for (int i = 0; i < size(); ++i)
        for (int j = 0; j < size(); ++j)
          t[i * size() + j] = checked_index(apply(bops_[op], carrier_[i], carrier_[j]));
    }
    return t;
  }

  // subuniverse generated by the seeds (constants included), as sorted indices
  std::vector<int> generated_subuniverse(const std::vector<int>& seeds) {
    std::vector<char> in(size(), 0);
    std::vector<int> members;
    auto add = [&](int i) {
      if (!in[i]) {
        in[i] = 1;
        members.push_back(i);
      }
    };
    for (const AlgebraElement& c : signature_constants(dims_)) add(checked_index(c));
    for (int s : seeds) add(s);
    for (std::size_t next = 0; next < members.size(); ++next) {
      int x = members[next];
      for (std::size_t op = 0; op < uops_.size(); ++op) add(unary_table(op)[x]);
      for (std::size_t op = 0; op < bops_.size(); ++op) {
        const std::vector<int>& t = binary_table(op);
        for (std::size_t i = 0; i <= next; ++i) {
          add(t[x * size() + members[i]]);
          add(t[members[i] * size() + x]);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  // all subuniverses, exhaustively; carriers above 16 elements are out of reach
  std::vector<std::vector<int>> enumerate_subuniverses() {
    if (size() > 16)
      throw guard_error("exhaustive subuniverse enumeration is capped at 16 elements");
    std::uint32_t constants = 0;
    for (const AlgebraElement& c : signature_constants(dims_))
      constants |= std::uint32_t{1} << checked_index(c);
    std::vector<std::vector<int>> out;
    for (std::uint32_t s = 0; s < (std::uint32_t{1} << size()); ++s) {
      if ((s & constants) != constants) continue;
      if (!closed_under_ops(s)) continue;
      std::vector<int> members;
      for (int i = 0; i < size(); ++i)
        if ((s >> i) & 1) members.push_back(i);
      out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

  // ---- congruences ----

  // principal congruence Cg(a,b) as class labels (smallest member index)
  std::vector<int> principal_congruence(int a, int b) {
    std::vector<int> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> work;
    auto merge = [&](int x, int y) {
      x = find(x);
      y = find(y);
      if (x != y) {
        parent[std::max(x, y)] = std::min(x, y);
        work.emplace_back(x, y);
      }
    };
    merge(a, b);
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      for (std::size_t op = 0; op < uops_.size(); ++op) {
        const std::vector<int>& t = unary_table(op);
        merge(t[x], t[y]);
      }
      for (std::size_t op = 0; op < bops_.size(); ++op) {
        const std::vector<int>& t = binary_table(op);
        for (int z = 0; z < size(); ++z) {
          merge(t[x * size() + z], t[y * size() + z]);
          merge(t[z * size() + x], t[z * size() + y]);
        }
      }
    }
    std::vector<int> label(size());
    for (int i = 0; i < size(); ++i) label[i] = find(i);
    return label;
  }

  // does the labeling respect every operation?
  bool is_congruence(const std::vector<int>& label) {
    if (static_cast<int>(label.size()) != size()) throw error("labeling has the wrong size");
    for (int x = 0; x < size(); ++x)
      for (int y = x + 1; y < size(); ++y) {
        if (label[x] != label[y]) continue;
        for (std::size_t op = 0; op < uops_.size(); ++op) {
          const std::vector<int>& t = unary_table(op);
          if (label[t[x]] != label[t[y]]) return false;
        }
        for (std::size_t op = 0; op < bops_.size(); ++op) {
          const std::vector<int>& t = binary_table(op);
          for (int z = 0; z < size(); ++z) {
            if (label[t[x * size() + z]] != label[t[y * size() + z]]) return false;
            if (label[t[z * size() + x]] != label[t[z * size() + y]]) return false;
          }
        }
      }
    return true;
  }

  static bool is_total(const std::vector<int>& label) {
    for (int l : label)
      if (l != label[0]) return false;
    return true;
  }

  // simple: at least two elements and every principal congruence is total
  bool is_simple() {
    if (size() < 2) return false;
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        if (!is_total(principal_congruence(a, b))) return false;
    return true;
  }

  // the algebra on a subuniverse, as a standalone algebra
  FiniteAlgebra subalgebra(const std::vector<int>& members) const {
    std::vector<AlgebraElement> sub;
    sub.reserve(members.size());
    for (int i : members) sub.push_back(carrier_[i]);
    return FiniteAlgebra(dims_, std::move(sub));
  }

  // Every subuniverse with at least two elements is simple?  Exhaustive for
  // small carriers.  For larger ones, scan the 1- and 2-generated
  // subuniverses by increasing size: finding a non-simple one settles the
  // question negatively, but a clean scan is not conclusive.
  bool is_hereditarily_simple() {
    if (size() <= 16) {
      for (const std::vector<int>& members : enumerate_subuniverses())
        if (members.size() >= 2 && !subalgebra(members).is_simple()) return false;
      return true;
    }
    std::vector<std::vector<int>> generated;
    for (int a = 0; a < size(); ++a) generated.push_back(generated_subuniverse({a}));
    for (int a = 0; a < size(); ++a)
      for (int b = a + 1; b < size(); ++b)
        generated.push_back(generated_subuniverse({a, b}));
    std::sort(generated.begin(), generated.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    generated.erase(std::unique(generated.begin(), generated.end()), generated.end());
    for (const std::vector<int>& members : generated)
      if (members.size() >= 2 && !subalgebra(members).is_simple()) return false;
    throw guard_error("hereditary simplicity is inconclusive from 2-generated subuniverses");
  }

 private:
  int checked_index(const AlgebraElement& x) const {
    int i = index_of(x);
    if (i < 0) throw error("carrier is not closed under the signature: reached " +
                           element_to_string(x));
    return i;
  }

  bool closed_under_ops(std::uint32_t s) {
    for (int i = 0; i < size(); ++i) {
      if (!((s >> i) & 1)) continue;
      for (std::size_t op = 0; op < uops_.size(); ++op)
        if (!((s >> unary_table(op)[i]) & 1)) return false;
      for (int j = 0; j < size(); ++j) {
        if (!((s >> j) & 1)) continue;
        for (std::size_t op = 0; op < bops_.size(); ++op)
          if (!((s >> binary_table(op)[i * size() + j]) & 1)) return false;
      }
    }
    return true;
  }

  Dims dims_;
  std::vector<AlgebraElement> carrier_;
  std::unordered_map<AlgebraElement, int, ElementHash> index_;
  std::vector<UnaryOpDesc> uops_;
  std::vector<BinaryOpDesc> bops_;
  std::vector<std::vector<int>> utab_, btab_;
};

inline FiniteAlgebra FiniteAlgebra::full_double_suit_algebra(Dims d) {
  return FiniteAlgebra(d, enumerate_double_suits(d));
}

}  // namespace ifg
