#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qreflect/check.hpp"

namespace qreflect {

// Subsets of a fixed finite carrier are bit-vectors keyed by declaration
// order; all set operations are single-word.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool contains(Mask m, int i) { return (m >> i) & 1u; }
inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

// Iterates the set bits of a mask, lowest index first.
template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m) {
    int i = std::countr_zero(m);
    f(i);
    m &= m - 1;
  }
}

// A subset known to be downward closed. Only produced by Poset operations,
// so the invariant travels with the type.
struct LowerSet {
  Mask bits = 0;
  friend bool operator==(LowerSet, LowerSet) = default;
};

class Poset {
 public:
  // Builds a poset from element names and a generating relation; `pairs`
  // entries mean first <= second. The relation is closed reflexively and
  // transitively. A cycle through distinct elements is rejected with the
  // cycle as witness.
  static Poset from_pairs(
      std::vector<std::string> names,
      const std::vector<std::pair<std::string, std::string>>& pairs) {
    Poset p;
    if (names.size() > 31)
      throw CapExceeded("carrier of " + std::to_string(names.size()) +
                        " elements exceeds the 31-element representation");
    p.names_ = std::move(names);
    const int n = p.size();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p.names_[i] == p.names_[j])
          throw Error("duplicate element name '" + p.names_[i] + "'");
    p.up_.assign(n, 0);
    for (int i = 0; i < n; ++i) p.up_[i] = bit(i);
    for (const auto& [lo, hi] : pairs) p.up_[p.index(lo)] |= bit(p.index(hi));
    // transitive closure over the generating relation
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i < n; ++i) {
        Mask reach = p.up_[i];
        for_each_bit(p.up_[i], [&](int j) { reach |= p.up_[j]; });
        if (reach != p.up_[i]) {
          p.up_[i] = reach;
          changed = true;
        }
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (contains(p.up_[i], j) && contains(p.up_[j], i)) {
          std::string cycle;
          for (int k = 0; k < n; ++k)
            if (contains(p.up_[i], k) && contains(p.up_[k], i)) {
              if (!cycle.empty()) cycle += ' ';
              cycle += p.names_[k];
            }
          throw AntisymmetryViolation("order cycle through {" + cycle + "}");
        }
    p.down_.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for_each_bit(p.up_[i], [&](int j) { p.down_[j] |= bit(i); });
    return p;
  }

  int size() const { return static_cast<int>(names_.size()); }
  Mask full() const { return (Mask{1} << size()) - 1; }
  const std::string& name(int i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  int index(std::string_view name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    throw UnknownElement("unknown element '" + std::string(name) + "'");
  }

  bool leq(int x, int y) const { return contains(up_[x], y); }
  bool lt(int x, int y) const { return x != y && leq(x, y); }

  // Principal downset x↓ and upset x↑ as masks.
  Mask down(int x) const { return down_[x]; }
  Mask up(int x) const { return up_[x]; }

  bool is_lower(Mask X) const {
    Mask closed = 0;
    for_each_bit(X, [&](int x) { closed |= down_[x]; });
    return closed == X;
  }

  LowerSet as_lower(Mask X) const {
    if (!is_lower(X)) throw Error("subset " + set_name(X) + " is not a lower set");
    return LowerSet{X};
  }

  // Smallest lower set containing X.
  LowerSet down_closure(Mask X) const {
    Mask closed = 0;
    for_each_bit(X, [&](int x) { closed |= down_[x]; });
    return LowerSet{closed};
  }

  // Least upper bound of X if it exists. join({}) is the bottom element
  // when the poset has one; dually for meet({}) and the top.
  std::optional<int> join(Mask X) const {
    Mask ub = full();
    for_each_bit(X, [&](int x) { ub &= up_[x]; });
    std::optional<int> least;
    for_each_bit(ub, [&](int u) {
      if (!least && subset_of(ub, up_[u])) least = u;
    });
    return least;
  }

  std::optional<int> meet(Mask X) const {
    Mask lb = full();
    for_each_bit(X, [&](int x) { lb &= down_[x]; });
    std::optional<int> greatest;
    for_each_bit(lb, [&](int u) {
      if (!greatest && subset_of(lb, down_[u])) greatest = u;
    });
    return greatest;
  }

  std::optional<int> bottom() const { return join(0); }
  std::optional<int> top() const { return meet(0); }

  // All lower sets, ordered by cardinality then lexicographically on the
  // sorted element names. Enumerates all 2^n subsets, so it is capped.
  std::vector<LowerSet> lower_sets(int cap = kDefaultCap) const {
    if (size() > cap)
      throw CapExceeded("lower-set enumeration over " +
                        std::to_string(size()) + " elements exceeds cap " +
                        std::to_string(cap));
    std::vector<LowerSet> out;
    for (Mask m = 0; m <= full(); ++m)
      if (is_lower(m)) out.push_back(LowerSet{m});
    std::sort(out.begin(), out.end(), [&](LowerSet a, LowerSet b) {
      return canonical_less(a.bits, b.bits);
    });
    return out;
  }

  // Cover pairs (x, y): x < y with nothing strictly between.
  std::vector<std::pair<int, int>> hasse() const {
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < size(); ++x)
      for (int y = 0; y < size(); ++y) {
        if (!lt(x, y)) continue;
        bool cover = true;
        for_each_bit(up_[x] & down_[y], [&](int z) {
          if (z != x && z != y) cover = false;
        });
        if (cover) edges.emplace_back(x, y);
      }
    return edges;
  }

  // Canonical order on subsets: cardinality first, then the name-sorted
  // member lists compared lexicographically. Keeps every emitted list
  // byte-stable across runs.
  bool canonical_less(Mask a, Mask b) const {
    if (a == b) return false;
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    std::vector<std::string> na = sorted_names(a), nb = sorted_names(b);
    return na < nb;
  }

  std::string set_name(Mask m) const {
    std::string out = "{";
    bool first = true;
    for (const auto& nm : sorted_names(m)) {
      if (!first) out += ',';
      out += nm;
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::vector<std::string> sorted_names(Mask m) const {
    std::vector<std::string> ns;
    for_each_bit(m, [&](int i) { ns.push_back(names_[i]); });
    std::sort(ns.begin(), ns.end());
    return ns;
  }

  std::vector<std::string> names_;
  std::vector<Mask> up_;    // up_[x] = {y | x <= y}
  std::vector<Mask> down_;  // down_[x] = {y | y <= x}
};

// True iff x <= y in P exactly when f(x) <= f(y) in Q, for all pairs.
inline bool is_order_embedding(const std::vector<int>& f, const Poset& p,
                               const Poset& q) {
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.leq(x, y) != q.leq(f[x], f[y])) return false;
  return true;
}

}  // namespace qreflect
