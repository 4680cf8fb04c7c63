#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "qreflect/posemigroup.hpp"

namespace qreflect {

// A finite quantale candidate: a carrier with an order, a multiplication
// table and, when it was built from a set-based quotient, the underlying
// lower sets. Lattice structure is derived from the order; whether the
// data really is a quantale is decided by quantale_axioms below.
class FiniteQuantale {
 public:
  static FiniteQuantale from_sets(const Poset& base, std::vector<Mask> sets,
                                  std::vector<std::vector<int>> mult) {
    FiniteQuantale q;
    std::vector<std::string> names;
    names.reserve(sets.size());
    for (Mask m : sets) names.push_back(base.set_name(m));
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j)
        if (subset_of(sets[i], sets[j]))
          pairs.emplace_back(names[i], names[j]);
    q.order_ = Poset::from_pairs(std::move(names), pairs);
    q.sets_ = std::move(sets);
    q.mult_ = std::move(mult);
    return q;
  }

  // Views a posemigroup as a quantale candidate on its own carrier.
  static FiniteQuantale from_posemigroup(const Posemigroup& sg) {
    FiniteQuantale q;
    q.order_ = sg.poset();
    q.mult_.assign(sg.size(), std::vector<int>(sg.size()));
    for (int i = 0; i < sg.size(); ++i)
      for (int j = 0; j < sg.size(); ++j) q.mult_[i][j] = sg.mul(i, j);
    return q;
  }

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  const std::string& label(int i) const { return order_.name(i); }
  bool leq(int i, int j) const { return order_.leq(i, j); }
  int mul(int i, int j) const { return mult_[i][j]; }
  std::optional<int> join(Mask idxs) const { return order_.join(idxs); }
  std::optional<int> meet(Mask idxs) const { return order_.meet(idxs); }
  std::optional<int> bottom() const { return order_.bottom(); }
  std::optional<int> top() const { return order_.top(); }

  bool set_backed() const { return !sets_.empty(); }
  const std::vector<Mask>& sets() const { return sets_; }
  std::optional<int> index_of_set(Mask m) const {
    for (std::size_t i = 0; i < sets_.size(); ++i)
      if (sets_[i] == m) return static_cast<int>(i);
    return std::nullopt;
  }

  // Corrupts one table entry; used to exercise the axiom checker.
  FiniteQuantale with_table_entry(int i, int j, int v) const {
    FiniteQuantale q = *this;
    q.mult_[i][j] = v;
    return q;
  }

 private:
  Poset order_;
  std::vector<std::vector<int>> mult_;
  std::vector<Mask> sets_;
};

// Finite quantale laws: complete lattice (in a finite poset, pairwise
// joins/meets plus bottom and top give all of them), associativity, the
// two binary distributive laws, and bottom absorption. Binary joins and
// the empty join suffice for distribution over arbitrary joins because
// every join in a finite lattice is a finite one.
inline Report quantale_axioms(const FiniteQuantale& q) {
  Report r;
  const int n = q.size();
  bool lattice = q.bottom().has_value() && q.top().has_value();
  std::string lat_witness =
      !lattice ? std::string("bottom or top missing") : std::string();
  for (int i = 0; i < n && lattice; ++i)
    for (int j = 0; j < n && lattice; ++j)
      if (!q.join(bit(i) | bit(j)) || !q.meet(bit(i) | bit(j))) {
        lattice = false;
        lat_witness = q.label(i) + " v " + q.label(j) + " or the meet is missing";
      }
  r.add("complete lattice", lattice, lat_witness);
  if (!lattice) return r;

  bool assoc = true;
  for (int x = 0; x < n && assoc; ++x)
    for (int y = 0; y < n && assoc; ++y)
      for (int z = 0; z < n && assoc; ++z)
        if (q.mul(q.mul(x, y), z) != q.mul(x, q.mul(y, z))) {
          assoc = false;
          r.add("associative", false,
                "(" + q.label(x) + "*" + q.label(y) + ")*" + q.label(z));
        }
  if (assoc) r.add("associative", true);

  bool dist = true;
  for (int a = 0; a < n && dist; ++a)
    for (int x = 0; x < n && dist; ++x)
      for (int y = 0; y < n && dist; ++y) {
        int v = *q.join(bit(x) | bit(y));
        if (q.mul(a, v) != *q.join(bit(q.mul(a, x)) | bit(q.mul(a, y)))) {
          dist = false;
          r.add("distributes over joins", false,
                q.label(a) + "*(" + q.label(x) + " v " + q.label(y) + ")");
        } else if (q.mul(v, a) !=
                   *q.join(bit(q.mul(x, a)) | bit(q.mul(y, a)))) {
          dist = false;
          r.add("distributes over joins", false,
                "(" + q.label(x) + " v " + q.label(y) + ")*" + q.label(a));
        }
      }
  if (dist) r.add("distributes over joins", true);

  bool absorb = true;
  int bot = *q.bottom();
  for (int a = 0; a < n && absorb; ++a)
    if (q.mul(a, bot) != bot || q.mul(bot, a) != bot) {
      absorb = false;
      r.add("bottom absorbs", false, q.label(a));
    }
  if (absorb) r.add("bottom absorbs", true);
  return r;
}

inline bool is_quantale(const FiniteQuantale& q) {
  return quantale_axioms(q).ok();
}

namespace detail {

struct IsoSignature {
  int down, up, covers_below, covers_above;
  bool idem;
  friend bool operator==(const IsoSignature&, const IsoSignature&) = default;
};

inline std::vector<IsoSignature> iso_signatures(const FiniteQuantale& q) {
  std::vector<IsoSignature> sig(q.size());
  auto covers = q.order().hasse();
  for (int i = 0; i < q.size(); ++i) {
    sig[i].down = popcount(q.order().down(i));
    sig[i].up = popcount(q.order().up(i));
    sig[i].idem = q.mul(i, i) == i;
  }
  for (auto [a, b] : covers) {
    sig[a].covers_above++;
    sig[b].covers_below++;
  }
  return sig;
}

inline bool iso_backtrack(const FiniteQuantale& q1, const FiniteQuantale& q2,
                          const std::vector<IsoSignature>& s1,
                          const std::vector<IsoSignature>& s2,
                          std::vector<int>& map, std::vector<bool>& used,
                          int next) {
  const int n = q1.size();
  if (next == n) return true;
  for (int cand = 0; cand < n; ++cand) {
    if (used[cand] || !(s1[next] == s2[cand])) continue;
    bool ok = true;
    for (int prev = 0; prev < next && ok; ++prev) {
      if (q1.leq(prev, next) != q2.leq(map[prev], cand)) ok = false;
      if (q1.leq(next, prev) != q2.leq(cand, map[prev])) ok = false;
    }
    // multiplication closure over already-assigned elements
    auto check_mul = [&](int x, int y, int fx, int fy) {
      int p = q1.mul(x, y);
      if (p == next) return q2.mul(fx, fy) == cand;
      if (p < next) return q2.mul(fx, fy) == map[p];
      return true;  // product not assigned yet
    };
    for (int prev = 0; prev <= next && ok; ++prev) {
      int fp = prev == next ? cand : map[prev];
      if (!check_mul(prev, next, fp, cand)) ok = false;
      if (!check_mul(next, prev, cand, fp)) ok = false;
    }
    if (!ok) continue;
    map[next] = cand;
    used[cand] = true;
    if (iso_backtrack(q1, q2, s1, s2, map, used, next + 1)) return true;
    used[cand] = false;
  }
  return false;
}

}  // namespace detail

// Backtracking search for an order-and-multiplication isomorphism,
// pruned by per-element degree/cover/idempotence signatures.
inline std::optional<std::vector<int>> find_isomorphism(
    const FiniteQuantale& q1, const FiniteQuantale& q2, int cap = 24) {
  if (q1.size() != q2.size()) return std::nullopt;
  if (q1.size() > cap)
    throw CapExceeded("isomorphism search over " + std::to_string(q1.size()) +
                      " elements exceeds cap " + std::to_string(cap));
  auto s1 = detail::iso_signatures(q1);
  auto s2 = detail::iso_signatures(q2);
  {
    auto m1 = s1;
    auto m2 = s2;
    auto key = [](const detail::IsoSignature& s) {
      return std::tuple(s.down, s.up, s.covers_below, s.covers_above, s.idem);
    };
    auto lt = [&](const auto& a, const auto& b) { return key(a) < key(b); };
    std::sort(m1.begin(), m1.end(), lt);
    std::sort(m2.begin(), m2.end(), lt);
    for (std::size_t i = 0; i < m1.size(); ++i)
      if (!(m1[i] == m2[i])) return std::nullopt;
  }
  std::vector<int> map(q1.size(), -1);
  std::vector<bool> used(q1.size(), false);
  if (detail::iso_backtrack(q1, q2, s1, s2, map, used, 0)) return map;
  return std::nullopt;
}

// Quantale-morphism laws for a map between finite quantales: preserving
// binary joins and the bottom is preserving all joins here.
inline Report check_quantale_morphism(const FiniteQuantale& A,
                                      const FiniteQuantale& B,
                                      const std::vector<int>& h) {
  Report r;
  const int n = A.size();
  bool mult = true;
  for (int x = 0; x < n && mult; ++x)
    for (int y = 0; y < n && mult; ++y)
      if (h[A.mul(x, y)] != B.mul(h[x], h[y])) {
        mult = false;
        r.add("preserves multiplication", false,
              A.label(x) + "*" + A.label(y));
      }
  if (mult) r.add("preserves multiplication", true);
  bool joins = true;
  for (int x = 0; x < n && joins; ++x)
    for (int y = 0; y < n && joins; ++y) {
      auto ja = A.join(bit(x) | bit(y));
      auto jb = B.join(bit(h[x]) | bit(h[y]));
      if (!ja || !jb || h[*ja] != *jb) {
        joins = false;
        r.add("preserves binary joins", false, A.label(x) + " v " + A.label(y));
      }
    }
  if (joins) r.add("preserves binary joins", true);
  bool bot = A.bottom() && B.bottom() && h[*A.bottom()] == *B.bottom();
  r.add("preserves bottom", bot);
  return r;
}

}  // namespace qreflect
