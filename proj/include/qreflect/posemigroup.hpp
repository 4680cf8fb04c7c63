#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/poset.hpp"

namespace qreflect {

// An optional multiplier: either a carrier element or the formal identity
// adjoined to form S^1. The identity never lives in the carrier; it simply
// omits its factor in products.
using OptElement = std::optional<int>;

inline constexpr OptElement kFormalIdentity = std::nullopt;

class Posemigroup {
 public:
  // Validates associativity and order-compatibility of a multiplication
  // table over a poset. Witnesses name the offending triple or pair.
  static Posemigroup validate(Poset poset, std::vector<std::vector<int>> table) {
    Posemigroup sg;
    const int n = poset.size();
    if (static_cast<int>(table.size()) != n)
      throw Error("multiplication table has " + std::to_string(table.size()) +
                  " rows, expected " + std::to_string(n));
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != n)
        throw Error("multiplication table row of length " +
                    std::to_string(row.size()) + ", expected " +
                    std::to_string(n));
    sg.poset_ = std::move(poset);
    sg.table_ = std::move(table);
    const Poset& p = sg.poset_;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        for (int z = 0; z < n; ++z)
          if (sg.mul(sg.mul(x, y), z) != sg.mul(x, sg.mul(y, z)))
            throw AssociativityViolation(
                "(" + p.name(x) + "*" + p.name(y) + ")*" + p.name(z) +
                " != " + p.name(x) + "*(" + p.name(y) + "*" + p.name(z) + ")");
    // One-sided monotonicity in each argument gives the two-sided
    // compatibility law by transitivity.
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (!p.leq(a, b)) continue;
        for (int c = 0; c < n; ++c) {
          if (!p.leq(sg.mul(a, c), sg.mul(b, c)))
            throw CompatibilityViolation(
                p.name(a) + "<=" + p.name(b) + " but " + p.name(a) + "*" +
                p.name(c) + " !<= " + p.name(b) + "*" + p.name(c));
          if (!p.leq(sg.mul(c, a), sg.mul(c, b)))
            throw CompatibilityViolation(
                p.name(a) + "<=" + p.name(b) + " but " + p.name(c) + "*" +
                p.name(a) + " !<= " + p.name(c) + "*" + p.name(b));
        }
      }
    for (int e = 0; e < n; ++e) {
      bool ident = true;
      for (int x = 0; x < n && ident; ++x)
        ident = sg.mul(e, x) == x && sg.mul(x, e) == x;
      if (ident) {
        sg.identity_ = e;
        break;
      }
    }
    return sg;
  }

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  int mul(int x, int y) const { return table_[x][y]; }

  // The detected two-sided identity, if the semigroup has one. When it
  // does, S^1 = S and the formal identity is not needed as a multiplier.
  std::optional<int> identity() const { return identity_; }

  int mul(OptElement a, int x, OptElement b) const {
    int r = x;
    if (a) r = mul(*a, r);
    if (b) r = mul(r, *b);
    return r;
  }

  // The multipliers ranging over S^1: every element, plus the formal
  // identity exactly when S has no identity of its own.
  std::vector<OptElement> s1_elements() const {
    std::vector<OptElement> out;
    if (!identity_) out.push_back(kFormalIdentity);
    for (int i = 0; i < size(); ++i) out.push_back(i);
    return out;
  }

  // Elementwise two-sided product aXb.
  Mask translate(OptElement a, Mask X, OptElement b) const {
    Mask out = 0;
    for_each_bit(X, [&](int x) { out |= bit(mul(a, x, b)); });
    return out;
  }

  // X*Y = {xy | x in X, y in Y} down-closed.
  LowerSet set_product(Mask X, Mask Y) const {
    Mask prod = 0;
    for_each_bit(X, [&](int x) {
      for_each_bit(Y, [&](int y) { prod |= bit(mul(x, y)); });
    });
    return poset_.down_closure(prod);
  }

  std::string describe_opt(OptElement a) const {
    return a ? poset_.name(*a) : std::string("1");
  }

 private:
  Poset poset_;
  std::vector<std::vector<int>> table_;
  std::optional<int> identity_;
};

// An element map f : S -> T given by target indices, in source index order.
struct Morphism {
  std::vector<int> map;
  int operator()(int x) const { return map[x]; }
  Mask image(const Mask X) const {
    Mask out = 0;
    for_each_bit(X, [&](int x) { out |= bit(map[x]); });
    return out;
  }
  Mask preimage(Mask Y, int src_size) const {
    Mask out = 0;
    for (int x = 0; x < src_size; ++x)
      if (contains(Y, map[x])) out |= bit(x);
    return out;
  }
};

inline bool is_monotone(const Morphism& f, const Poset& src, const Poset& dst) {
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (src.leq(x, y) && !dst.leq(f(x), f(y))) return false;
  return true;
}

inline bool is_multiplicative(const Morphism& f, const Posemigroup& src,
                              const Posemigroup& dst) {
  for (int x = 0; x < src.size(); ++x)
    for (int y = 0; y < src.size(); ++y)
      if (f(src.mul(x, y)) != dst.mul(f(x), f(y))) return false;
  return true;
}

inline bool is_posemigroup_morphism(const Morphism& f, const Posemigroup& src,
                                    const Posemigroup& dst) {
  return is_monotone(f, src.poset(), dst.poset()) &&
         is_multiplicative(f, src, dst);
}

}  // namespace qreflect
