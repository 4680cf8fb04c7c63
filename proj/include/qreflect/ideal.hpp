#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qreflect/marking.hpp"
#include "qreflect/nucleus.hpp"

namespace qreflect {

inline Posemigroup posemigroup_of(const FiniteQuantale& q) {
  std::vector<std::vector<int>> table(q.size(), std::vector<int>(q.size()));
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) table[i][j] = q.mul(i, j);
  return Posemigroup::validate(q.order(), std::move(table));
}

inline MarkedPosemigroup fully_marked(const FiniteQuantale& q) {
  return MarkedPosemigroup(posemigroup_of(q), Marking::full());
}

// A lower set D is an ideal when every admissible subset of D has a join
// and the join stays inside D.
inline bool is_A_ideal(const MarkedPosemigroup& ms, LowerSet D,
                       int cap = kDefaultCap) {
  const Poset& p = ms.poset();
  bool ideal = true;
  ms.for_each_admissible_subset(
      D.bits,
      [&](Mask M) {
        if (!ideal) return;
        auto j = p.join(M);
        if (!j || !contains(D.bits, *j)) ideal = false;
      },
      cap);
  return ideal;
}

// The least ideal containing C, by saturation: down-close, then keep
// adding joins of admissible subsets until nothing changes. Certified
// against the intersection form below.
inline LowerSet ideal_closure(const MarkedPosemigroup& ms, Mask C,
                              int cap = kDefaultCap) {
  const Poset& p = ms.poset();
  Mask L = p.down_closure(C).bits;
  for (bool changed = true; changed;) {
    changed = false;
    Mask grow = 0;
    ms.for_each_admissible_subset(
        L,
        [&](Mask M) {
          auto j = p.join(M);
          if (!j)
            throw NotMarkedQuantale("admissible subset " + p.set_name(M) +
                                    " has no join");
          if (!contains(L, *j)) grow |= p.down(*j);
        },
        cap);
    if (grow) {
      L |= grow;
      changed = true;
    }
  }
  return LowerSet{L};
}

// All ideals, canonically ordered.
inline std::vector<LowerSet> all_ideals(const MarkedPosemigroup& ms,
                                        int cap = kDefaultCap) {
  std::vector<LowerSet> out;
  for (LowerSet d : ms.poset().lower_sets(cap))
    if (is_A_ideal(ms, d, cap)) out.push_back(d);
  return out;
}

// Literal intersection of every ideal containing C; exists only to certify
// ideal_closure, which must stay independent of it.
inline LowerSet ideal_closure_oracle(const MarkedPosemigroup& ms, Mask C,
                                     int cap = kDefaultCap) {
  Mask inter = ms.poset().full();
  bool any = false;
  for (LowerSet d : all_ideals(ms, cap))
    if (subset_of(C, d.bits)) {
      inter &= d.bits;
      any = true;
    }
  if (!any)
    throw NotMarkedQuantale("no ideal contains " + ms.poset().set_name(C));
  return LowerSet{inter};
}

inline NucleusFn ideal_nucleus(const MarkedPosemigroup& ms,
                               int cap = kDefaultCap) {
  return NucleusFn("ideal closure",
                   [ms, cap](LowerSet d) { return ideal_closure(ms, d.bits, cap); });
}

// The quantale of all ideals: multiplication closes the set product,
// joins close the union, meets are intersections.
inline FiniteQuantale ideal_quantale(const MarkedPosemigroup& ms,
                                     int cap = kDefaultCap) {
  return quotient(ms.sg(), ideal_nucleus(ms, cap), cap);
}

// A reflection bundle: the constructed quantale, the unit map s -> s down
// as carrier indices, and the verified law report.
struct Reflection {
  FiniteQuantale target;
  std::vector<int> unit;
  Report report;
};

namespace detail {

inline std::vector<int> principal_map(const Posemigroup& sg,
                                      const FiniteQuantale& q) {
  std::vector<int> t(sg.size());
  for (int s = 0; s < sg.size(); ++s) {
    auto idx = q.index_of_set(sg.poset().down(s));
    if (!idx) throw Error("principal downset missing from the quotient");
    t[s] = *idx;
  }
  return t;
}

inline void report_unit_properties(const Posemigroup& sg,
                                   const FiniteQuantale& q,
                                   const std::vector<int>& t, Report& r,
                                   int cap) {
  const Poset& p = sg.poset();
  bool mult = true;
  for (int a = 0; a < sg.size() && mult; ++a)
    for (int b = 0; b < sg.size() && mult; ++b)
      if (t[sg.mul(a, b)] != q.mul(t[a], t[b])) {
        mult = false;
        r.add("unit preserves multiplication", false,
              p.name(a) + "*" + p.name(b));
      }
  if (mult) r.add("unit preserves multiplication", true);

  r.add("unit is an order embedding", is_order_embedding(t, p, q.order()));

  if (sg.size() > cap) throw CapExceeded("meet scan exceeds cap");
  bool meets = true;
  std::string witness;
  for (Mask X = 0; X <= p.full() && meets; ++X) {
    auto m = p.meet(X);
    if (!m) continue;
    Mask img = 0;
    for_each_bit(X, [&](int x) { img |= bit(t[x]); });
    auto qm = q.meet(img);
    if (!qm || *qm != t[*m]) {
      meets = false;
      witness = p.set_name(X);
    }
  }
  r.add("unit preserves existing meets", meets, witness);

  bool dense = true;
  for (int d = 0; d < q.size() && dense; ++d) {
    Mask img = 0;
    for_each_bit(q.sets()[d], [&](int s) { img |= bit(t[s]); });
    auto jn = q.join(img);
    if (!jn || *jn != d) dense = false;
  }
  r.add("unit image join-dense", dense);
}

}  // namespace detail

// The unit t : S -> Id_A(S), s -> s down. Requires a marked quantale; the
// report verifies the morphism laws, that admissible joins transfer, and
// records (without failing) whether arbitrary existing joins transfer too.
inline Reflection reflection_t(const MarkedPosemigroup& ms,
                               int cap = kDefaultCap) {
  Report mq = check_marked_quantale(ms, cap);
  if (!mq.ok())
    throw NotMarkedQuantale("not a marked quantale:\n" + mq.to_string());
  Reflection out{ideal_quantale(ms, cap), {}, {}};
  const Posemigroup& sg = ms.sg();
  const Poset& p = sg.poset();
  out.unit = detail::principal_map(sg, out.target);
  detail::report_unit_properties(sg, out.target, out.unit, out.report, cap);

  bool adm = true;
  std::string witness;
  ms.for_each_admissible_subset(
      p.full(),
      [&](Mask M) {
        if (!adm) return;
        auto jm = p.join(M);
        Mask img = 0;
        for_each_bit(M, [&](int x) { img |= bit(out.unit[x]); });
        auto qj = out.target.join(img);
        if (!jm || !qj || *qj != out.unit[*jm]) {
          adm = false;
          witness = p.set_name(M);
        }
      },
      cap);
  out.report.add("unit preserves admissible joins", adm, witness);

  bool all_joins = true;
  Mask all_witness = 0;
  for (Mask X = 0; X <= p.full(); ++X) {
    auto jx = p.join(X);
    if (!jx) continue;
    Mask img = 0;
    for_each_bit(X, [&](int x) { img |= bit(out.unit[x]); });
    auto qj = out.target.join(img);
    if (!qj || *qj != out.unit[*jx]) {
      all_joins = false;
      all_witness = X;
      break;
    }
  }
  out.report.note("unit preserves arbitrary existing joins",
                  all_joins ? "yes" : "no, e.g. " + p.set_name(all_witness));
  return out;
}

// The reflected morphism bundle for a map f : S -> Q into a quantale:
// the freely built quantale, its unit, and g with g(unit(s)) = f(s).
struct ReflectedMorphism {
  FiniteQuantale freed;
  std::vector<int> unit;
  std::vector<int> g;
  Report report;
};

// Given a marked-quantale morphism f : (S,A) -> Q (Q fully marked), the
// unique quantale morphism g : Id_A(S) -> Q with g o t = f is
// g(D) = v f(D). Verified: morphism laws and the triangle.
inline ReflectedMorphism reflect_morphism_g(const MarkedPosemigroup& ms,
                                            const FiniteQuantale& q,
                                            const Morphism& f,
                                            int cap = kDefaultCap) {
  if (!is_quantale(q)) throw PreconditionFailed("target is not a quantale");
  MarkedPosemigroup target = fully_marked(q);
  Report pre = check_marked_morphism(f, ms, target,
                                     MorphismLevel::marked_quantale, cap);
  if (!pre.ok())
    throw PreconditionFailed("f is not a marked-quantale morphism:\n" +
                             pre.to_string());
  ReflectedMorphism out{ideal_quantale(ms, cap), {}, {}, {}};
  out.unit = detail::principal_map(ms.sg(), out.freed);
  const auto& ideals = out.freed.sets();
  out.g.resize(out.freed.size());
  for (int i = 0; i < out.freed.size(); ++i) {
    Mask img = 0;
    for_each_bit(ideals[i], [&](int s) { img |= bit(f(s)); });
    auto j = q.join(img);
    if (!j) throw Error("target join missing despite quantale axioms");
    out.g[i] = *j;
  }
  out.report.merge(check_quantale_morphism(out.freed, q, out.g));
  bool tri = true;
  for (int s = 0; s < ms.sg().size() && tri; ++s)
    if (out.g[out.unit[s]] != f(s)) tri = false;
  out.report.add("g o t = f", tri);
  out.report.note("g is an order embedding",
                  is_order_embedding(out.g, out.freed.order(), q.order())
                      ? "yes"
                      : "no");
  return out;
}

// Exhaustively enumerates quantale morphisms h : Id_A(S) -> q with
// h o t = f and reports whether exactly one exists (it must be g).
inline bool uniqueness_check(const MarkedPosemigroup& ms,
                             const FiniteQuantale& q, const Morphism& f,
                             int src_cap = 6, int dst_cap = 6,
                             int cap = kDefaultCap) {
  ReflectedMorphism rm = reflect_morphism_g(ms, q, f, cap);
  const int n = rm.freed.size();
  if (n > src_cap || q.size() > dst_cap)
    throw CapExceeded("uniqueness enumeration over " + std::to_string(n) +
                      " x " + std::to_string(q.size()) + " exceeds caps");
  std::vector<int> h(n, 0);
  long matches = 0;
  bool matches_g = true;
  auto monotone = [&](const std::vector<int>& m) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (rm.freed.leq(x, y) && !q.leq(m[x], m[y])) return false;
    return true;
  };
  while (true) {
    bool tri = true;
    for (std::size_t s = 0; s < rm.unit.size() && tri; ++s)
      if (h[rm.unit[s]] != f(static_cast<int>(s))) tri = false;
    if (tri && monotone(h) && check_quantale_morphism(rm.freed, q, h).ok()) {
      ++matches;
      if (h != rm.g) matches_g = false;
    }
    int i = 0;
    while (i < n && ++h[i] == q.size()) h[i++] = 0;
    if (i == n) break;
  }
  return matches == 1 && matches_g;
}

// The ideal functor on a marked-quantale morphism f : (S,A) -> (T,B):
// Id(f)(D) closes the image f(D) in T. Verifies the morphism laws and the
// naturality square Id(f) o t_S = t_T o f.
inline ReflectedMorphism functor_Id(const MarkedPosemigroup& src,
                                    const MarkedPosemigroup& dst,
                                    const Morphism& f, int cap = kDefaultCap) {
  Report pre = check_marked_morphism(f, src, dst,
                                     MorphismLevel::marked_quantale, cap);
  if (!pre.ok())
    throw PreconditionFailed("f is not a marked-quantale morphism:\n" +
                             pre.to_string());
  ReflectedMorphism out{ideal_quantale(src, cap), {}, {}, {}};
  FiniteQuantale idT = ideal_quantale(dst, cap);
  out.unit = detail::principal_map(src.sg(), out.freed);
  std::vector<int> tT = detail::principal_map(dst.sg(), idT);
  out.g.resize(out.freed.size());
  for (int i = 0; i < out.freed.size(); ++i) {
    Mask img = f.image(out.freed.sets()[i]);
    auto idx = idT.index_of_set(ideal_closure(dst, img, cap).bits);
    if (!idx) throw Error("closed image missing from the target quantale");
    out.g[i] = *idx;
  }
  out.report.merge(check_quantale_morphism(out.freed, idT, out.g));
  bool square = true;
  for (int s = 0; s < src.sg().size() && square; ++s)
    if (out.g[out.unit[s]] != tT[f(s)]) square = false;
  out.report.add("square Id(f) o t_S = t_T o f", square);
  return out;
}

}  // namespace qreflect
