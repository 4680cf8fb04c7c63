#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/ideal.hpp"

namespace qreflect {

// The closure of a lower set D: x belongs iff every two-sided constraint
// satisfied by all of D is satisfied by x, i.e. for all a in S and
// multipliers b, c in S^1, bDc <= a forces bxc <= a.
inline LowerSet closure(const Posemigroup& sg, LowerSet D) {
  const Poset& p = sg.poset();
  Mask result = p.full();
  for (OptElement b : sg.s1_elements())
    for (OptElement c : sg.s1_elements()) {
      Mask t = sg.translate(b, D.bits, c);
      for (int a = 0; a < sg.size(); ++a) {
        if (!subset_of(t, p.down(a))) continue;
        Mask allowed = 0;
        for (int x = 0; x < sg.size(); ++x)
          if (p.leq(sg.mul(b, x, c), a)) allowed |= bit(x);
        result &= allowed;
        if (result == D.bits) return LowerSet{result};
      }
    }
  return LowerSet{result};
}

inline NucleusFn closure_nucleus(const Posemigroup& sg) {
  return NucleusFn("closure", [sg](LowerSet d) { return closure(sg, d); });
}

// Q(S): the quotient by the closure nucleus.
inline FiniteQuantale closed_quantale(const Posemigroup& sg,
                                      int cap = kDefaultCap) {
  return quotient(sg, closure_nucleus(sg), cap);
}

// The star closure of an arbitrary subset X: the intersection of the four
// displayed components, with all multipliers drawn from S itself. Its
// agreement with closure(X down) is a tested property, not an assumption.
inline Mask star_closure(const Posemigroup& sg, Mask X) {
  const Poset& p = sg.poset();
  const int n = sg.size();
  Mask out = 0;
  for (int s = 0; s < n; ++s) {
    bool in = true;
    for (int b = 0; b < n && in; ++b)
      if (subset_of(X, p.down(b)) && !p.leq(s, b)) in = false;  // X^ul
    for (int a = 0; a < n && in; ++a)
      for (int b = 0; b < n && in; ++b) {
        if (subset_of(sg.translate(std::nullopt, X, a), p.down(b)) &&
            !p.leq(sg.mul(s, a), b))
          in = false;  // X^L
        if (subset_of(sg.translate(a, X, std::nullopt), p.down(b)) &&
            !p.leq(sg.mul(a, s), b))
          in = false;  // X^R
      }
    for (int a = 0; a < n && in; ++a)
      for (int b = 0; b < n && in; ++b)
        for (int c = 0; c < n && in; ++c)
          if (subset_of(sg.translate(a, X, c), p.down(b)) &&
              !p.leq(sg.mul(a, sg.mul(s, c)), b))
            in = false;  // X^T
    if (in) out |= bit(s);
  }
  return out;
}

// The star quotient lives on the powerset with the pointwise (not
// down-closed) product; its fixpoints and multiplication come straight
// from the star operator.
inline FiniteQuantale star_quantale(const Posemigroup& sg,
                                    int cap = kDefaultCap) {
  const Poset& p = sg.poset();
  if (sg.size() > cap) throw CapExceeded("star quotient exceeds cap");
  std::vector<Mask> fix;
  for (Mask X = 0; X <= p.full(); ++X)
    if (star_closure(sg, X) == X) fix.push_back(X);
  std::sort(fix.begin(), fix.end(),
            [&](Mask a, Mask b) { return p.canonical_less(a, b); });
  const int n = static_cast<int>(fix.size());
  auto index_of = [&](Mask m) {
    for (int i = 0; i < n; ++i)
      if (fix[i] == m) return i;
    throw Error("star image is not a star fixpoint");
  };
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Mask prod = 0;
      for_each_bit(fix[i], [&](int x) {
        for_each_bit(fix[k], [&](int y) { prod |= bit(sg.mul(x, y)); });
      });
      mult[i][k] = index_of(star_closure(sg, prod));
    }
  return FiniteQuantale::from_sets(p, std::move(fix), std::move(mult));
}

// The older closure variant whose multipliers range over S only, with no
// identity omission. Exposed for comparison with `closure`; on a carrier
// with an identity the two operators coincide.
inline LowerSet cl_variant(const Posemigroup& sg, LowerSet I) {
  const Poset& p = sg.poset();
  Mask result = p.full();
  for (int a = 0; a < sg.size(); ++a)
    for (int c = 0; c < sg.size(); ++c) {
      Mask t = sg.translate(a, I.bits, c);
      for (int b = 0; b < sg.size(); ++b) {
        if (!subset_of(t, p.down(b))) continue;
        Mask allowed = 0;
        for (int x = 0; x < sg.size(); ++x)
          if (p.leq(sg.mul(a, sg.mul(x, c)), b)) allowed |= bit(x);
        result &= allowed;
      }
    }
  return LowerSet{result};
}

// Closure preservation of a posemigroup morphism, by the definition
// f(cl(M down)) <= cl(f(M) down) over every subset M, cross-checked
// against the two equivalent formulations (round-trip equality on lower
// sets, and closedness of preimages of closed sets). The three verdicts
// must agree.
inline Report is_closure_preserving(const Posemigroup& src,
                                    const Posemigroup& dst, const Morphism& f,
                                    int cap = kDefaultCap) {
  if (!is_posemigroup_morphism(f, src, dst))
    throw PreconditionFailed("f is not a posemigroup morphism");
  const Poset& ps = src.poset();
  const Poset& pt = dst.poset();
  if (src.size() > cap || dst.size() > cap)
    throw CapExceeded("closure-preservation scan exceeds cap");
  Report r;

  bool def = true;
  std::string witness;
  for (Mask M = 0; M <= ps.full() && def; ++M) {
    Mask lhs = f.image(closure(src, ps.down_closure(M)).bits);
    Mask rhs = closure(dst, pt.down_closure(f.image(M))).bits;
    if (!subset_of(lhs, rhs)) {
      def = false;
      witness = "M = " + ps.set_name(M) + ", f(cl(M)) = " + pt.set_name(lhs) +
                " !<= " + pt.set_name(rhs);
    }
  }
  r.add("closure preserving", def, witness);

  bool cond2 = true;
  for (LowerSet m : ps.lower_sets(cap)) {
    Mask lhs = closure(dst, pt.down_closure(f.image(closure(src, m).bits))).bits;
    Mask rhs = closure(dst, pt.down_closure(f.image(m.bits))).bits;
    if (lhs != rhs) {
      cond2 = false;
      break;
    }
  }
  r.add("round-trip equality cl(f(cl M)) = cl(f M)", cond2);

  bool cond3 = true;
  for (LowerSet m : pt.lower_sets(cap)) {
    if (closure(dst, m).bits != m.bits) continue;
    Mask pre = f.preimage(m.bits, src.size());
    if (closure(src, ps.down_closure(pre)).bits != pre) {
      cond3 = false;
      break;
    }
  }
  r.add("preimages of closed sets are closed", cond3);

  r.add("equivalent conditions agree", def == cond2 && cond2 == cond3);
  return r;
}

inline bool closure_preserving(const Posemigroup& src, const Posemigroup& dst,
                               const Morphism& f, int cap = kDefaultCap) {
  Report r = is_closure_preserving(src, dst, f, cap);
  const Check* c = r.find("closure preserving");
  return c && c->passed();
}

// The unit tau : S -> Q(S), s -> s down, with the same battery of checks
// as the ideal unit plus closure preservation of tau itself.
inline Reflection reflection_tau(const Posemigroup& sg, int cap = kDefaultCap) {
  Reflection out{closed_quantale(sg, cap), {}, {}};
  out.unit = detail::principal_map(sg, out.target);
  detail::report_unit_properties(sg, out.target, out.unit, out.report, cap);
  Posemigroup qsg = posemigroup_of(out.target);
  Report cp = is_closure_preserving(sg, qsg, Morphism{out.unit}, cap);
  const Check* c = cp.find("closure preserving");
  out.report.add("unit closure preserving", c && c->passed());
  return out;
}

// For a closure-preserving f : S -> Q into a quantale, the induced
// g : Q(S) -> Q with g(D) = v f(D) and g o tau = f. When f is an order
// embedding, g must be one as well, and that is asserted.
inline ReflectedMorphism reflect_morphism_closure(const Posemigroup& sg,
                                                  const FiniteQuantale& q,
                                                  const Morphism& f,
                                                  int cap = kDefaultCap) {
  if (!is_quantale(q)) throw PreconditionFailed("target is not a quantale");
  Posemigroup qsg = posemigroup_of(q);
  if (!closure_preserving(sg, qsg, f, cap))
    throw PreconditionFailed("f is not closure preserving");
  ReflectedMorphism out{closed_quantale(sg, cap), {}, {}, {}};
  out.unit = detail::principal_map(sg, out.freed);
  out.g.resize(out.freed.size());
  for (int i = 0; i < out.freed.size(); ++i) {
    auto j = q.join(f.image(out.freed.sets()[i]));
    if (!j) throw Error("target join missing despite quantale axioms");
    out.g[i] = *j;
  }
  out.report.merge(check_quantale_morphism(out.freed, q, out.g));
  bool tri = true;
  for (int s = 0; s < sg.size() && tri; ++s)
    if (out.g[out.unit[s]] != f(s)) tri = false;
  out.report.add("g o tau = f", tri);
  bool f_emb = is_order_embedding(f.map, sg.poset(), q.order());
  bool g_emb = is_order_embedding(out.g, out.freed.order(), q.order());
  if (f_emb)
    out.report.add("g inherits the order embedding", g_emb);
  else
    out.report.note("g is an order embedding", g_emb ? "yes" : "no");
  return out;
}

// Q(S) sits inside Id_A(S) for any marked quantale; alongside, the
// closure of any joinable set stays under the principal downset of its
// join, with equality and matching joins when the set is admissible.
inline Report inclusion_check(const MarkedPosemigroup& ms,
                              int cap = kDefaultCap) {
  if (!is_marked_quantale(ms, cap))
    throw NotMarkedQuantale("inclusion check needs a marked quantale");
  const Posemigroup& sg = ms.sg();
  const Poset& p = sg.poset();
  Report r;
  bool incl = true;
  std::string witness;
  for (LowerSet d : p.lower_sets(cap)) {
    if (closure(sg, d).bits != d.bits) continue;
    if (!is_A_ideal(ms, d, cap)) {
      incl = false;
      witness = p.set_name(d.bits);
      break;
    }
  }
  r.add("every closed set is an ideal", incl, witness);

  bool under = true, adm_eq = true, adm_join = true;
  for (Mask D = 0; D <= p.full(); ++D) {
    auto v = p.join(D);
    if (!v) continue;
    Mask cl = closure(sg, p.down_closure(D)).bits;
    if (!subset_of(cl, p.down(*v))) {
      under = false;
      break;
    }
    if (ms.admissible(D)) {
      if (cl != p.down(*v)) adm_eq = false;
      auto cv = p.join(cl);
      if (!cv || *cv != *v) adm_join = false;
    }
  }
  r.add("cl(D) under (vD) down when vD exists", under);
  r.add("equality for admissible D", adm_eq);
  r.add("v cl(D) = vD for admissible D", adm_join);
  return r;
}

// Morphism-level facts tying closure preservation to quantale and marked
// structure: (i) between quantales, quantale morphism and closure
// preserving coincide; (ii) a closure-preserving map of marked quantales
// preserves admissible joins; (iii) when the image of D is admissible,
// v f(cl D) = v cl(f D).
inline Report check_morphism_theorems(const Morphism& f,
                                      const MarkedPosemigroup& src,
                                      const MarkedPosemigroup& dst,
                                      int cap = kDefaultCap) {
  const Posemigroup& S = src.sg();
  const Posemigroup& T = dst.sg();
  if (!is_posemigroup_morphism(f, S, T))
    throw PreconditionFailed("f is not a posemigroup morphism");
  Report r;
  bool cp = closure_preserving(S, T, f, cap);
  r.note("f closure preserving", cp ? "yes" : "no");

  bool sq = is_quantale(FiniteQuantale::from_posemigroup(S));
  bool tq = is_quantale(FiniteQuantale::from_posemigroup(T));
  if (sq && tq) {
    bool qm = true;
    for (Mask M = 0; M <= S.poset().full() && qm; ++M) {
      auto jm = S.poset().join(M);
      auto ji = T.poset().join(f.image(M));
      if (!jm || !ji || f(*jm) != *ji) qm = false;
    }
    r.add("quantale morphism iff closure preserving", qm == cp,
          qm == cp ? std::string()
                   : (qm ? "join-preserving but not closure preserving"
                         : "closure preserving but not join-preserving"));
  } else {
    r.add("quantale morphism iff closure preserving", Outcome::vacuous,
          "endpoints are not both quantales");
  }

  bool adm = true;
  std::string adm_witness;
  src.for_each_admissible_subset(
      S.poset().full(),
      [&](Mask M) {
        if (!adm) return;
        auto jm = S.poset().join(M);
        auto ji = T.poset().join(f.image(M));
        if (!jm || !ji || f(*jm) != *ji) {
          adm = false;
          adm_witness = S.poset().set_name(M);
        }
      },
      cap);
  if (cp)
    r.add("closure preserving implies admissible joins preserved", adm,
          adm_witness);
  else
    r.add("closure preserving implies admissible joins preserved",
          Outcome::vacuous,
          std::string("f is not closure preserving; it does ") +
              (adm ? "" : "not ") + "preserve admissible joins regardless");

  if (cp) {
    bool lem = true;
    for (Mask D = 0; D <= S.poset().full() && lem; ++D) {
      if (!dst.admissible(f.image(D))) continue;
      Mask lhs = f.image(closure(S, S.poset().down_closure(D)).bits);
      Mask rhs = closure(T, T.poset().down_closure(f.image(D))).bits;
      auto jl = T.poset().join(lhs);
      auto jr = T.poset().join(rhs);
      if (!jl || !jr || *jl != *jr) lem = false;
    }
    r.add("v f(cl D) = v cl(f D) for admissible images", lem);
  } else {
    r.add("v f(cl D) = v cl(f D) for admissible images", Outcome::vacuous,
          "f is not closure preserving");
  }
  return r;
}

// The closed-set functor on a closure-preserving morphism:
// Q(f)(D) = cl(f(D) down), with the naturality square verified.
inline ReflectedMorphism functor_Q(const Posemigroup& src,
                                   const Posemigroup& dst, const Morphism& f,
                                   int cap = kDefaultCap) {
  if (!closure_preserving(src, dst, f, cap))
    throw PreconditionFailed("f is not closure preserving");
  ReflectedMorphism out{closed_quantale(src, cap), {}, {}, {}};
  FiniteQuantale qT = closed_quantale(dst, cap);
  out.unit = detail::principal_map(src, out.freed);
  std::vector<int> tauT = detail::principal_map(dst, qT);
  out.g.resize(out.freed.size());
  for (int i = 0; i < out.freed.size(); ++i) {
    Mask img = f.image(out.freed.sets()[i]);
    auto idx = qT.index_of_set(closure(dst, dst.poset().down_closure(img)).bits);
    if (!idx) throw Error("closed image missing from the target quantale");
    out.g[i] = *idx;
  }
  out.report.merge(check_quantale_morphism(out.freed, qT, out.g));
  bool square = true;
  for (int s = 0; s < src.size() && square; ++s)
    if (out.g[out.unit[s]] != tauT[f(s)]) square = false;
  out.report.add("square Q(f) o tau_S = tau_T o f", square);
  return out;
}

}  // namespace qreflect
