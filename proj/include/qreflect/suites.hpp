#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/closure.hpp"
#include "qreflect/examples.hpp"
#include "qreflect/ideal.hpp"
#include "qreflect/word.hpp"

// Replay of the bundled examples and the cross-cutting law suites. Each
// function returns a Report whose checks are the externally promised
// facts about that example or suite.

namespace qreflect::suites {

namespace detail {

inline Mask mask_of(const Poset& p, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(p.index(n));
  return m;
}

inline std::vector<std::string> set_labels(const FiniteQuantale& q) {
  std::vector<std::string> out;
  for (int i = 0; i < q.size(); ++i) out.push_back(q.label(i));
  return out;
}

inline std::set<std::pair<std::string, std::string>> hasse_labels(
    const FiniteQuantale& q) {
  std::set<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : q.order().hasse()) out.emplace(q.label(lo), q.label(hi));
  return out;
}

}  // namespace detail

inline Report example_61() { return word_example_checks(); }

inline Report example_62(int cap = kDefaultCap) {
  using detail::set_labels;
  Report r;
  FiniteQuantale idd = ideal_quantale(bundled::with_d(bundled::example62()), cap);
  r.add("D-ideals are the eight principal downsets",
        set_labels(idd) ==
            std::vector<std::string>{"{u}", "{a,u}", "{b,u}", "{c,u}",
                                     "{a,b,d,u}", "{a,c,e,u}", "{b,c,f,u}",
                                     "{a,b,c,d,e,f,u,v}"});

  FiniteQuantale ida = ideal_quantale(bundled::example62_A(), cap);
  r.add("explicit marking yields 15 ideals", ida.size() == 15,
        std::to_string(ida.size()) + " ideals");
  r.add("ideal lattice covers match the fifteen sets",
        detail::hasse_labels(ida) ==
            std::set<std::pair<std::string, std::string>>{
                {"{}", "{u}"},
                {"{u}", "{a,u}"},
                {"{u}", "{b,u}"},
                {"{u}", "{c,u}"},
                {"{a,u}", "{a,b,u}"},
                {"{a,u}", "{a,c,u}"},
                {"{b,u}", "{a,b,u}"},
                {"{c,u}", "{a,c,u}"},
                {"{b,u}", "{b,c,f,u}"},
                {"{c,u}", "{b,c,f,u}"},
                {"{a,b,u}", "{a,b,d,u}"},
                {"{a,b,u}", "{a,b,c,f,u}"},
                {"{a,c,u}", "{a,c,e,u}"},
                {"{a,c,u}", "{a,b,c,f,u}"},
                {"{b,c,f,u}", "{a,b,c,f,u}"},
                {"{a,b,d,u}", "{a,b,c,d,f,u}"},
                {"{a,c,e,u}", "{a,b,c,e,f,u}"},
                {"{a,b,c,f,u}", "{a,b,c,d,f,u}"},
                {"{a,b,c,f,u}", "{a,b,c,e,f,u}"},
                {"{a,b,c,d,f,u}", "{a,b,c,d,e,f,u}"},
                {"{a,b,c,e,f,u}", "{a,b,c,d,e,f,u}"},
                {"{a,b,c,d,e,f,u}", "{a,b,c,d,e,f,u,v}"}});

  FiniteQuantale id0 = ideal_quantale(
      MarkedPosemigroup(bundled::example62(), Marking::singletons()), cap);
  std::size_t lows = bundled::example62().poset().lower_sets(cap).size();
  r.add("singleton marking keeps every lower set",
        id0.size() == 20 && lows == 20);
  return r;
}

inline Report example_63(int cap = kDefaultCap) {
  using detail::set_labels;
  Report r;
  Posemigroup sg = bundled::example63();
  const Poset& p = sg.poset();
  MarkedPosemigroup ms = bundled::with_d(sg);
  FiniteQuantale id = ideal_quantale(ms, cap);
  FiniteQuantale q = closed_quantale(sg, cap);
  std::vector<std::string> expect{"{}", "{b}", "{c}", "{b,c}", "{a,b,c}"};
  r.add("D-ideals are the five expected sets", set_labels(id) == expect);
  r.add("closed sets are the same five sets", set_labels(q) == expect);
  std::set<std::pair<std::string, std::string>> cover{
      {"{}", "{b}"},
      {"{}", "{c}"},
      {"{b}", "{b,c}"},
      {"{c}", "{b,c}"},
      {"{b,c}", "{a,b,c}"}};
  r.add("ideal lattice covers", detail::hasse_labels(id) == cover);
  r.add("closed lattice covers", detail::hasse_labels(q) == cover);

  Reflection t = reflection_t(ms, cap);
  Mask bc = detail::mask_of(p, {"b", "c"});
  auto vbc = p.join(bc);
  auto t_join = id.join(bit(t.unit[p.index("b")]) | bit(t.unit[p.index("c")]));
  bool holds = vbc && *vbc == p.index("a") && t_join &&
               id.sets()[*t_join] == bc &&
               id.sets()[t.unit[*vbc]] == p.down(p.index("a")) &&
               *t_join != t.unit[*vbc];
  r.add("t(b v c) differs from t(b) v t(c)", holds);

  int a = p.index("a");
  Morphism const_a{{a, a, a}};
  r.add("constant-to-top map is closure preserving",
        closure_preserving(sg, sg, const_a, cap));
  Mask f_cl = const_a.image(closure(sg, p.as_lower(bc)).bits);
  Mask cl_f = closure(sg, p.down_closure(const_a.image(bc))).bits;
  r.add("its closure image is a strict subset",
        f_cl == detail::mask_of(p, {"a"}) && cl_f == p.down(a) &&
            f_cl != cl_f && subset_of(f_cl, cl_f));
  return r;
}

inline Report example_64(int cap = kDefaultCap) {
  Report r;
  Posemigroup sg = bundled::example64();
  MarkedPosemigroup ms = bundled::with_d(sg);
  FiniteQuantale id = ideal_quantale(ms, cap);
  std::size_t lows = sg.poset().lower_sets(cap).size();
  r.add("D-ideals are all twenty lower sets", id.size() == 20 && lows == 20,
        std::to_string(id.size()) + " ideals over " + std::to_string(lows) +
            " lower sets");

  FiniteQuantale q = closed_quantale(sg, cap);
  r.add("closed sets are the ten expected sets",
        detail::set_labels(q) ==
            std::vector<std::string>{"{}", "{a}", "{d}", "{e}", "{b,d}",
                                     "{c,d}", "{d,e}", "{b,c,d}", "{b,c,d,e}",
                                     "{a,b,c,d,e}"});

  Reflection tau = reflection_tau(sg, cap);
  ReflectedMorphism g = reflect_morphism_g(ms, q, Morphism{tau.unit}, cap);
  const Poset& p = sg.poset();
  auto abcd = g.freed.index_of_set(detail::mask_of(p, {"a", "b", "c", "d"}));
  auto abde = g.freed.index_of_set(detail::mask_of(p, {"a", "b", "d", "e"}));
  bool collapse = g.report.ok() && abcd && abde && q.top() &&
                  g.g[*abcd] == *q.top() && g.g[*abde] == *q.top();
  r.add("g collapses two distinct ideals onto the top", collapse);
  r.add("g is not an order embedding",
        g.report.find("g is an order embedding")->detail == "no");
  return r;
}

inline Report example_65(int cap = kDefaultCap) {
  Report r;
  Posemigroup s1 = bundled::example65_s1();
  Posemigroup s2 = bundled::example65_s2();
  Morphism iota = bundled::iota65();
  r.add("inclusion preserves D-admissibility",
        check_marked_morphism(iota, bundled::with_d(s1), bundled::with_d(s2),
                              MorphismLevel::marked, cap)
            .ok());
  Report cp = is_closure_preserving(s1, s2, iota, cap);
  const Check* c = cp.find("closure preserving");
  r.add("inclusion is not closure preserving",
        c && !c->passed() && c->detail.find("{b,c}") != std::string::npos,
        c ? c->detail : "");
  Mask bc1 = detail::mask_of(s1.poset(), {"b", "c"});
  Mask bc2 = detail::mask_of(s2.poset(), {"b", "c"});
  Mask lhs = iota.image(closure(s1, s1.poset().as_lower(bc1)).bits);
  Mask rhs = closure(s2, s2.poset().as_lower(bc2)).bits;
  r.add("witness: image of the closure escapes the closed image",
        lhs == detail::mask_of(s2.poset(), {"b", "c", "d"}) && rhs == bc2 &&
            !subset_of(lhs, rhs));
  return r;
}

// Nucleus law suite: the closure operator and the ideal closure pass the
// quantic-nucleus laws and fix principal downsets everywhere; the ideal
// closure agrees with the literal intersection of ideals on every subset.
inline Report nucleus_laws(int cap = kDefaultCap) {
  Report r;
  bool closure_ok = true, principal_ok = true;
  for (auto& [name, sg] : bundled::all_posemigroups()) {
    if (!check_quantic_nucleus(sg, closure_nucleus(sg), cap).ok())
      closure_ok = false;
    if (!is_principal_closed(sg, closure_nucleus(sg))) principal_ok = false;
  }
  r.add("closure operator satisfies the nucleus laws", closure_ok);
  r.add("closure operator fixes principal downsets", principal_ok);

  bool ideal_ok = true, ideal_principal = true, oracle_ok = true;
  for (auto& [name, ms] : bundled::all_marked_quantales()) {
    NucleusFn j = ideal_nucleus(ms, cap);
    if (!check_quantic_nucleus(ms.sg(), j, cap).ok()) ideal_ok = false;
    if (!is_principal_closed(ms.sg(), j)) ideal_principal = false;
    for (Mask c = 0; c <= ms.poset().full(); ++c)
      if (ideal_closure(ms, c, cap).bits != ideal_closure_oracle(ms, c, cap).bits)
        oracle_ok = false;
  }
  r.add("ideal closure satisfies the nucleus laws", ideal_ok);
  r.add("ideal closure fixes principal downsets", ideal_principal);
  r.add("ideal closure equals the intersection of ideals on every subset",
        oracle_ok);
  return r;
}

// Quantale-axiom suite over every computed ideal and closed-set quantale.
inline Report quantale_axiom_suite(int cap = kDefaultCap) {
  Report r;
  for (auto& [name, ms] : bundled::all_marked_quantales())
    r.add("ideal quantale of " + name,
          quantale_axioms(ideal_quantale(ms, cap)).ok());
  for (auto& [name, sg] : bundled::all_posemigroups())
    r.add("closed quantale of " + name,
          quantale_axioms(closed_quantale(sg, cap)).ok());
  return r;
}

// Reflection suite: both induced morphisms close their triangles on the
// whole catalogue, uniqueness holds on every small instance, and finite
// quantales are isomorphic to both of their reflections.
inline Report reflection_suite(int cap = kDefaultCap) {
  Report r;
  bool ideal_tri = true;
  for (auto& [name, ms] : bundled::all_marked_quantales()) {
    Reflection t = reflection_t(ms, cap);
    ReflectedMorphism g =
        reflect_morphism_g(ms, t.target, Morphism{t.unit}, cap);
    if (!g.report.ok()) ideal_tri = false;
  }
  r.add("g o t = f for the catalogue of ideal reflections", ideal_tri);

  bool closed_tri = true;
  for (auto& [name, sg] : bundled::all_posemigroups()) {
    Reflection tau = reflection_tau(sg, cap);
    ReflectedMorphism g =
        reflect_morphism_closure(sg, tau.target, Morphism{tau.unit}, cap);
    if (!g.report.ok()) closed_tri = false;
  }
  {
    // crossing reflection: the order-embedding into the closed quantale
    // factored through the ideal quantale
    Posemigroup sg = bundled::example64();
    Reflection tau = reflection_tau(sg, cap);
    ReflectedMorphism g = reflect_morphism_g(bundled::with_d(sg), tau.target,
                                             Morphism{tau.unit}, cap);
    if (!g.report.ok()) closed_tri = false;
  }
  r.add("g o tau = f for the catalogue of closed reflections", closed_tri);

  std::vector<std::pair<std::string, Posemigroup>> targets{
      {"single", bundled::from_names({"e"}, {}, {{"e"}})},
      {"chain-2", bundled::chain_quantale(2)},
      {"chain-3", bundled::chain_quantale(3)},
      {"diamond", bundled::diamond_quantale()}};
  std::vector<std::pair<std::string, MarkedPosemigroup>> sources;
  sources.emplace_back("6.3/D", bundled::with_d(bundled::example63()));
  sources.emplace_back("chain-2/D", bundled::with_d(bundled::chain_quantale(2)));
  sources.emplace_back("chain-3/D", bundled::with_d(bundled::chain_quantale(3)));
  sources.emplace_back("diamond/D", bundled::with_d(bundled::diamond_quantale()));
  long verified = 0;
  bool unique_ok = true;
  for (auto& [sname, ms] : sources) {
    if (ideal_quantale(ms, cap).size() > 6) continue;
    for (auto& [tname, tsg] : targets) {
      FiniteQuantale q = FiniteQuantale::from_posemigroup(tsg);
      if (q.size() > 4) continue;
      MarkedPosemigroup target = fully_marked(q);
      // every marked-quantale morphism from the source into the target
      std::vector<int> f(ms.sg().size(), 0);
      while (true) {
        if (check_marked_morphism(Morphism{f}, ms, target,
                                  MorphismLevel::marked_quantale, cap)
                .ok()) {
          ++verified;
          if (!uniqueness_check(ms, q, Morphism{f}, 6, 4, cap))
            unique_ok = false;
        }
        std::size_t i = 0;
        while (i < f.size() && ++f[i] == q.size()) f[i++] = 0;
        if (i == f.size()) break;
      }
    }
  }
  r.add("reflected morphism is unique on every small instance", unique_ok,
        std::to_string(verified) + " instances");

  bool iso_ok = true;
  for (auto& [name, sg] : bundled::all_quantales()) {
    FiniteQuantale self = FiniteQuantale::from_posemigroup(sg);
    if (!find_isomorphism(self, closed_quantale(sg, cap)).has_value())
      iso_ok = false;
    if (!find_isomorphism(self, ideal_quantale(bundled::with_d(sg), cap))
             .has_value())
      iso_ok = false;
  }
  r.add("finite quantales match both of their reflections", iso_ok);
  return r;
}

// Closure-preservation equivalence suite: the three formulations agree on
// the corpus morphisms and on randomly sampled monotone multiplicative
// maps; between quantales, closure preserving and join preserving
// coincide.
inline Report equivalence_suite(int cap = kDefaultCap) {
  Report r;
  struct PoolEntry {
    int src, dst;
    Morphism f;
  };
  std::vector<Posemigroup> pool{
      bundled::example63(),      bundled::example64(),
      bundled::example65_s1(),   bundled::chain_quantale(2),
      bundled::chain_quantale(3), bundled::diamond_quantale()};
  std::vector<bool> pool_is_quantale;
  for (const Posemigroup& sg : pool)
    pool_is_quantale.push_back(
        is_quantale(FiniteQuantale::from_posemigroup(sg)));

  std::vector<PoolEntry> morphisms;
  for (int si = 0; si < static_cast<int>(pool.size()); ++si)
    for (int ti = 0; ti < static_cast<int>(pool.size()); ++ti) {
      const Posemigroup& S = pool[si];
      const Posemigroup& T = pool[ti];
      std::vector<int> f(S.size(), 0);
      while (true) {
        if (is_posemigroup_morphism(Morphism{f}, S, T))
          morphisms.push_back({si, ti, Morphism{f}});
        int i = 0;
        while (i < S.size() && ++f[i] == T.size()) f[i++] = 0;
        if (i == S.size()) break;
      }
    }

  // corpus morphisms first
  bool corpus_ok = true;
  {
    Posemigroup s1 = bundled::example65_s1(), s2 = bundled::example65_s2();
    Report cp = is_closure_preserving(s1, s2, bundled::iota65(), cap);
    if (!cp.find("equivalent conditions agree")->passed()) corpus_ok = false;
    for (auto& [name, sg] : bundled::all_posemigroups()) {
      std::vector<int> id(sg.size());
      for (int i = 0; i < sg.size(); ++i) id[i] = i;
      Report rr = is_closure_preserving(sg, sg, Morphism{id}, cap);
      if (!rr.find("equivalent conditions agree")->passed()) corpus_ok = false;
    }
  }
  r.add("equivalences agree on the corpus morphisms", corpus_ok);

  // 100 deterministic samples from the generated pool
  bool sampled_ok = true;
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int k = 0; k < 100; ++k) {
    const PoolEntry& e = morphisms[next() % morphisms.size()];
    Report rr = is_closure_preserving(pool[e.src], pool[e.dst], e.f, cap);
    if (!rr.find("equivalent conditions agree")->passed()) sampled_ok = false;
  }
  r.add("equivalences agree on 100 sampled morphisms", sampled_ok,
        "pool of " + std::to_string(morphisms.size()));

  bool iff_ok = true;
  long iff_count = 0;
  for (const PoolEntry& e : morphisms) {
    if (!pool_is_quantale[e.src] || !pool_is_quantale[e.dst]) continue;
    Report rr = check_morphism_theorems(e.f, bundled::with_d(pool[e.src]),
                                        bundled::with_d(pool[e.dst]), cap);
    const Check* c = rr.find("quantale morphism iff closure preserving");
    ++iff_count;
    if (!c || c->outcome != Outcome::pass) iff_ok = false;
  }
  {
    Posemigroup q62 = bundled::example62();
    std::vector<int> id(q62.size());
    for (int i = 0; i < q62.size(); ++i) id[i] = i;
    Report rr = check_morphism_theorems(Morphism{id}, bundled::with_d(q62),
                                        bundled::with_d(q62), cap);
    ++iff_count;
    if (rr.find("quantale morphism iff closure preserving")->outcome !=
        Outcome::pass)
      iff_ok = false;
  }
  r.add("between quantales: quantale morphism iff closure preserving", iff_ok,
        std::to_string(iff_count) + " morphisms");
  return r;
}

// Inclusion and star suite: the closed sets sit inside every bundled
// ideal quantale, and the star operator matches the closure of the
// downset on every subset of every carrier.
inline Report inclusion_star_suite(int cap = kDefaultCap) {
  Report r;
  bool incl_ok = true;
  for (auto& [name, ms] : bundled::all_marked_quantales())
    if (!inclusion_check(ms, cap).ok()) incl_ok = false;
  r.add("closed sets are ideals for every bundled marked quantale", incl_ok);

  bool star_ok = true;
  for (auto& [name, sg] : bundled::all_posemigroups())
    for (Mask X = 0; X <= sg.poset().full(); ++X)
      if (star_closure(sg, X) != closure(sg, sg.poset().down_closure(X)).bits)
        star_ok = false;
  r.add("star closure equals closure of the downset on every subset", star_ok);
  return r;
}

}  // namespace qreflect::suites
