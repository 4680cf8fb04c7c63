#include "doctest.h"
#include "qreflect/closure.hpp"
#include "qreflect/examples.hpp"
#include "qreflect/ideal.hpp"
#include "qreflect/nucleus.hpp"

using namespace qreflect;

namespace {

Mask mask_of(const Poset& p, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(p.index(n));
  return m;
}

std::vector<std::pair<std::string, NucleusFn>> builtin_nuclei(
    const Posemigroup& sg) {
  std::vector<std::pair<std::string, NucleusFn>> out;
  out.emplace_back("identity", identity_nucleus());
  out.emplace_back("closure", closure_nucleus(sg));
  out.emplace_back("ideal/D", ideal_nucleus(bundled::with_d(sg)));
  out.emplace_back("ideal/singletons",
                   ideal_nucleus(MarkedPosemigroup(sg, Marking::singletons())));
  return out;
}

}  // namespace

TEST_CASE("quantic nucleus laws") {
  Posemigroup sg = bundled::example63();
  CHECK(check_quantic_nucleus(sg, identity_nucleus()).ok());
  CHECK(check_quantic_nucleus(sg, closure_nucleus(sg)).ok());

  NucleusFn to_empty("to empty", [](LowerSet) { return LowerSet{0}; });
  Report r = check_quantic_nucleus(sg, to_empty);
  CHECK(!r.ok());
  CHECK(!r.find("inflationary")->passed());
}

TEST_CASE("nucleus laws across the catalogue") {
  for (auto& [name, sg] : bundled::all_posemigroups()) {
    CAPTURE(name);
    for (auto& [nname, j] : builtin_nuclei(sg)) {
      CAPTURE(nname);
      CHECK(check_quantic_nucleus(sg, j).ok());
      CHECK(quantale_axioms(quotient(sg, j)).ok());
    }
  }
}

TEST_CASE("principal closedness") {
  Posemigroup s64 = bundled::example64();
  CHECK(is_principal_closed(s64, closure_nucleus(s64)));
  for (auto& [name, ms] : bundled::all_marked_quantales()) {
    CAPTURE(name);
    CHECK(is_principal_closed(ms.sg(), ideal_nucleus(ms)));
  }

  Posemigroup chain = bundled::chain_quantale(2);
  NucleusFn to_top("to top", [chain](LowerSet) {
    return LowerSet{chain.poset().full()};
  });
  CHECK(!is_principal_closed(chain, to_top));
}

TEST_CASE("quotient carriers") {
  Posemigroup s63 = bundled::example63();
  CHECK(quotient(s63, identity_nucleus()).size() == 5);  // all lower sets
  CHECK(quotient(s63, closure_nucleus(s63)).size() == 5);
  Posemigroup s64 = bundled::example64();
  CHECK(quotient(s64, ideal_nucleus(bundled::with_d(s64))).size() == 20);

  NucleusFn bogus("bogus", [](LowerSet) { return LowerSet{0}; });
  CHECK_THROWS_AS(quotient(s63, bogus), NucleusInvalid);
}

TEST_CASE("quotient meets are intersections, joins contain unions") {
  Posemigroup sg = bundled::example64();
  FiniteQuantale q = quotient(sg, closure_nucleus(sg));
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      auto m = q.meet(bit(i) | bit(j));
      REQUIRE(m);
      CHECK(q.sets()[*m] == (q.sets()[i] & q.sets()[j]));
      auto v = q.join(bit(i) | bit(j));
      REQUIRE(v);
      Mask un = q.sets()[i] | q.sets()[j];
      CHECK(subset_of(un, q.sets()[*v]));
      bool union_fixed = q.index_of_set(un).has_value();
      CHECK((q.sets()[*v] == un) == union_fixed);
    }
}

TEST_CASE("principal closed collapse") {
  Posemigroup s63 = bundled::example63();
  NucleusFn cl = closure_nucleus(s63);
  const Poset& p = s63.poset();

  // trivially satisfied on principal downsets
  Report r1 = check_prop_topol(s63, cl, LowerSet{p.down(p.index("a"))});
  CHECK(r1.ok());
  CHECK(r1.find("hypothesis vD in j(D)") == nullptr);

  // {b,c} has join a outside its closure: vacuous
  Report r2 = check_prop_topol(s63, cl, p.as_lower(mask_of(p, {"b", "c"})));
  CHECK(r2.find("hypothesis vD in j(D)") != nullptr);

  // on a quantale with the ideal nucleus the hypothesis always holds
  Posemigroup q = bundled::example62();
  NucleusFn jd = ideal_nucleus(bundled::with_d(q));
  for (LowerSet d : q.poset().lower_sets()) {
    Report r = check_prop_topol(q, jd, d);
    CHECK(r.ok());
    CHECK(r.find("j(D) = (vD) down") != nullptr);
  }
}

TEST_CASE("representation of a quantale as a quotient") {
  Posemigroup chain = bundled::chain_quantale(2);
  CHECK(check_representation(chain, ideal_nucleus(bundled::with_d(chain))).ok());

  Posemigroup q62 = bundled::example62();
  CHECK(check_representation(q62, ideal_nucleus(bundled::with_d(q62))).ok());

  Posemigroup s63 = bundled::example63();
  CHECK_THROWS_AS(
      check_representation(s63, ideal_nucleus(bundled::with_d(s63))),
      PreconditionFailed);

  // the identity nucleus keeps non-principal fixpoints, breaking the
  // collapse hypothesis
  CHECK_THROWS_AS(check_representation(q62, identity_nucleus()),
                  HypothesisFailed);
}

TEST_CASE("unit map properties") {
  Posemigroup s63 = bundled::example63();
  CHECK(eta_properties(s63, closure_nucleus(s63)).ok());

  Posemigroup single = bundled::from_names({"e"}, {}, {{"e"}});
  CHECK(eta_properties(single, closure_nucleus(single)).ok());

  Posemigroup s64 = bundled::example64();
  CHECK(eta_properties(s64, ideal_nucleus(bundled::with_d(s64))).ok());
}

TEST_CASE("quantale axioms") {
  Posemigroup s63 = bundled::example63();
  FiniteQuantale q = quotient(s63, closure_nucleus(s63));
  CHECK(quantale_axioms(q).ok());

  for (auto& [name, sg] : bundled::all_posemigroups()) {
    CAPTURE(name);
    CHECK(quantale_axioms(quotient(sg, identity_nucleus())).ok());
  }

  // corrupt one table entry; some law must break with a witness
  FiniteQuantale broken = q.with_table_entry(1, 2, q.size() - 1);
  FiniteQuantale broken2 = q.with_table_entry(0, 0, q.size() - 1);
  CHECK((!quantale_axioms(broken).ok() || !quantale_axioms(broken2).ok()));
}

TEST_CASE("isomorphism search") {
  Posemigroup s63 = bundled::example63();
  FiniteQuantale q = quotient(s63, closure_nucleus(s63));
  auto self = find_isomorphism(q, q);
  REQUIRE(self);
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) {
      CHECK(q.leq(i, j) == q.leq((*self)[i], (*self)[j]));
      CHECK((*self)[q.mul(i, j)] == q.mul((*self)[i], (*self)[j]));
    }

  FiniteQuantale c2 = FiniteQuantale::from_posemigroup(bundled::chain_quantale(2));
  FiniteQuantale c3 = FiniteQuantale::from_posemigroup(bundled::chain_quantale(3));
  CHECK(!find_isomorphism(c2, c3).has_value());

  // symmetric: a hit one way is a hit the other way
  FiniteQuantale d = FiniteQuantale::from_posemigroup(bundled::diamond_quantale());
  CHECK(find_isomorphism(d, c3).has_value() ==
        find_isomorphism(c3, d).has_value());
  FiniteQuantale id62 = ideal_quantale(bundled::with_d(bundled::example62()));
  FiniteQuantale q62 = FiniteQuantale::from_posemigroup(bundled::example62());
  CHECK(find_isomorphism(q62, id62).has_value());
  CHECK(find_isomorphism(id62, q62).has_value());
}
