#include "doctest.h"
#include "qreflect/examples.hpp"
#include "qreflect/marking.hpp"

using namespace qreflect;

namespace {

Mask mask_of(const Poset& p, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(p.index(n));
  return m;
}

}  // namespace

TEST_CASE("admissibility per kind") {
  MarkedPosemigroup ms = bundled::example62_A();
  const Poset& p = ms.poset();
  for (int s = 0; s < ms.sg().size(); ++s) CHECK(ms.admissible(bit(s)));
  CHECK(ms.admissible(mask_of(p, {"b", "c"})));
  CHECK(!ms.admissible(mask_of(p, {"d", "e"})));
  CHECK(!ms.admissible(0));

  // memoization never changes an answer
  for (Mask m = 0; m <= p.full(); ++m)
    CHECK(ms.admissible(m) == ms.admissible(m));
}

TEST_CASE("D admissibility") {
  Posemigroup s63 = bundled::example63();
  const Poset& p = s63.poset();
  CHECK(!is_D_admissible(s63, mask_of(p, {"b", "c"})));
  CHECK(is_D_admissible(s63, mask_of(p, {"b"})));
  CHECK(is_D_admissible(s63, mask_of(p, {"a", "b"})));

  // on a quantale every nonempty subset is D-admissible
  Posemigroup q = bundled::example62();
  for (Mask m = 1; m <= q.poset().full(); ++m) CHECK(is_D_admissible(q, m));

  // the empty set is D-admissible exactly when a bottom exists and every
  // two-sided translation absorbs it
  CHECK(is_D_admissible(q, 0));
  CHECK(!is_D_admissible(s63, 0));
  CHECK(!is_D_admissible(bundled::example64(), 0));
}

TEST_CASE("explicit markings and the empty set") {
  Posemigroup s63 = bundled::example63();
  CHECK_THROWS_AS(
      MarkedPosemigroup(s63, Marking::explicit_sets({0, bit(0)})), Error);
  // with a bottom present the empty set may be listed
  Posemigroup q = bundled::example62();
  std::vector<Mask> sets{0};
  for (int s = 0; s < q.size(); ++s) sets.push_back(bit(s));
  CHECK_NOTHROW(MarkedPosemigroup(q, Marking::explicit_sets(sets)));
}

TEST_CASE("marking axioms") {
  for (auto& [name, sg] : bundled::all_posemigroups()) {
    CAPTURE(name);
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::singletons())).ok());
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::d_joins())).ok());
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::full())).ok());
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::card_le(2))).ok());
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::chains())).ok());
    CHECK(check_marking_axioms(MarkedPosemigroup(sg, Marking::bounded())).ok());
    CHECK(
        check_marking_axioms(MarkedPosemigroup(sg, Marking::bounded_pairs())).ok());
  }
  CHECK(check_marking_axioms(
            MarkedPosemigroup(bundled::chain_quantale(3), Marking::bounded_pairs()))
            .ok());

  // an explicit family without singletons breaks A1
  Posemigroup s63 = bundled::example63();
  Mask bc = mask_of(s63.poset(), {"b", "c"});
  Report r = check_marking_axioms(
      MarkedPosemigroup(s63, Marking::explicit_sets({bc})));
  CHECK(!r.ok());
  CHECK(!r.find("A1 singletons admissible")->passed());
}

TEST_CASE("directed marking matches a direct scan") {
  Posemigroup sg = bundled::example64();
  MarkedPosemigroup dir(sg, Marking::directed());
  const Poset& p = sg.poset();
  for (Mask m = 0; m <= p.full(); ++m) {
    bool expect = m != 0;
    for_each_bit(m, [&](int x) {
      for_each_bit(m, [&](int y) {
        bool has_ub = false;
        for_each_bit(m, [&](int z) {
          if (p.leq(x, z) && p.leq(y, z)) has_ub = true;
        });
        expect = expect && has_ub;
      });
    });
    CHECK(dir.admissible(m) == expect);
  }
}

TEST_CASE("marked quantale check") {
  for (auto& [name, sg] : bundled::all_posemigroups()) {
    CAPTURE(name);
    CHECK(is_marked_quantale(MarkedPosemigroup(sg, Marking::singletons())));
    CHECK(is_marked_quantale(MarkedPosemigroup(sg, Marking::d_joins())));
  }
  CHECK(is_marked_quantale(bundled::example62_A()));

  Posemigroup s63 = bundled::example63();
  std::vector<Mask> sets;
  for (int s = 0; s < s63.size(); ++s) sets.push_back(bit(s));
  sets.push_back(mask_of(s63.poset(), {"b", "c"}));
  Report r = check_marked_quantale(
      MarkedPosemigroup(s63, Marking::explicit_sets(sets)));
  CHECK(!r.ok());
  CHECK(r.checks().front().detail.find("{b,c}") != std::string::npos);
}

TEST_CASE("every admissible set of a marked quantale is D-admissible") {
  for (auto& [name, ms] : bundled::all_marked_quantales()) {
    CAPTURE(name);
    const Poset& p = ms.poset();
    for (Mask m = 0; m <= p.full(); ++m)
      if (ms.admissible(m)) CHECK(is_D_admissible(ms.sg(), m));
  }
}

TEST_CASE("marked morphism levels") {
  MarkedPosemigroup m63 = bundled::with_d(bundled::example63());
  Morphism id{{0, 1, 2}};
  CHECK(check_marked_morphism(id, m63, m63, MorphismLevel::marked_quantale).ok());

  // the 6.5 inclusion preserves D-admissibility
  MarkedPosemigroup s1 = bundled::with_d(bundled::example65_s1());
  MarkedPosemigroup s2 = bundled::with_d(bundled::example65_s2());
  CHECK(check_marked_morphism(bundled::iota65(), s1, s2, MorphismLevel::marked)
            .ok());

  // constant map onto a non-idempotent breaks multiplication
  Morphism to_b{{1, 1, 1}};  // b*b = c in 6.3
  Report r = check_marked_morphism(to_b, m63, m63, MorphismLevel::posemigroup);
  CHECK(!r.ok());
  CHECK(!r.find("multiplicative")->passed());
}
