#include "doctest.h"
#include "qreflect/constructions.hpp"
#include "qreflect/examples.hpp"

using namespace qreflect;

namespace {

Mask mask_of(const Poset& p, std::initializer_list<const char*> names) {
  Mask m = 0;
  for (const char* n : names) m |= bit(p.index(n));
  return m;
}

OptElement compose(const Posemigroup& sg, OptElement a, OptElement b) {
  if (!a) return b;
  if (!b) return a;
  return sg.mul(*a, *b);
}

}  // namespace

TEST_CASE("posemigroup validation") {
  CHECK_NOTHROW(bundled::example63());
  CHECK_NOTHROW(bundled::example62());  // intersection on the powerset

  // two-chain with x*x = y and every other product x
  Poset chain = Poset::from_pairs({"x", "y"}, {{"x", "y"}});
  std::vector<std::vector<int>> bad{{1, 0}, {0, 0}};
  CHECK_THROWS_AS(Posemigroup::validate(chain, bad), Error);
}

TEST_CASE("identity detection") {
  CHECK(bundled::example62().identity() ==
        bundled::example62().poset().index("v"));
  CHECK(!bundled::example63().identity().has_value());
  CHECK(!bundled::example64().identity().has_value());  // e is one-sided only
  CHECK(bundled::example63().s1_elements().size() == 4);
  CHECK(bundled::example62().s1_elements().size() == 8);
}

TEST_CASE("translation") {
  Posemigroup sg = bundled::example63();
  const Poset& p = sg.poset();
  Mask bc = mask_of(p, {"b", "c"});
  CHECK(sg.translate(kFormalIdentity, bc, kFormalIdentity) == bc);
  CHECK(sg.translate(p.index("a"), bc, kFormalIdentity) == mask_of(p, {"c"}));

  // two translations compose into one with multiplied ends
  for (Mask X = 0; X <= p.full(); ++X)
    for (OptElement a : sg.s1_elements())
      for (OptElement b : sg.s1_elements())
        for (OptElement c : sg.s1_elements())
          for (OptElement d : sg.s1_elements())
            CHECK(sg.translate(a, sg.translate(c, X, d), b) ==
                  sg.translate(compose(sg, a, c), X, compose(sg, d, b)));
}

TEST_CASE("set product") {
  Posemigroup sg = bundled::example63();
  const Poset& p = sg.poset();
  CHECK(sg.set_product(0, mask_of(p, {"a"})).bits == 0);
  CHECK(sg.set_product(mask_of(p, {"a"}), 0).bits == 0);
  CHECK(sg.set_product(mask_of(p, {"a"}), mask_of(p, {"a"})).bits ==
        mask_of(p, {"a", "b", "c"}));

  for (auto& [name, s] : bundled::all_posemigroups()) {
    const Poset& q = s.poset();
    // principal downsets multiply to the principal downset of the product
    for (int a = 0; a < s.size(); ++a)
      for (int b = 0; b < s.size(); ++b)
        CHECK(s.set_product(q.down(a), q.down(b)).bits == q.down(s.mul(a, b)));
  }

  // monotone in both arguments, associative up to down-closure
  Posemigroup s4 = bundled::example64();
  for (Mask x = 0; x <= s4.poset().full(); ++x)
    for (Mask y = 0; y <= s4.poset().full(); ++y) {
      for (Mask big = 0; big <= s4.poset().full(); big += 5) {
        if (subset_of(x, big))
          CHECK(subset_of(s4.set_product(x, y).bits,
                          s4.set_product(big, y).bits));
        if (subset_of(y, big))
          CHECK(subset_of(s4.set_product(x, y).bits,
                          s4.set_product(x, big).bits));
      }
      for (Mask z = 0; z <= s4.poset().full(); z += 7)
        CHECK(s4.set_product(x, s4.set_product(y, z).bits).bits ==
              s4.set_product(s4.set_product(x, y).bits, z).bits);
    }
}

TEST_CASE("trivial markings") {
  Posemigroup sg = bundled::example63();
  auto [et, ep] = trivial_markings(sg);
  MarkedPosemigroup t(sg, et), p(sg, ep);
  int t_count = 0, p_count = 0;
  for (Mask m = 0; m <= sg.poset().full(); ++m) {
    if (t.admissible(m)) ++t_count;
    if (p.admissible(m)) ++p_count;
  }
  CHECK(t_count == sg.size());
  CHECK(p_count == (1 << sg.size()) - 1);  // every nonempty subset
}

TEST_CASE("product of marked posemigroups") {
  MarkedPosemigroup single(bundled::from_names({"e"}, {}, {{"e"}}),
                           Marking::singletons());
  MarkedPosemigroup m63 = bundled::with_d(bundled::example63());
  MarkedPosemigroup prod = product(single, m63);
  CHECK(prod.sg().size() == 3);
  // marking-wise the product with a point is the original structure
  const Poset& p63 = m63.poset();
  for (Mask m = 0; m <= p63.full(); ++m)
    CHECK(prod.admissible(m) == m63.admissible(m));

  MarkedPosemigroup et63(bundled::example63(), Marking::singletons());
  MarkedPosemigroup sq = product(et63, et63);
  for (Mask m = 0; m <= sq.poset().full(); ++m)
    CHECK(sq.admissible(m) == (popcount(m) == 1));

  MarkedPosemigroup chain2(bundled::chain_quantale(2), Marking::singletons());
  MarkedPosemigroup mixed = product(m63, chain2);
  CHECK(mixed.sg().size() == 6);
  CHECK(check_marking_axioms(mixed).ok());

  CHECK_THROWS_AS(product(bundled::with_d(bundled::example62()),
                          bundled::with_d(bundled::example62())),
                  CapExceeded);
}

TEST_CASE("free marked posemigroup") {
  auto free3 = free_marked_posemigroup({"x"}, 3);
  const Posemigroup& sg = free3.ms.sg();
  const Poset& p = sg.poset();
  CHECK(sg.size() == 3);
  CHECK(sg.mul(p.index("xx"), p.index("x")) == p.index("xxx"));
  CHECK(!p.leq(p.index("xx"), p.index("x")));
  CHECK(!p.leq(p.index("x"), p.index("xx")));  // antichain
  CHECK(free3.truncated);                      // xx*xx falls back to a prefix
  CHECK(check_marking_axioms(free3.ms).ok());

  CHECK_THROWS_AS(free_marked_posemigroup({"x", "y"}, 5), CapExceeded);
}
