#include <fstream>
#include <sstream>

#include "doctest.h"
#include "qreflect/closure.hpp"
#include "qreflect/dot.hpp"
#include "qreflect/examples.hpp"
#include "qreflect/ideal.hpp"
#include "qreflect/scenario.hpp"

using namespace qreflect;

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(QREFLECT_SCENARIO_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool same_structure(const MarkedPosemigroup& a, const MarkedPosemigroup& b) {
  if (a.sg().size() != b.sg().size()) return false;
  for (int i = 0; i < a.sg().size(); ++i) {
    if (a.poset().name(i) != b.poset().name(i)) return false;
    for (int j = 0; j < a.sg().size(); ++j) {
      if (a.poset().leq(i, j) != b.poset().leq(i, j)) return false;
      if (a.sg().mul(i, j) != b.sg().mul(i, j)) return false;
    }
  }
  for (Mask m = 0; m <= a.poset().full(); ++m)
    if (a.admissible(m) != b.admissible(m)) return false;
  return true;
}

}  // namespace

TEST_CASE("bundled scenarios parse to the catalogue structures") {
  Scenario s63 = parse_scenario(slurp("example-6.3.txt"));
  CHECK(s63.marked.size() == 1);
  CHECK(same_structure(s63.marked[0], bundled::with_d(bundled::example63())));
  REQUIRE(s63.morphism);
  int a = s63.marked[0].poset().index("a");
  CHECK(s63.morphism->map.map == std::vector<int>{a, a, a});

  Scenario s62 = parse_scenario(slurp("example-6.2.txt"));
  CHECK(same_structure(s62.marked[0], bundled::example62_A()));

  Scenario s62d = parse_scenario(slurp("example-6.2-D.txt"));
  CHECK(same_structure(s62d.marked[0], bundled::with_d(bundled::example62())));

  Scenario s64 = parse_scenario(slurp("example-6.4.txt"));
  CHECK(same_structure(s64.marked[0], bundled::with_d(bundled::example64())));

  Scenario s65 = parse_scenario(slurp("example-6.5.txt"));
  REQUIRE(s65.marked.size() == 2);
  CHECK(same_structure(s65.marked[0], bundled::with_d(bundled::example65_s1())));
  CHECK(same_structure(s65.marked[1], bundled::with_d(bundled::example65_s2())));
  REQUIRE(s65.morphism);
  CHECK(s65.morphism->map.map == bundled::iota65().map);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_scenario("elements: a b\n"), ParseError);
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"), ParseError);
  // undeclared element in the table
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"
                                 "elements: a\n"
                                 "table:\n"
                                 "a: zz\n"),
                  ParseError);
  // bad marking keyword
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"
                                 "elements: a\n"
                                 "table:\n"
                                 "a: a\n"
                                 "marking: wobbly\n"),
                  ParseError);
  // a morphism that misses an element
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"
                                 "elements: a b\n"
                                 "order: a<b\n"
                                 "table:\n"
                                 "a: a a\n"
                                 "b: a b\n"
                                 "morphism f: a->a from S to S\n"),
                  ParseError);
}

TEST_CASE("validation errors keep their own types") {
  // non-associative table
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"
                                 "elements: x y\n"
                                 "order: x<y\n"
                                 "table:\n"
                                 "x: y x\n"
                                 "y: x x\n"),
                  Error);
  CHECK_THROWS_AS(parse_scenario("posemigroup S\n"
                                 "elements: p q\n"
                                 "order: p<q q<p\n"
                                 "table:\n"
                                 "p: p p\n"
                                 "q: p p\n"),
                  AntisymmetryViolation);
}

TEST_CASE("scenarios round-trip through print and parse") {
  for (const char* file :
       {"example-6.2.txt", "example-6.2-D.txt", "example-6.3.txt",
        "example-6.4.txt", "example-6.5.txt"}) {
    CAPTURE(file);
    Scenario sc = parse_scenario(slurp(file));
    std::string printed = print_scenario(sc);
    Scenario back = parse_scenario(printed);
    REQUIRE(back.marked.size() == sc.marked.size());
    for (std::size_t i = 0; i < sc.marked.size(); ++i) {
      CHECK(back.names[i] == sc.names[i]);
      CHECK(same_structure(back.marked[i], sc.marked[i]));
    }
    CHECK(back.morphism.has_value() == sc.morphism.has_value());
    if (sc.morphism) CHECK(back.morphism->map.map == sc.morphism->map.map);
    // printing is stable
    CHECK(print_scenario(back) == printed);
  }
}

TEST_CASE("every marking kind round-trips") {
  const char* base =
      "posemigroup S\n"
      "elements: a b c\n"
      "order: b<a c<a\n"
      "table:\n"
      "a: a c c\n"
      "b: a c c\n"
      "c: a c c\n"
      "marking: ";
  for (const char* mk : {"singletons", "full", "D", "card<=2", "chains",
                         "directed", "bounded", "bounded-pairs",
                         "explicit {a} {b} {c} {b,c}"}) {
    CAPTURE(mk);
    Scenario sc = parse_scenario(std::string(base) + mk + "\n");
    Scenario back = parse_scenario(print_scenario(sc));
    CHECK(same_structure(back.marked[0], sc.marked[0]));
    CHECK(print_scenario(back) == print_scenario(sc));
  }
}

TEST_CASE("dot output") {
  FiniteQuantale q63 = closed_quantale(bundled::example63());
  std::string dot = emit_dot(q63, "closed sets of S");
  CHECK(dot == emit_dot(q63, "closed sets of S"));  // byte-stable
  CHECK(dot ==
        "digraph \"closed sets of S\" {\n"
        "  rankdir=BT;\n"
        "  node [shape=box];\n"
        "  n0 [label=\"{}\"];\n"
        "  n1 [label=\"{b}\"];\n"
        "  n2 [label=\"{c}\"];\n"
        "  n3 [label=\"{b,c}\"];\n"
        "  n4 [label=\"{a,b,c}\"];\n"
        "  n0 -> n1;\n"
        "  n0 -> n2;\n"
        "  n1 -> n3;\n"
        "  n2 -> n3;\n"
        "  n3 -> n4;\n"
        "}\n");

  Poset single = Poset::from_pairs({"e"}, {});
  std::string sdot = emit_dot(single, "point");
  CHECK(sdot.find("n0 [label=\"e\"];") != std::string::npos);
  CHECK(sdot.find("->") == std::string::npos);

  FiniteQuantale ida = ideal_quantale(bundled::example62_A());
  std::string adot = emit_dot(ida, "ideals");
  int nodes = 0, arrows = 0;
  for (std::size_t pos = 0; (pos = adot.find("label=", pos)) != std::string::npos;
       ++pos)
    ++nodes;
  for (std::size_t pos = 0; (pos = adot.find("->", pos)) != std::string::npos;
       ++pos)
    ++arrows;
  CHECK(nodes == 15);
  CHECK(arrows == 22);
}
