#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/marking.hpp"

namespace qreflect::bundled {

// The catalogue of small structures replayed by the test suites and the
// `examples` CLI command. Identifiers 6.1-6.5 match the bundled scenario
// files shipped with the tool.

inline Posemigroup from_names(
    std::vector<std::string> names,
    std::vector<std::pair<std::string, std::string>> order,
    std::vector<std::vector<std::string>> table) {
  Poset p = Poset::from_pairs(std::move(names), order);
  std::vector<std::vector<int>> t;
  for (const auto& row : table) {
    std::vector<int> r;
    for (const auto& cell : row) r.push_back(p.index(cell));
    t.push_back(std::move(r));
  }
  return Posemigroup::validate(std::move(p), std::move(t));
}

// A meet-multiplication chain c0 < c1 < ... < c(n-1); a quantale.
inline Posemigroup chain_quantale(int n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) order.emplace_back(names[i], names[i + 1]);
  Poset p = Poset::from_pairs(names, order);
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = std::min(i, j);
  return Posemigroup::validate(std::move(p), std::move(t));
}

// The four-element powerset of a two-element set under intersection.
inline Posemigroup diamond_quantale() {
  return from_names({"u", "a", "b", "v"},
                    {{"u", "a"}, {"u", "b"}, {"a", "v"}, {"b", "v"}},
                    {{"u", "u", "u", "u"},
                     {"u", "a", "u", "a"},
                     {"u", "u", "b", "b"},
                     {"u", "a", "b", "v"}});
}

// 6.2: the powerset of {1,2,3} under intersection. u is the empty set,
// a,b,c the atoms {1},{2},{3}, d={1,2}, e={1,3}, f={2,3}, v the top.
inline Posemigroup example62() {
  std::vector<std::string> names{"u", "a", "b", "c", "d", "e", "f", "v"};
  std::vector<Mask> val{0, 1, 2, 4, 3, 5, 6, 7};  // as subsets of {1,2,3}
  std::vector<std::pair<std::string, std::string>> order;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (subset_of(val[i], val[j])) order.emplace_back(names[i], names[j]);
  Poset p = Poset::from_pairs(names, order);
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      Mask inter = val[i] & val[j];
      for (int k = 0; k < 8; ++k)
        if (val[k] == inter) t[i][j] = k;
    }
  return Posemigroup::validate(std::move(p), std::move(t));
}

// The marking of 6.2: all singletons plus {b,c}, {u,b}, {u,c}.
inline MarkedPosemigroup example62_A() {
  Posemigroup sg = example62();
  const Poset& p = sg.poset();
  std::vector<Mask> sets;
  for (int s = 0; s < sg.size(); ++s) sets.push_back(bit(s));
  sets.push_back(bit(p.index("b")) | bit(p.index("c")));
  sets.push_back(bit(p.index("u")) | bit(p.index("b")));
  sets.push_back(bit(p.index("u")) | bit(p.index("c")));
  return MarkedPosemigroup(std::move(sg), Marking::explicit_sets(std::move(sets)));
}

// 6.3: three elements with b, c below a; every product lands on a or c.
inline Posemigroup example63() {
  return from_names({"a", "b", "c"}, {{"b", "a"}, {"c", "a"}},
                    {{"a", "c", "c"}, {"a", "c", "c"}, {"a", "c", "c"}});
}

// 6.4: five elements, d below b and c, with a left identity e.
inline Posemigroup example64() {
  return from_names({"a", "b", "c", "d", "e"}, {{"d", "b"}, {"d", "c"}},
                    {{"b", "a", "a", "a", "a"},
                     {"a", "b", "b", "b", "b"},
                     {"a", "b", "b", "b", "b"},
                     {"a", "b", "b", "d", "d"},
                     {"a", "b", "c", "d", "e"}});
}

// 6.5: the constant-product pair. In S1 the elements b, c, d sit below the
// two maximal elements a and e; S2 inserts s and d between, with top a.
inline Posemigroup example65_s1() {
  return from_names(
      {"a", "b", "c", "d", "e"},
      {{"b", "a"}, {"c", "a"}, {"d", "a"}, {"b", "e"}, {"c", "e"}, {"d", "e"}},
      {{"a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a"}});
}

inline Posemigroup example65_s2() {
  return from_names(
      {"s", "a", "b", "c", "d", "e"},
      {{"b", "s"}, {"c", "s"}, {"b", "d"}, {"c", "d"}, {"s", "e"}, {"d", "e"}, {"e", "a"}},
      {{"a", "a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a", "a"},
       {"a", "a", "a", "a", "a", "a"}});
}

// The inclusion of S1 into S2 on matching element names.
inline Morphism iota65() {
  Posemigroup s1 = example65_s1(), s2 = example65_s2();
  Morphism f;
  for (int i = 0; i < s1.size(); ++i)
    f.map.push_back(s2.poset().index(s1.poset().name(i)));
  return f;
}

inline MarkedPosemigroup with_d(Posemigroup sg) {
  return MarkedPosemigroup(std::move(sg), Marking::d_joins());
}

inline std::vector<std::pair<std::string, Posemigroup>> all_posemigroups() {
  return {{"6.2", example62()},        {"6.3", example63()},
          {"6.4", example64()},        {"6.5-S1", example65_s1()},
          {"6.5-S2", example65_s2()},  {"chain-2", chain_quantale(2)},
          {"chain-3", chain_quantale(3)}, {"diamond", diamond_quantale()}};
}

// The marked quantales the ideal suites run on: every catalogue carrier
// with its D marking, plus the explicit marking of 6.2, its singleton
// marking, and a bounded-pair marking on the three-chain.
inline std::vector<std::pair<std::string, MarkedPosemigroup>>
all_marked_quantales() {
  std::vector<std::pair<std::string, MarkedPosemigroup>> out;
  for (auto& [name, sg] : all_posemigroups())
    out.emplace_back(name + "/D", with_d(std::move(sg)));
  out.emplace_back("6.2/A", example62_A());
  out.emplace_back("6.2/singletons",
                   MarkedPosemigroup(example62(), Marking::singletons()));
  out.emplace_back("chain-3/bounded-pairs",
                   MarkedPosemigroup(chain_quantale(3), Marking::bounded_pairs()));
  return out;
}

// Catalogue carriers that are themselves quantales.
inline std::vector<std::pair<std::string, Posemigroup>> all_quantales() {
  return {{"6.2", example62()},
          {"chain-2", chain_quantale(2)},
          {"chain-3", chain_quantale(3)},
          {"diamond", diamond_quantale()}};
}

}  // namespace qreflect::bundled
