#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/marking.hpp"

namespace qreflect {

// A parsed input file: one or two marked posemigroups and an optional
// morphism between them. Everything is validated at parse time, marking
// axioms included.
struct ScenarioMorphism {
  std::string name;
  int src = 0;
  int dst = 0;
  Morphism map;
};

struct Scenario {
  std::vector<std::string> names;
  std::vector<MarkedPosemigroup> marked;
  std::optional<ScenarioMorphism> morphism;

  int index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw Error("no posemigroup named '" + name + "'");
  }
};

namespace detail {

inline std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

inline Mask parse_set(const std::string& tok, const Poset& p, int line) {
  if (tok.size() < 2 || tok.front() != '{' || tok.back() != '}')
    throw ParseError(line, "expected a set like {a,b}, got '" + tok + "'");
  Mask m = 0;
  std::string body = tok.substr(1, tok.size() - 2);
  std::string cur;
  std::istringstream in(body);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) m |= bit(p.index(cur));
  return m;
}

struct PendingPosemigroup {
  std::string name;
  int line = 0;
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::pair<std::string, std::vector<std::string>>> rows;
  std::vector<std::string> marking_tokens{"singletons"};
};

inline MarkedPosemigroup build(const PendingPosemigroup& pp, int cap) {
  if (pp.elements.empty())
    throw ParseError(pp.line, "posemigroup '" + pp.name + "' has no elements");
  // undeclared names are parse errors; law violations keep their own types
  std::vector<std::vector<int>> table;
  Poset poset = [&] {
    try {
      Poset p = Poset::from_pairs(pp.elements, pp.order);
      const int n = p.size();
      if (static_cast<int>(pp.rows.size()) != n)
        throw ParseError(pp.line, "table needs " + std::to_string(n) +
                                      " rows, got " +
                                      std::to_string(pp.rows.size()));
      table.assign(n, {});
      for (const auto& [row_elem, cells] : pp.rows) {
        int r = p.index(row_elem);
        if (static_cast<int>(cells.size()) != n)
          throw ParseError(pp.line, "table row '" + row_elem + "' needs " +
                                        std::to_string(n) + " entries");
        table[r].clear();
        for (const std::string& cell : cells) table[r].push_back(p.index(cell));
      }
      return p;
    } catch (const UnknownElement& e) {
      throw ParseError(pp.line, e.what());
    }
  }();
  const auto& mk = pp.marking_tokens;
  Marking marking = Marking::singletons();
  if (mk[0] == "singletons")
    marking = Marking::singletons();
  else if (mk[0] == "full")
    marking = Marking::full();
  else if (mk[0] == "D" || mk[0] == "d")
    marking = Marking::d_joins();
  else if (mk[0] == "chains")
    marking = Marking::chains();
  else if (mk[0] == "directed")
    marking = Marking::directed();
  else if (mk[0] == "bounded")
    marking = Marking::bounded();
  else if (mk[0] == "bounded-pairs")
    marking = Marking::bounded_pairs();
  else if (mk[0].rfind("card<=", 0) == 0)
    marking = Marking::card_le(std::stoi(mk[0].substr(6)));
  else if (mk[0] == "explicit") {
    std::vector<Mask> sets;
    try {
      for (std::size_t i = 1; i < mk.size(); ++i)
        sets.push_back(parse_set(mk[i], poset, pp.line));
    } catch (const UnknownElement& e) {
      throw ParseError(pp.line, e.what());
    }
    marking = Marking::explicit_sets(std::move(sets));
  } else {
    throw ParseError(pp.line, "unknown marking '" + mk[0] + "'");
  }

  MarkedPosemigroup ms(Posemigroup::validate(std::move(poset), std::move(table)),
                       std::move(marking));
  Report axioms = check_marking_axioms(ms, cap);
  if (!axioms.ok())
    throw Error("marking axioms fail for '" + pp.name + "':\n" +
                axioms.to_string());
  return ms;
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text, int cap = kDefaultCap) {
  Scenario sc;
  std::vector<detail::PendingPosemigroup> pending;
  struct PendingMorphism {
    std::string name, src, dst;
    std::vector<std::pair<std::string, std::string>> assignments;
    int line;
  };
  std::optional<PendingMorphism> pm;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  bool in_table = false;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.resize(hash);
    auto toks = detail::tokens(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0];
    if (head == "posemigroup") {
      if (toks.size() != 2) throw ParseError(lineno, "posemigroup needs a name");
      pending.push_back({});
      pending.back().name = toks[1];
      pending.back().line = lineno;
      in_table = false;
      continue;
    }
    if (head == "morphism") {
      // morphism <name>: a->b ... from <src> to <dst>
      if (pm) throw ParseError(lineno, "only one morphism per scenario");
      if (toks.size() < 5) throw ParseError(lineno, "incomplete morphism line");
      PendingMorphism m;
      m.line = lineno;
      m.name = toks[1];
      if (!m.name.empty() && m.name.back() == ':') m.name.pop_back();
      std::size_t i = 2;
      for (; i < toks.size() && toks[i] != "from"; ++i) {
        auto arrow = toks[i].find("->");
        if (arrow == std::string::npos)
          throw ParseError(lineno, "expected x->y, got '" + toks[i] + "'");
        m.assignments.emplace_back(toks[i].substr(0, arrow),
                                   toks[i].substr(arrow + 2));
      }
      if (i + 4 != toks.size() || toks[i] != "from" || toks[i + 2] != "to")
        throw ParseError(lineno, "morphism needs 'from <sg> to <sg>'");
      m.src = toks[i + 1];
      m.dst = toks[i + 3];
      pm = std::move(m);
      in_table = false;
      continue;
    }
    if (pending.empty())
      throw ParseError(lineno, "content before any 'posemigroup' header");
    auto& pp = pending.back();
    if (head == "elements:") {
      pp.elements.assign(toks.begin() + 1, toks.end());
      in_table = false;
    } else if (head == "order:") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        auto lt = toks[i].find('<');
        if (lt == std::string::npos)
          throw ParseError(lineno, "expected x<y, got '" + toks[i] + "'");
        pp.order.emplace_back(toks[i].substr(0, lt), toks[i].substr(lt + 1));
      }
      in_table = false;
    } else if (head == "table:") {
      in_table = true;
    } else if (head == "marking:") {
      pp.marking_tokens.assign(toks.begin() + 1, toks.end());
      if (pp.marking_tokens.empty())
        throw ParseError(lineno, "marking line needs a kind");
      in_table = false;
    } else if (in_table && head.size() > 1 && head.back() == ':') {
      pp.rows.emplace_back(head.substr(0, head.size() - 1),
                           std::vector<std::string>(toks.begin() + 1, toks.end()));
    } else {
      throw ParseError(lineno, "unrecognized line '" + raw + "'");
    }
  }

  if (pending.empty()) throw ParseError(lineno, "no posemigroup declared");
  for (const auto& pp : pending) {
    sc.names.push_back(pp.name);
    sc.marked.push_back(detail::build(pp, cap));
  }
  if (pm) {
    ScenarioMorphism m;
    m.name = pm->name;
    m.src = sc.index_of(pm->src);
    m.dst = sc.index_of(pm->dst);
    const Poset& ps = sc.marked[m.src].poset();
    const Poset& pt = sc.marked[m.dst].poset();
    m.map.map.assign(ps.size(), -1);
    for (const auto& [from, to] : pm->assignments)
      m.map.map[ps.index(from)] = pt.index(to);
    for (int i = 0; i < ps.size(); ++i)
      if (m.map.map[i] < 0)
        throw ParseError(pm->line, "morphism misses element '" + ps.name(i) + "'");
    sc.morphism = std::move(m);
  }
  return sc;
}

inline std::string print_scenario(const Scenario& sc) {
  std::string out;
  for (std::size_t k = 0; k < sc.marked.size(); ++k) {
    const MarkedPosemigroup& ms = sc.marked[k];
    const Poset& p = ms.poset();
    out += "posemigroup " + sc.names[k] + "\n";
    out += "elements:";
    for (int i = 0; i < p.size(); ++i) out += " " + p.name(i);
    out += "\norder:";
    for (auto [lo, hi] : p.hasse()) out += " " + p.name(lo) + "<" + p.name(hi);
    out += "\ntable:\n";
    for (int i = 0; i < p.size(); ++i) {
      out += p.name(i) + ":";
      for (int j = 0; j < p.size(); ++j)
        out += " " + p.name(ms.sg().mul(i, j));
      out += "\n";
    }
    out += "marking: ";
    const Marking& mk = ms.marking();
    switch (mk.kind()) {
      case MarkingKind::singletons: out += "singletons"; break;
      case MarkingKind::full: out += "full"; break;
      case MarkingKind::d: out += "D"; break;
      case MarkingKind::card_le:
        out += "card<=" + std::to_string(mk.card_bound());
        break;
      case MarkingKind::chains: out += "chains"; break;
      case MarkingKind::directed: out += "directed"; break;
      case MarkingKind::bounded: out += "bounded"; break;
      case MarkingKind::bounded_pairs: out += "bounded-pairs"; break;
      case MarkingKind::explicit_list: {
        out += "explicit";
        std::vector<Mask> sets = mk.sets();
        std::sort(sets.begin(), sets.end(), [&](Mask a, Mask b) {
          return p.canonical_less(a, b);
        });
        for (Mask m : sets) out += " " + p.set_name(m);
        break;
      }
      case MarkingKind::product:
        throw Error("product markings have no scenario syntax");
    }
    out += "\n";
  }
  if (sc.morphism) {
    const ScenarioMorphism& m = *sc.morphism;
    const Poset& ps = sc.marked[m.src].poset();
    const Poset& pt = sc.marked[m.dst].poset();
    out += "morphism " + m.name + ":";
    for (int i = 0; i < ps.size(); ++i)
      out += " " + ps.name(i) + "->" + pt.name(m.map(i));
    out += " from " + sc.names[m.src] + " to " + sc.names[m.dst] + "\n";
  }
  return out;
}

}  // namespace qreflect
