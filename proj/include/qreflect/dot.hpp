#pragma once

#include <string>

#include "qreflect/quantale.hpp"

namespace qreflect {

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string dot_of_poset(const Poset& p, const std::string& title) {
  std::string out = "digraph \"" + dot_escape(title) + "\" {\n";
  out += "  rankdir=BT;\n  node [shape=box];\n";
  for (int i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + dot_escape(p.name(i)) +
           "\"];\n";
  for (auto [lo, hi] : p.hasse())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace detail

// Hasse diagram as a DOT digraph, edges pointing upward. Node and edge
// order follow the carrier order, so output is byte-stable.
inline std::string emit_dot(const Poset& p, const std::string& title = "poset") {
  return detail::dot_of_poset(p, title);
}

inline std::string emit_dot(const FiniteQuantale& q,
                            const std::string& title = "lattice") {
  return detail::dot_of_poset(q.order(), title);
}

}  // namespace qreflect
