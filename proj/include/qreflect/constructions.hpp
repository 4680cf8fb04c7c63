#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qreflect/marking.hpp"

namespace qreflect {

// The two adjoint markings: singletons only, and everything.
inline std::pair<Marking, Marking> trivial_markings(const Posemigroup&) {
  return {Marking::singletons(), Marking::full()};
}

// Pointwise product of two marked posemigroups. Elements are pairs in
// row-major declaration order with names "(x,y)"; the marking admits
// exactly the rectangles G1 x G2 with both factors admissible. The
// projections are verified to be marked morphisms before returning.
inline MarkedPosemigroup product(const MarkedPosemigroup& ms1,
                                 const MarkedPosemigroup& ms2,
                                 int cap = kDefaultCap) {
  const Posemigroup& A = ms1.sg();
  const Posemigroup& B = ms2.sg();
  const int n1 = A.size(), n2 = B.size();
  if (n1 * n2 > cap)
    throw CapExceeded("product carrier of " + std::to_string(n1 * n2) +
                      " elements exceeds cap " + std::to_string(cap));
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j)
      names.push_back("(" + A.poset().name(i) + "," + B.poset().name(j) + ")");
  auto idx = [&](int i, int j) { return i * n2 + j; };
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          if (A.poset().leq(i1, i2) && B.poset().leq(j1, j2))
            pairs.emplace_back(names[idx(i1, j1)], names[idx(i2, j2)]);
  Poset p = Poset::from_pairs(std::move(names), pairs);
  std::vector<std::vector<int>> table(n1 * n2, std::vector<int>(n1 * n2));
  for (int i1 = 0; i1 < n1; ++i1)
    for (int j1 = 0; j1 < n2; ++j1)
      for (int i2 = 0; i2 < n1; ++i2)
        for (int j2 = 0; j2 < n2; ++j2)
          table[idx(i1, j1)][idx(i2, j2)] =
              idx(A.mul(i1, i2), B.mul(j1, j2));
  MarkedPosemigroup prod(Posemigroup::validate(std::move(p), std::move(table)),
                         Marking::product_of(ms1, ms2));

  Morphism proj1, proj2;
  for (int i = 0; i < n1; ++i)
    for (int j = 0; j < n2; ++j) {
      proj1.map.push_back(i);
      proj2.map.push_back(j);
    }
  if (!check_marked_morphism(proj1, prod, ms1, MorphismLevel::marked, cap).ok() ||
      !check_marked_morphism(proj2, prod, ms2, MorphismLevel::marked, cap).ok())
    throw Error("product projections failed the marked-morphism check");
  return prod;
}

// The free marked posemigroup over an alphabet, truncated at a maximum
// word length. Words form an antichain, the marking is singletons, and
// products beyond the length bound keep only the leading prefix; the
// `truncated` flag reports whether any table entry was cut.
struct FreeMarkedPosemigroup {
  MarkedPosemigroup ms;
  bool truncated;
};

inline FreeMarkedPosemigroup free_marked_posemigroup(
    const std::vector<std::string>& alphabet, int max_word_len,
    int cap = kDefaultCap) {
  if (alphabet.empty() || max_word_len < 1)
    throw Error("free construction needs a letter and a positive length bound");
  std::vector<std::vector<int>> words;  // letter-index sequences
  std::vector<std::string> names;
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= max_word_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int a = 0; a < static_cast<int>(alphabet.size()); ++a) {
        auto ext = w;
        ext.push_back(a);
        next.push_back(ext);
      }
    for (const auto& w : next) {
      words.push_back(w);
      std::string nm;
      for (int a : w) nm += alphabet[a];
      names.push_back(nm);
      if (static_cast<int>(words.size()) > cap)
        throw CapExceeded("free carrier exceeds cap " + std::to_string(cap));
    }
    frontier = std::move(next);
  }
  const int n = static_cast<int>(words.size());
  auto find = [&](const std::vector<int>& w) {
    for (int i = 0; i < n; ++i)
      if (words[i] == w) return i;
    return -1;
  };
  bool truncated = false;
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<int> cat = words[i];
      cat.insert(cat.end(), words[j].begin(), words[j].end());
      if (static_cast<int>(cat.size()) > max_word_len) {
        cat.resize(max_word_len);
        truncated = true;
      }
      table[i][j] = find(cat);
    }
  Poset antichain = Poset::from_pairs(names, {});
  return {MarkedPosemigroup(
              Posemigroup::validate(std::move(antichain), std::move(table)),
              Marking::singletons()),
          truncated};
}

}  // namespace qreflect
