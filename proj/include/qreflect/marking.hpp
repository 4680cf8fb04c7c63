#pragma once

#include <algorithm>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qreflect/posemigroup.hpp"

namespace qreflect {

class MarkedPosemigroup;

// Why a subset fails the distributivity law (3): either the join is
// missing outright, or some two-sided translation breaks it.
struct DFailure {
  std::string reason;
};

// Decides membership in the D family: M is admissible iff its join exists
// and every two-sided translation aMb has a join equal to a(vM)b, with a, b
// ranging over S^1. The empty set qualifies exactly when the carrier has a
// bottom that every translation absorbs, which is law (3) read at M = {}.
inline std::optional<DFailure> d_admissibility_failure(const Posemigroup& sg,
                                                       Mask M) {
  const Poset& p = sg.poset();
  auto j = p.join(M);
  if (!j) return DFailure{"join of " + p.set_name(M) + " does not exist"};
  for (OptElement a : sg.s1_elements())
    for (OptElement b : sg.s1_elements()) {
      Mask t = sg.translate(a, M, b);
      auto tj = p.join(t);
      int expect = sg.mul(a, *j, b);
      if (!tj || *tj != expect)
        return DFailure{"translation (" + sg.describe_opt(a) + "," +
                        sg.describe_opt(b) + ") of " + p.set_name(M) +
                        " has join " + (tj ? p.name(*tj) : "NONE") +
                        ", expected " + p.name(expect)};
    }
  return std::nullopt;
}

inline bool is_D_admissible(const Posemigroup& sg, Mask M) {
  return !d_admissibility_failure(sg, M).has_value();
}

enum class MarkingKind {
  singletons,
  full,
  d,
  card_le,
  chains,
  directed,
  bounded,
  bounded_pairs,
  explicit_list,
  product,
};

// A marking is a predicate over subsets; only the explicit kind carries a
// materialized family. On finite carriers the countable-join and
// cardinality-bounded families of the literature collapse to `full` and
// `card_le`. The empty set is admitted only where its join can exist:
// `d` and `full` accept it exactly when the carrier has a bottom (for `d`
// one that every translation absorbs), an explicit family may list it
// only under a bottom, and the remaining kinds never admit it.
class Marking {
 public:
  static Marking singletons() { return Marking(MarkingKind::singletons); }
  static Marking full() { return Marking(MarkingKind::full); }
  static Marking d_joins() { return Marking(MarkingKind::d); }
  static Marking card_le(int n) {
    if (n < 1) throw Error("card<= marking needs a bound of at least 1");
    Marking m(MarkingKind::card_le);
    m.card_bound_ = n;
    return m;
  }
  static Marking chains() { return Marking(MarkingKind::chains); }
  static Marking directed() { return Marking(MarkingKind::directed); }
  static Marking bounded() { return Marking(MarkingKind::bounded); }
  static Marking bounded_pairs() { return Marking(MarkingKind::bounded_pairs); }
  static Marking explicit_sets(std::vector<Mask> sets) {
    Marking m(MarkingKind::explicit_list);
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    m.sets_ = std::move(sets);
    return m;
  }
  // Declared below MarkedPosemigroup, which it captures.
  static Marking product_of(const MarkedPosemigroup& left,
                            const MarkedPosemigroup& right);

  MarkingKind kind() const { return kind_; }
  int card_bound() const { return card_bound_; }
  const std::vector<Mask>& sets() const { return sets_; }

  bool test(const Posemigroup& sg, Mask M) const;

  std::string describe() const {
    switch (kind_) {
      case MarkingKind::singletons: return "singletons";
      case MarkingKind::full: return "full";
      case MarkingKind::d: return "D";
      case MarkingKind::card_le: return "card<=" + std::to_string(card_bound_);
      case MarkingKind::chains: return "chains";
      case MarkingKind::directed: return "directed";
      case MarkingKind::bounded: return "bounded";
      case MarkingKind::bounded_pairs: return "bounded-pairs";
      case MarkingKind::explicit_list:
        return "explicit (" + std::to_string(sets_.size()) + " sets)";
      case MarkingKind::product: return "product";
    }
    return "?";
  }

 private:
  explicit Marking(MarkingKind k) : kind_(k) {}

  MarkingKind kind_;
  int card_bound_ = 0;
  std::vector<Mask> sets_;
  std::shared_ptr<const MarkedPosemigroup> left_, right_;
};

// A posemigroup with its marking, plus the memo of decided subsets. The
// memo is append-only and never changes an answer; confine one instance to
// one worker or share it read-only after warm-up.
class MarkedPosemigroup {
 public:
  MarkedPosemigroup(Posemigroup sg, Marking marking)
      : sg_(std::move(sg)), marking_(std::move(marking)) {
    if (marking_.kind() == MarkingKind::explicit_list) {
      for (Mask m : marking_.sets()) {
        if (!subset_of(m, sg_.poset().full()))
          throw Error("explicit marking set exceeds the carrier");
        if (m == 0 && !sg_.poset().bottom())
          throw Error("explicit marking admits {} but the carrier has no bottom");
      }
    }
  }

  const Posemigroup& sg() const { return sg_; }
  const Poset& poset() const { return sg_.poset(); }
  const Marking& marking() const { return marking_; }

  bool admissible(Mask M) const {
    if (sg_.size() > 20) return marking_.test(sg_, M);
    if (memo_.empty()) memo_.assign(std::size_t{1} << sg_.size(), -1);
    int8_t& slot = memo_[M];
    if (slot < 0) slot = marking_.test(sg_, M) ? 1 : 0;
    return slot == 1;
  }

  // Visits every admissible subset of `within` exactly once, the empty set
  // included when the marking admits it. Explicit families iterate their
  // list; predicate kinds walk all submasks, so the popcount is capped.
  template <typename F>
  void for_each_admissible_subset(Mask within, F&& f, int cap = kDefaultCap) const {
    if (marking_.kind() == MarkingKind::explicit_list) {
      for (Mask m : marking_.sets())
        if (subset_of(m, within)) f(m);
      return;
    }
    if (popcount(within) > cap)
      throw CapExceeded("admissible-subset scan over " +
                        std::to_string(popcount(within)) +
                        " elements exceeds cap " + std::to_string(cap));
    Mask sub = within;
    while (true) {
      if (admissible(sub)) f(sub);
      if (sub == 0) break;
      sub = (sub - 1) & within;
    }
  }

 private:
  Posemigroup sg_;
  Marking marking_;
  mutable std::vector<int8_t> memo_;
};

inline bool Marking::test(const Posemigroup& sg, Mask M) const {
  const Poset& p = sg.poset();
  switch (kind_) {
    case MarkingKind::singletons:
      return popcount(M) == 1;
    case MarkingKind::full:
      // the whole powerset, except that {} needs a join to ask for
      return M != 0 || p.bottom().has_value();
    case MarkingKind::d:
      return is_D_admissible(sg, M);
    case MarkingKind::card_le:
      return M != 0 && popcount(M) <= card_bound_;
    case MarkingKind::chains: {
      if (M == 0) return false;
      bool chain = true;
      for_each_bit(M, [&](int x) {
        for_each_bit(M, [&](int y) {
          if (!p.leq(x, y) && !p.leq(y, x)) chain = false;
        });
      });
      return chain;
    }
    case MarkingKind::directed: {
      if (M == 0) return false;
      bool dir = true;
      for_each_bit(M, [&](int x) {
        for_each_bit(M, [&](int y) {
          if ((p.up(x) & p.up(y) & M) == 0) dir = false;
        });
      });
      return dir;
    }
    case MarkingKind::bounded: {
      if (M == 0) return false;
      for (int u = 0; u < p.size(); ++u)
        if (subset_of(M, p.down(u))) return true;
      return false;
    }
    case MarkingKind::bounded_pairs: {
      int c = popcount(M);
      if (c == 1) return true;
      if (c != 2) return false;
      int lo = std::countr_zero(M);
      int hi = std::countr_zero(M & (M - 1));
      return p.leq(lo, hi) || p.leq(hi, lo);
    }
    case MarkingKind::explicit_list:
      return std::binary_search(sets_.begin(), sets_.end(), M);
    case MarkingKind::product: {
      const MarkedPosemigroup& L = *left_;
      const MarkedPosemigroup& R = *right_;
      const int nr = R.sg().size();
      if (M == 0) return L.admissible(0) || R.admissible(0);
      Mask pl = 0, pr = 0;
      for_each_bit(M, [&](int i) {
        pl |= bit(i / nr);
        pr |= bit(i % nr);
      });
      bool rect = true;
      for_each_bit(pl, [&](int i) {
        for_each_bit(pr, [&](int j) {
          if (!contains(M, i * nr + j)) rect = false;
        });
      });
      return rect && L.admissible(pl) && R.admissible(pr);
    }
  }
  return false;
}

inline Marking Marking::product_of(const MarkedPosemigroup& left,
                                   const MarkedPosemigroup& right) {
  Marking m(MarkingKind::product);
  m.left_ = std::make_shared<const MarkedPosemigroup>(left);
  m.right_ = std::make_shared<const MarkedPosemigroup>(right);
  return m;
}

// Marking axioms: every singleton is admissible (A1) and admissibility is
// closed under two-sided translation by S^1 (A2).
inline Report check_marking_axioms(const MarkedPosemigroup& ms,
                                   int cap = kDefaultCap) {
  Report r;
  const Posemigroup& sg = ms.sg();
  const Poset& p = sg.poset();
  bool a1 = true;
  for (int s = 0; s < sg.size() && a1; ++s)
    if (!ms.admissible(bit(s))) {
      a1 = false;
      r.add("A1 singletons admissible", false,
            "{" + p.name(s) + "} is not admissible");
    }
  if (a1) r.add("A1 singletons admissible", true);

  bool a2 = true;
  auto s1 = sg.s1_elements();
  ms.for_each_admissible_subset(
      p.full(),
      [&](Mask G) {
        if (!a2) return;
        for (OptElement a : s1)
          for (OptElement b : s1) {
            Mask t = sg.translate(a, G, b);
            if (!ms.admissible(t)) {
              a2 = false;
              r.add("A2 closed under translation", false,
                    sg.describe_opt(a) + "*" + p.set_name(G) + "*" +
                        sg.describe_opt(b) + " = " + p.set_name(t) +
                        " is not admissible");
              return;
            }
          }
      },
      cap);
  if (a2) r.add("A2 closed under translation", true);
  return r;
}

// A marked posemigroup is a marked quantale iff every admissible subset is
// in D, i.e. has a join preserved by all two-sided translations.
inline Report check_marked_quantale(const MarkedPosemigroup& ms,
                                    int cap = kDefaultCap) {
  Report r;
  const Posemigroup& sg = ms.sg();
  bool ok = true;
  ms.for_each_admissible_subset(
      sg.poset().full(),
      [&](Mask M) {
        if (!ok) return;
        if (auto fail = d_admissibility_failure(sg, M)) {
          ok = false;
          r.add("admissible subsets lie in D", false,
                "admissible " + sg.poset().set_name(M) + ": " + fail->reason);
        }
      },
      cap);
  if (ok) r.add("admissible subsets lie in D", true);
  return r;
}

inline bool is_marked_quantale(const MarkedPosemigroup& ms,
                               int cap = kDefaultCap) {
  return check_marked_quantale(ms, cap).ok();
}

enum class MorphismLevel { posemigroup, marked, marked_quantale };

// Checks f against the morphism laws of the requested level; each level
// includes the previous one. The quantale level asserts that admissible
// joins of the source transfer: f(vM) = v f(M).
inline Report check_marked_morphism(const Morphism& f,
                                    const MarkedPosemigroup& src,
                                    const MarkedPosemigroup& dst,
                                    MorphismLevel level,
                                    int cap = kDefaultCap) {
  Report r;
  const Posemigroup& S = src.sg();
  const Posemigroup& T = dst.sg();
  if (static_cast<int>(f.map.size()) != S.size())
    throw PreconditionFailed("morphism is not total on the source");
  bool mono = true;
  for (int x = 0; x < S.size() && mono; ++x)
    for (int y = 0; y < S.size() && mono; ++y)
      if (S.poset().leq(x, y) && !T.poset().leq(f(x), f(y))) {
        mono = false;
        r.add("monotone", false,
              S.poset().name(x) + "<=" + S.poset().name(y) + " but images are not");
      }
  if (mono) r.add("monotone", true);
  bool mult = true;
  for (int x = 0; x < S.size() && mult; ++x)
    for (int y = 0; y < S.size() && mult; ++y)
      if (f(S.mul(x, y)) != T.mul(f(x), f(y))) {
        mult = false;
        r.add("multiplicative", false,
              "f(" + S.poset().name(x) + "*" + S.poset().name(y) +
                  ") != f(" + S.poset().name(x) + ")*f(" + S.poset().name(y) + ")");
      }
  if (mult) r.add("multiplicative", true);
  if (level == MorphismLevel::posemigroup) return r;

  bool marks = true;
  src.for_each_admissible_subset(
      S.poset().full(),
      [&](Mask M) {
        if (!marks) return;
        if (!dst.admissible(f.image(M))) {
          marks = false;
          r.add("preserves marking", false,
                "image " + T.poset().set_name(f.image(M)) + " of admissible " +
                    S.poset().set_name(M) + " is not admissible");
        }
      },
      cap);
  if (marks) r.add("preserves marking", true);
  if (level == MorphismLevel::marked) return r;

  bool joins = true;
  src.for_each_admissible_subset(
      S.poset().full(),
      [&](Mask M) {
        if (!joins) return;
        auto jm = S.poset().join(M);
        if (!jm) {
          joins = false;
          r.add("preserves admissible joins", false,
                "admissible " + S.poset().set_name(M) + " has no join");
          return;
        }
        auto ji = T.poset().join(f.image(M));
        if (!ji || *ji != f(*jm)) {
          joins = false;
          r.add("preserves admissible joins", false,
                "f(v" + S.poset().set_name(M) + ") = " +
                    T.poset().name(f(*jm)) + " but v f(M) = " +
                    (ji ? T.poset().name(*ji) : "NONE"));
        }
      },
      cap);
  if (joins) r.add("preserves admissible joins", true);
  return r;
}

}  // namespace qreflect
