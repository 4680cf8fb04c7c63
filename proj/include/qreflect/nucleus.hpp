#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qreflect/quantale.hpp"

namespace qreflect {

// An operator on the lower sets of a fixed posemigroup, with a fixpoint
// cache filled on first use. The cache is read-only after warm-up.
class NucleusFn {
 public:
  using Fn = std::function<LowerSet(LowerSet)>;
  NucleusFn(std::string name, Fn fn) : name_(std::move(name)), fn_(std::move(fn)) {}

  LowerSet operator()(LowerSet d) const {
    auto it = cache_.find(d.bits);
    if (it != cache_.end()) return LowerSet{it->second};
    LowerSet out = fn_(d);
    cache_.emplace(d.bits, out.bits);
    return out;
  }

  const std::string& name() const { return name_; }

 private:
  std::string name_;
  Fn fn_;
  mutable std::unordered_map<Mask, Mask> cache_;
};

inline NucleusFn identity_nucleus() {
  return NucleusFn("identity", [](LowerSet d) { return d; });
}

// Quantic-nucleus laws on the lower-set quantale of sg: inflationary,
// monotone, idempotent, and submultiplicative (j(A)*j(B) <= j(A*B), with
// products down-closed).
inline Report check_quantic_nucleus(const Posemigroup& sg, const NucleusFn& j,
                                    int cap = kDefaultCap) {
  Report r;
  const Poset& p = sg.poset();
  auto lows = p.lower_sets(cap);

  bool infl = true, idem = true, lower_out = true;
  for (LowerSet d : lows) {
    LowerSet jd = j(d);
    if (!p.is_lower(jd.bits)) {
      lower_out = false;
      r.add("maps into lower sets", false, p.set_name(d.bits));
      break;
    }
    if (infl && !subset_of(d.bits, jd.bits)) {
      infl = false;
      r.add("inflationary", false,
            p.set_name(d.bits) + " !<= " + p.set_name(jd.bits));
    }
    if (idem && j(jd).bits != jd.bits) {
      idem = false;
      r.add("idempotent", false, p.set_name(d.bits));
    }
  }
  if (lower_out) r.add("maps into lower sets", true);
  if (infl) r.add("inflationary", true);
  if (idem) r.add("idempotent", true);

  bool mono = true;
  for (LowerSet a : lows) {
    for (LowerSet b : lows) {
      if (!subset_of(a.bits, b.bits)) continue;
      if (!subset_of(j(a).bits, j(b).bits)) {
        mono = false;
        r.add("monotone", false,
              p.set_name(a.bits) + " <= " + p.set_name(b.bits));
        break;
      }
    }
    if (!mono) break;
  }
  if (mono) r.add("monotone", true);

  bool subm = true;
  for (LowerSet a : lows) {
    for (LowerSet b : lows) {
      LowerSet lhs = sg.set_product(j(a).bits, j(b).bits);
      LowerSet rhs = j(sg.set_product(a.bits, b.bits));
      if (!subset_of(lhs.bits, rhs.bits)) {
        subm = false;
        r.add("submultiplicative", false,
              "j(" + p.set_name(a.bits) + ")*j(" + p.set_name(b.bits) + ")");
        break;
      }
    }
    if (!subm) break;
  }
  if (subm) r.add("submultiplicative", true);
  return r;
}

// j fixes every principal downset.
inline bool is_principal_closed(const Posemigroup& sg, const NucleusFn& j) {
  const Poset& p = sg.poset();
  for (int s = 0; s < sg.size(); ++s)
    if (j(LowerSet{p.down(s)}).bits != p.down(s)) return false;
  return true;
}

// The quantic quotient: fixpoints of j with multiplication j(V*W), joins
// j(union) and meets by intersection. Requires j to pass the nucleus laws.
inline FiniteQuantale quotient(const Posemigroup& sg, const NucleusFn& j,
                               int cap = kDefaultCap) {
  Report laws = check_quantic_nucleus(sg, j, cap);
  if (!laws.ok())
    throw NucleusInvalid("operator '" + j.name() +
                         "' is not a quantic nucleus:\n" + laws.to_string());
  const Poset& p = sg.poset();
  std::vector<Mask> fix;
  for (LowerSet d : p.lower_sets(cap))
    if (j(d).bits == d.bits) fix.push_back(d.bits);
  const int n = static_cast<int>(fix.size());
  auto index_of = [&](Mask m) {
    for (int i = 0; i < n; ++i)
      if (fix[i] == m) return i;
    throw NucleusInvalid("image of '" + j.name() + "' is not a fixpoint");
  };
  std::vector<std::vector<int>> mult(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      mult[i][k] = index_of(j(sg.set_product(fix[i], fix[k])).bits);
  return FiniteQuantale::from_sets(p, std::move(fix), std::move(mult));
}

// For a principal closed nucleus: whenever vD exists and lands in j(D),
// j(D) must be the principal downset of vD and share its join.
inline Report check_prop_topol(const Posemigroup& sg, const NucleusFn& j,
                               LowerSet D) {
  Report r;
  if (!is_principal_closed(sg, j))
    throw PreconditionFailed("nucleus is not principal closed");
  const Poset& p = sg.poset();
  auto v = p.join(D.bits);
  LowerSet jd = j(D);
  if (!v || !contains(jd.bits, *v)) {
    r.add("hypothesis vD in j(D)", Outcome::vacuous,
          v ? "join exists but lies outside j(D)" : "join does not exist");
    return r;
  }
  r.add("j(D) = (vD) down", jd.bits == p.down(*v),
        p.set_name(jd.bits) + " vs " + p.set_name(p.down(*v)));
  auto vj = p.join(jd.bits);
  r.add("v j(D) = vD", vj && *vj == *v);
  return r;
}

// If j collapses every lower set to the principal downset of its join,
// the base quantale is isomorphic to the quotient via s -> s down.
inline Report check_representation(const Posemigroup& sg, const NucleusFn& j,
                                   int cap = kDefaultCap) {
  const Poset& p = sg.poset();
  if (!is_quantale(FiniteQuantale::from_posemigroup(sg)))
    throw PreconditionFailed("carrier is not a quantale");
  for (LowerSet d : p.lower_sets(cap)) {
    auto v = p.join(d.bits);
    if (!v || j(d).bits != p.down(*v))
      throw HypothesisFailed("j(D) != (vD) down for D = " + p.set_name(d.bits));
  }
  Report r;
  FiniteQuantale q = quotient(sg, j, cap);
  bool bij = q.size() == sg.size();
  std::vector<int> eta(sg.size());
  for (int s = 0; s < sg.size() && bij; ++s) {
    auto idx = q.index_of_set(p.down(s));
    if (!idx)
      bij = false;
    else
      eta[s] = *idx;
  }
  r.add("s -> s down is a bijection onto the quotient", bij);
  if (!bij) return r;
  bool emb = true, mult = true;
  for (int x = 0; x < sg.size(); ++x)
    for (int y = 0; y < sg.size(); ++y) {
      if (p.leq(x, y) != q.leq(eta[x], eta[y])) emb = false;
      if (eta[sg.mul(x, y)] != q.mul(eta[x], eta[y])) mult = false;
    }
  r.add("order isomorphism", emb);
  r.add("multiplication preserved", mult);
  return r;
}

// Properties of s -> s down into the quotient of a principal closed
// nucleus: order embedding, preservation of every existing meet, and
// join-density of the image.
inline Report eta_properties(const Posemigroup& sg, const NucleusFn& j,
                             int cap = kDefaultCap) {
  Report r;
  if (!is_principal_closed(sg, j))
    throw PreconditionFailed("nucleus is not principal closed");
  const Poset& p = sg.poset();
  bool emb = true;
  for (int x = 0; x < sg.size() && emb; ++x)
    for (int y = 0; y < sg.size() && emb; ++y)
      if (p.leq(x, y) != subset_of(p.down(x), p.down(y))) emb = false;
  r.add("order embedding", emb);

  if (sg.size() > cap)
    throw CapExceeded("meet scan over " + std::to_string(sg.size()) +
                      " elements exceeds cap " + std::to_string(cap));
  bool meets = true;
  std::string meet_witness;
  for (Mask X = 0; X <= p.full() && meets; ++X) {
    auto m = p.meet(X);
    if (!m) continue;
    Mask inter = p.full();
    for_each_bit(X, [&](int x) { inter &= p.down(x); });
    if (p.down(*m) != inter) {
      meets = false;
      meet_witness = p.set_name(X);
    }
  }
  r.add("preserves existing meets", meets, meet_witness);

  bool dense = true;
  std::string dense_witness;
  for (LowerSet d : p.lower_sets(cap)) {
    if (j(d).bits != d.bits) continue;
    Mask un = 0;
    for_each_bit(d.bits, [&](int x) { un |= p.down(x); });
    if (j(LowerSet{un}).bits != d.bits) {
      dense = false;
      dense_witness = p.set_name(d.bits);
      break;
    }
  }
  r.add("image join-dense", dense, dense_witness);
  return r;
}

}  // namespace qreflect
