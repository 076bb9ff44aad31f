#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"
#include "burnside/group.hpp"
#include "burnside/hom.hpp"

namespace burnside {

// Element of the Burnside ring A(G): an integer vector over the canonical
// basis [G/H], H running over the subgroup classes of G in canonical order.
class BurnsideElement {
public:
  explicit BurnsideElement(PermGroup G)
      : g_(std::move(G)), c_(subgroup_data(g_).classes.size(), 0) {}

  BurnsideElement(PermGroup G, std::vector<i64> coeffs) : g_(std::move(G)), c_(std::move(coeffs)) {
    if (c_.size() != subgroup_data(g_).classes.size())
      throw domain_error("coefficient vector length does not match the class count");
  }

  static BurnsideElement basis(const PermGroup& G, int class_idx) {
    BurnsideElement x(G);
    if (class_idx < 0 || class_idx >= static_cast<int>(x.c_.size()))
      throw domain_error("class index out of range");
    x.c_[class_idx] = 1;
    return x;
  }

  // Multiplicative unit [G/G]; the full group is always the last class.
  static BurnsideElement one(const PermGroup& G) {
    const auto& sd = subgroup_data(G);
    return basis(G, static_cast<int>(sd.classes.size()) - 1);
  }

  const PermGroup& group() const { return g_; }
  const std::vector<i64>& coeffs() const { return c_; }
  i64 coeff(int i) const { return c_[i]; }
  i64& coeff(int i) { return c_[i]; }

  BurnsideElement& operator+=(const BurnsideElement& o) {
    check_same_ring(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_add(c_[i], o.c_[i]);
    return *this;
  }
  BurnsideElement& operator-=(const BurnsideElement& o) {
    check_same_ring(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] = checked_sub(c_[i], o.c_[i]);
    return *this;
  }
  BurnsideElement& operator*=(i64 s) {
    for (auto& v : c_) v = checked_mul(v, s);
    return *this;
  }
  friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
  friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
  friend BurnsideElement operator*(i64 s, BurnsideElement a) { return a *= s; }

  friend bool operator==(const BurnsideElement& a, const BurnsideElement& b) {
    return a.g_ == b.g_ && a.c_ == b.c_;
  }

private:
  void check_same_ring(const BurnsideElement& o) const {
    if (!(g_ == o.g_)) throw domain_error("elements of different Burnside rings");
  }
  PermGroup g_;
  std::vector<i64> c_;
};

namespace detail {

// Checks that x is an element of A(H) for the subgroup H of G realized by
// `H.elems`, i.e. x's group has exactly those permutations.
inline void check_element_of(const Subgroup& H, const BurnsideElement& x) {
  const PermGroup& Hg = x.group();
  if (Hg.order() != H.order() || Hg.degree() != H.parent.degree())
    throw domain_error("element does not live over the named subgroup");
  for (size_t i = 0; i < H.elems.size(); ++i)
    if (!(Hg.elements()[i] == H.parent.elements()[H.elems[i]]))
      throw domain_error("element does not live over the named subgroup");
}

}  // namespace detail

// Transfer (induction) tr_H^G : A(H) -> A(G), the linear map sending the
// basis element [H/K] to [G/K].
inline BurnsideElement transfer(const PermGroup& G, const Subgroup& H, const BurnsideElement& x) {
  if (!(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  detail::check_element_of(H, x);
  const PermGroup& Hg = x.group();
  const auto& sdH = subgroup_data(Hg);
  const auto& sdG = subgroup_data(G);
  BurnsideElement out(G);
  for (size_t k = 0; k < sdH.classes.size(); ++k) {
    if (x.coeff(static_cast<int>(k)) == 0) continue;
    // Re-identify the representative K <= H as a subgroup of G.
    std::vector<int> key;
    key.reserve(sdH.classes[k].rep.elems.size());
    for (int i : sdH.classes[k].rep.elems) {
      int gi = G.element_index(Hg.elements()[i]);
      if (gi < 0) throw internal_error("subgroup element missing from the ambient group");
      key.push_back(gi);
    }
    std::sort(key.begin(), key.end());
    auto it = sdG.class_of_key.find(key);
    if (it == sdG.class_of_key.end()) throw internal_error("transferred subgroup not enumerated");
    out.coeff(it->second) = checked_add(out.coeff(it->second), x.coeff(static_cast<int>(k)));
  }
  return out;
}

// Restriction along an arbitrary homomorphism alpha : K -> G, computed by
// decomposing each coset space G/H into K-orbits; the orbit through gH
// contributes [K / alpha^{-1}(gHg^{-1})].
inline BurnsideElement restrict_along(const GroupHom& alpha, const BurnsideElement& x) {
  const PermGroup& G = alpha.target();
  const PermGroup& K = alpha.source();
  if (!(x.group() == G)) throw domain_error("element does not live over the map's target");
  const auto& sdG = subgroup_data(G);
  const auto& sdK = subgroup_data(K);
  BurnsideElement out(K);

  std::vector<int> kgen_img;  // images of K's generators in G
  for (const Perm& s : K.generators()) kgen_img.push_back(alpha.apply_index(K.element_index(s)));

  for (size_t j = 0; j < sdG.classes.size(); ++j) {
    i64 cj = x.coeff(static_cast<int>(j));
    if (cj == 0) continue;
    CosetStructure cs = coset_structure(G, sdG.classes[j].rep.elems);
    const int ncos = static_cast<int>(cs.reps.size());
    std::vector<int> orbit(static_cast<size_t>(ncos), -1);
    std::vector<int> stack;
    for (int c0 = 0; c0 < ncos; ++c0) {
      if (orbit[c0] >= 0) continue;
      orbit[c0] = c0;
      stack.push_back(c0);
      while (!stack.empty()) {
        int c = stack.back();
        stack.pop_back();
        const Perm& rep = G.elements()[cs.reps[c]];
        for (int sg : kgen_img) {
          int c2 = cs.coset_of[G.element_index(G.elements()[sg] * rep)];
          if (orbit[c2] < 0) {
            orbit[c2] = c0;
            stack.push_back(c2);
          }
        }
      }
      // Stabilizer in K of the orbit representative coset.
      const Perm& rep = G.elements()[cs.reps[c0]];
      std::vector<int> stab;
      for (i64 ki = 0; ki < K.order(); ++ki) {
        int img = alpha.apply_index(static_cast<int>(ki));
        if (cs.coset_of[G.element_index(G.elements()[img] * rep)] == c0) stab.push_back(static_cast<int>(ki));
      }
      auto it = sdK.class_of_key.find(stab);
      if (it == sdK.class_of_key.end()) throw internal_error("stabilizer not enumerated");
      out.coeff(it->second) = checked_add(out.coeff(it->second), cj);
    }
  }
  return out;
}

// Symbolic double-coset expansion of res_K . tr_H over A(K):
// one term [K / (K cap gHg^{-1})] per double coset KgH.
inline BurnsideElement res_tr_formula(const PermGroup& G, const Subgroup& K, const Subgroup& H) {
  if (!(K.parent == G) || !(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  PermGroup Kg = as_group(K);
  const auto& sdK = subgroup_data(Kg);
  BurnsideElement out(Kg);
  for (const DoubleCoset& dc : double_cosets(G, K, H)) {
    const Perm g = G.elements()[dc.rep_index];
    const Perm gi = g.inverse();
    std::vector<int> inter;  // indices in Kg of K cap gHg^{-1}
    for (int ki : K.elems) {
      const Perm& x = K.parent.elements()[ki];
      int conj = G.element_index(gi * x * g);
      if (std::binary_search(H.elems.begin(), H.elems.end(), conj)) inter.push_back(Kg.element_index(x));
    }
    std::sort(inter.begin(), inter.end());
    auto it = sdK.class_of_key.find(inter);
    if (it == sdK.class_of_key.end()) throw internal_error("double-coset stabilizer not enumerated");
    out.coeff(it->second) = checked_add(out.coeff(it->second), 1);
  }
  return out;
}

namespace detail {

struct RingTables {
  std::vector<std::vector<i64>> mark;                  // mark[l][j]
  std::vector<std::vector<std::vector<i64>>> product;  // product[i][j] over classes
};

inline const RingTables& ring_tables(const PermGroup& G) {
  const auto& gd = G.data();
  std::call_once(gd.ring_once, [&] {
    auto rt = std::make_shared<RingTables>();
    const auto& sd = subgroup_data(G);
    const int nc = static_cast<int>(sd.classes.size());

    rt->mark.assign(nc, std::vector<i64>(nc, 0));
    for (int j = 0; j < nc; ++j) {
      CosetStructure cs = coset_structure(G, sd.classes[j].rep.elems);
      for (int l = 0; l < nc; ++l) {
        i64 fixed = 0;
        for (int rep : cs.reps) {
          bool fix = true;
          for (const Perm& s : sd.classes[l].rep.gens) {
            if (cs.coset_of[G.element_index(s * G.elements()[rep])] != cs.coset_of[rep]) {
              fix = false;
              break;
            }
          }
          if (fix) ++fixed;
        }
        rt->mark[l][j] = fixed;
      }
    }

    rt->product.assign(nc, std::vector<std::vector<i64>>(nc));
    for (int i = 0; i < nc; ++i) {
      GroupHom incl = inclusion_hom(sd.classes[i].rep_group, G);
      for (int j = 0; j < nc; ++j) {
        BurnsideElement r = restrict_along(incl, BurnsideElement::basis(G, j));
        BurnsideElement t = transfer(G, sd.classes[i].rep, r);
        rt->product[i][j] = t.coeffs();
      }
    }
    gd.ring_cache = std::move(rt);
  });
  return *static_cast<const RingTables*>(gd.ring_cache.get());
}

}  // namespace detail

// Product in A(G); [G/H].[G/K] is computed as tr_H(res_H [G/K]).
inline BurnsideElement multiply(const BurnsideElement& x, const BurnsideElement& y) {
  if (!(x.group() == y.group())) throw domain_error("elements of different Burnside rings");
  const PermGroup& G = x.group();
  const auto& rt = detail::ring_tables(G);
  BurnsideElement out(G);
  const int nc = static_cast<int>(x.coeffs().size());
  for (int i = 0; i < nc; ++i) {
    if (x.coeff(i) == 0) continue;
    for (int j = 0; j < nc; ++j) {
      if (y.coeff(j) == 0) continue;
      i64 c = checked_mul(x.coeff(i), y.coeff(j));
      for (int k = 0; k < nc; ++k)
        out.coeff(k) = checked_add(out.coeff(k), checked_mul(c, rt.product[i][j][k]));
    }
  }
  return out;
}

// Ghost map: the vector of fixed-point counts (marks) indexed by subgroup
// class.  Injective, so it doubles as an equality oracle for the ring.
inline std::vector<i64> marks(const BurnsideElement& x) {
  const auto& rt = detail::ring_tables(x.group());
  const int nc = static_cast<int>(x.coeffs().size());
  std::vector<i64> out(static_cast<size_t>(nc), 0);
  for (int l = 0; l < nc; ++l)
    for (int j = 0; j < nc; ++j)
      out[l] = checked_add(out[l], checked_mul(x.coeff(j), rt.mark[l][j]));
  return out;
}

// Table of marks of G: row l, column j holds the mark of [G/H_j] at the
// class-l subgroup.
inline const std::vector<std::vector<i64>>& mark_table(const PermGroup& G) {
  return detail::ring_tables(G).mark;
}

// Augmentation A(G) -> Z: the underlying-set cardinality, i.e. the mark at
// the trivial subgroup.
inline i64 augmentation(const BurnsideElement& x) {
  const auto& sd = subgroup_data(x.group());
  i64 out = 0;
  for (size_t j = 0; j < sd.classes.size(); ++j)
    out = checked_add(out, checked_mul(x.coeff(static_cast<int>(j)), sd.classes[j].index_in_parent));
  return out;
}

}  // namespace burnside
