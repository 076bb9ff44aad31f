#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"
#include "burnside/group.hpp"
#include "burnside/hom.hpp"

namespace burnside {

namespace config {
// Largest balanced product handled by compose, in elements of the result.
inline std::atomic<i64> biset_size_bound{100000};
}  // namespace config

// Canonical basis pair (L <= K, alpha : L -> G) of A(G, K), representing the
// operation tr_L^K . alpha^*.  `L_elems` holds sorted K-element indices and
// `alpha[i]` the G-element index of the image of L_elems[i].  Pairs are
// canonical under (K x G)-conjugacy: (L, alpha) ~ (kLk^{-1}, c_g.alpha.c_k).
struct BasisPair {
  PermGroup K, G;
  std::vector<int> L_elems;
  std::vector<int> alpha;

  std::pair<std::vector<int>, std::vector<int>> key() const { return {L_elems, alpha}; }
};

using PairKey = std::pair<std::vector<int>, std::vector<int>>;

// Canonicalizes a pair by minimizing (conjugated L set, conjugated alpha
// tuple) lexicographically over K x G.  Minimization is staged: first the
// subgroup key over k, then the alpha tuple over the minimizing k's and all g.
inline BasisPair canonical_pair(const PermGroup& K, const PermGroup& G, const std::vector<int>& L_elems,
                                const std::vector<int>& alpha) {
  if (L_elems.size() != alpha.size()) throw domain_error("pair arrays of different length");
  if (!std::is_sorted(L_elems.begin(), L_elems.end())) throw domain_error("pair subgroup not sorted");

  struct Conj {
    std::vector<int> L;        // sorted conjugated subgroup
    std::vector<int> src_pos;  // position in L_elems of the preimage of L[i]
  };
  std::vector<Conj> best_k;
  std::vector<int> bestL;
  for (i64 ki = 0; ki < K.order(); ++ki) {
    const Perm& k = K.elements()[ki];
    const Perm kinv = k.inverse();
    std::vector<std::pair<int, int>> conj;  // (conjugated index, original position)
    conj.reserve(L_elems.size());
    for (size_t p = 0; p < L_elems.size(); ++p)
      conj.emplace_back(K.element_index(k * K.elements()[L_elems[p]] * kinv), static_cast<int>(p));
    std::sort(conj.begin(), conj.end());
    Conj c;
    for (auto& [idx, pos] : conj) {
      c.L.push_back(idx);
      c.src_pos.push_back(pos);
    }
    if (bestL.empty() || c.L < bestL) {
      bestL = c.L;
      best_k.clear();
      best_k.push_back(std::move(c));
    } else if (c.L == bestL) {
      best_k.push_back(std::move(c));
    }
  }

  std::vector<int> bestA;
  std::vector<int> cand(L_elems.size());
  for (const Conj& c : best_k) {
    for (i64 gi = 0; gi < G.order(); ++gi) {
      const Perm& g = G.elements()[gi];
      const Perm ginv = g.inverse();
      for (size_t p = 0; p < c.src_pos.size(); ++p)
        cand[p] = G.element_index(ginv * G.elements()[alpha[c.src_pos[p]]] * g);
      if (bestA.empty() || cand < bestA) bestA = cand;
    }
  }
  if (bestA.empty()) bestA = alpha;  // L empty cannot happen: identity is always present
  return BasisPair{K, G, bestL, bestA};
}

// Finite K-G-biset with free right G-action, as explicit action tables.
struct Biset {
  PermGroup left_group, right_group;
  i64 size = 0;
  std::vector<std::vector<int>> left;   // |K| x size: left[k][x]  = k.x
  std::vector<std::vector<int>> right;  // size x |G|: right[x][g] = x.g

  // Right-freeness: x.g = x forces g = e.  Cheap enough to check always.
  void check_free() const {
    for (i64 x = 0; x < size; ++x)
      for (i64 g = 1; g < right_group.order(); ++g)
        if (right[x][g] == x) throw domain_error("right action is not free");
  }

  // Full commuting check (k.x).g == k.(x.g); quadratic, used by tests.
  void check_commuting() const {
    for (i64 k = 0; k < left_group.order(); ++k)
      for (i64 x = 0; x < size; ++x)
        for (i64 g = 0; g < right_group.order(); ++g)
          if (right[left[k][x]][g] != left[k][right[x][g]])
            throw domain_error("left and right actions do not commute");
  }
};

// The biset K x_{(L,alpha)} G = (K x G) / (kl, g) ~ (k, alpha(l) g).
// Size is [K:L] * |G|; the right G-action is free.
inline Biset pair_to_biset(const BasisPair& p) {
  const PermGroup& K = p.K;
  const PermGroup& G = p.G;
  const i64 nK = K.order(), nG = G.order(), nL = static_cast<i64>(p.L_elems.size());
  Biset b;
  b.left_group = K;
  b.right_group = G;
  b.size = nK / nL * nG;

  std::vector<int> cls(static_cast<size_t>(nK * nG), -1);
  std::vector<std::pair<int, int>> reps;
  auto pid = [nG](i64 k, i64 g) { return static_cast<size_t>(k * nG + g); };
  for (i64 k = 0; k < nK; ++k) {
    for (i64 g = 0; g < nG; ++g) {
      if (cls[pid(k, g)] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.emplace_back(static_cast<int>(k), static_cast<int>(g));
      // Orbit of (k,g) under l: (k l^{-1}, alpha(l) g), which is the
      // equivalence class of the balanced relation.
      for (size_t lp = 0; lp < p.L_elems.size(); ++lp) {
        i64 k2 = K.mul(static_cast<int>(k), K.inv(p.L_elems[lp]));
        i64 g2 = G.mul(p.alpha[lp], static_cast<int>(g));
        cls[pid(k2, g2)] = id;
      }
      if (cls[pid(k, g)] != id) throw internal_error("balanced relation misses its own point");
    }
  }
  if (static_cast<i64>(reps.size()) != b.size) throw internal_error("wrong biset size");

  b.left.assign(static_cast<size_t>(nK), std::vector<int>(static_cast<size_t>(b.size)));
  for (i64 k2 = 0; k2 < nK; ++k2)
    for (i64 c = 0; c < b.size; ++c)
      b.left[k2][c] = cls[pid(K.mul(static_cast<int>(k2), reps[c].first), reps[c].second)];
  b.right.assign(static_cast<size_t>(b.size), std::vector<int>(static_cast<size_t>(nG)));
  for (i64 c = 0; c < b.size; ++c)
    for (i64 g2 = 0; g2 < nG; ++g2)
      b.right[c][g2] = cls[pid(reps[c].first, G.mul(reps[c].second, static_cast<int>(g2)))];
  return b;
}

// Integer combination of canonical basis pairs of A(G, K) = morphisms
// "source G -> target K" of the finite global Burnside category.
class CatMorphism {
public:
  CatMorphism(PermGroup source, PermGroup target)
      : src_(std::move(source)), dst_(std::move(target)) {}

  const PermGroup& source() const { return src_; }
  const PermGroup& target() const { return dst_; }
  const std::map<PairKey, i64>& terms() const { return terms_; }

  void add(const BasisPair& p, i64 c) {
    if (!(p.K == dst_) || !(p.G == src_)) throw domain_error("pair belongs to a different hom group");
    add_key(p.key(), c);
  }

  void add_key(const PairKey& k, i64 c) {
    if (c == 0) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
      terms_.emplace(k, c);
    } else {
      it->second = checked_add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  BasisPair pair_of(const PairKey& k) const { return BasisPair{dst_, src_, k.first, k.second}; }

  CatMorphism& operator+=(const CatMorphism& o) {
    if (!(src_ == o.src_) || !(dst_ == o.dst_)) throw domain_error("morphisms of different hom groups");
    for (const auto& [k, c] : o.terms_) add_key(k, c);
    return *this;
  }
  CatMorphism& operator*=(i64 s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c = checked_mul(c, s);
    return *this;
  }

  friend bool operator==(const CatMorphism& a, const CatMorphism& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.terms_ == b.terms_;
  }

private:
  PermGroup src_, dst_;
  std::map<PairKey, i64> terms_;
};

// Decomposition of a right-free K-G-biset into canonical basis pairs: one
// term per (K x G)-orbit, read off the stabilizer of the orbit minimum.
inline CatMorphism biset_decompose(const PermGroup& K, const PermGroup& G, const Biset& b) {
  if (!(b.left_group == K) || !(b.right_group == G)) throw domain_error("biset over different groups");
  b.check_free();
  std::vector<int> kgens, ggens;
  for (const Perm& s : K.generators()) kgens.push_back(K.element_index(s));
  for (const Perm& s : G.generators()) ggens.push_back(G.element_index(s));

  CatMorphism out(G, K);
  std::vector<char> seen(static_cast<size_t>(b.size), 0);
  std::vector<int> stack;
  for (i64 x0 = 0; x0 < b.size; ++x0) {
    if (seen[x0]) continue;
    i64 orbit_size = 0;
    seen[x0] = 1;
    stack.push_back(static_cast<int>(x0));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++orbit_size;
      for (int kg : kgens) {
        int y = b.left[kg][x];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
      for (int gg : ggens) {
        int y = b.right[x][gg];
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    // Stabilizer of x0 in K x G under (k,g).x = k.x.g^{-1}: the graph of a
    // homomorphism alpha : L -> G because the right action is free.
    std::map<int, int> right_row;  // point -> g with x0.g = point
    for (i64 g = 0; g < G.order(); ++g) right_row.emplace(b.right[x0][g], static_cast<int>(g));
    std::vector<int> L, alpha;
    for (i64 k = 0; k < K.order(); ++k) {
      auto it = right_row.find(b.left[k][x0]);
      if (it != right_row.end()) {
        L.push_back(static_cast<int>(k));
        alpha.push_back(it->second);
      }
    }
    if (orbit_size != K.order() / static_cast<i64>(L.size()) * G.order())
      throw internal_error("orbit size does not match its stabilizer");
    out.add(canonical_pair(K, G, L, alpha), 1);
  }
  return out;
}

// Balanced product S x_K T of an L'-K-biset and a K-G-biset: the quotient of
// S x T by (s.k, t) ~ (s, k.t), an L'-G-biset.
inline Biset balanced_product(const Biset& S, const Biset& T) {
  if (!(S.right_group == T.left_group)) throw domain_error("bisets do not share the middle group");
  const PermGroup& K = S.right_group;
  const i64 nK = K.order();
  i64 result_size = S.size * T.size / nK;
  if (result_size > config::biset_size_bound.load())
    throw resource_error("balanced product exceeds the biset size bound");

  Biset U;
  U.left_group = S.left_group;
  U.right_group = T.right_group;
  U.size = result_size;

  std::vector<int> cls(static_cast<size_t>(S.size * T.size), -1);
  std::vector<std::pair<int, int>> reps;
  auto pid = [&](i64 s, i64 t) { return static_cast<size_t>(s * T.size + t); };
  for (i64 s = 0; s < S.size; ++s) {
    for (i64 t = 0; t < T.size; ++t) {
      if (cls[pid(s, t)] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.emplace_back(static_cast<int>(s), static_cast<int>(t));
      // Orbit under k: (s.k, k^{-1}.t); K acts freely on S x T on the right
      // of S, so the orbit has exactly |K| points.
      for (i64 k = 0; k < nK; ++k) {
        i64 s2 = S.right[s][k];
        i64 t2 = T.left[K.inv(static_cast<int>(k))][t];
        cls[pid(s2, t2)] = id;
      }
    }
  }
  if (static_cast<i64>(reps.size()) != U.size) throw internal_error("wrong balanced product size");

  U.left.assign(static_cast<size_t>(U.left_group.order()), std::vector<int>(static_cast<size_t>(U.size)));
  for (i64 l = 0; l < U.left_group.order(); ++l)
    for (i64 c = 0; c < U.size; ++c)
      U.left[l][c] = cls[pid(S.left[l][reps[c].first], reps[c].second)];
  U.right.assign(static_cast<size_t>(U.size), std::vector<int>(static_cast<size_t>(U.right_group.order())));
  for (i64 c = 0; c < U.size; ++c)
    for (i64 g = 0; g < U.right_group.order(); ++g)
      U.right[c][g] = cls[pid(reps[c].first, T.right[reps[c].second][g])];
  return U;
}

// Composition A(K, L') x A(G, K) -> A(G, L') by balanced products of the
// underlying bisets followed by decomposition.
inline CatMorphism compose(const CatMorphism& f, const CatMorphism& g) {
  if (!(f.source() == g.target())) throw domain_error("morphisms do not compose");
  CatMorphism out(g.source(), f.target());
  std::vector<std::pair<Biset, i64>> right;
  for (const auto& [gk, gc] : g.terms()) right.emplace_back(pair_to_biset(g.pair_of(gk)), gc);
  for (const auto& [fk, fc] : f.terms()) {
    Biset S = pair_to_biset(f.pair_of(fk));
    for (const auto& [T, gc] : right) {
      CatMorphism dec = biset_decompose(f.target(), g.source(), balanced_product(S, T));
      i64 c = checked_mul(fc, gc);
      for (const auto& [dk, dc] : dec.terms()) out.add_key(dk, checked_mul(c, dc));
    }
  }
  return out;
}

// Identity of A(G, G): the pair (G <= G, id).
inline CatMorphism identity_morphism(const PermGroup& G) {
  std::vector<int> all(static_cast<size_t>(G.order()));
  std::iota(all.begin(), all.end(), 0);
  CatMorphism out(G, G);
  out.add(canonical_pair(G, G, all, all), 1);
  return out;
}

// tr_H^G as a morphism in A(H, G) (source H realized as its own group).
inline CatMorphism transfer_morphism(const PermGroup& G, const Subgroup& H) {
  if (!(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  PermGroup Hg = as_group(H);
  std::vector<int> alpha(H.elems.size());
  std::iota(alpha.begin(), alpha.end(), 0);
  CatMorphism out(Hg, G);
  out.add(canonical_pair(G, Hg, H.elems, alpha), 1);
  return out;
}

// alpha^* as a morphism in A(G, K) for alpha : K -> G.
inline CatMorphism restriction_morphism(const GroupHom& alpha) {
  const PermGroup& K = alpha.source();
  const PermGroup& G = alpha.target();
  std::vector<int> all(static_cast<size_t>(K.order()));
  std::iota(all.begin(), all.end(), 0);
  CatMorphism out(G, K);
  out.add(canonical_pair(K, G, all, alpha.full_map()), 1);
  return out;
}

// The double coset expansion of res_K . tr_H over G as a morphism in
// A(H~, K~): one basis pair (K cap gHg^{-1}, x |-> g^{-1}xg) per K-H double
// coset KgH.
inline CatMorphism double_coset_morphism(const PermGroup& G, const Subgroup& K, const Subgroup& H) {
  if (!(K.parent == G) || !(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  PermGroup Kg = as_group(K), Hg = as_group(H);
  CatMorphism out(Hg, Kg);
  for (const DoubleCoset& dc : double_cosets(G, K, H)) {
    const Perm& g = G.elements()[dc.rep_index];
    const Perm ginv = g.inverse();
    std::vector<int> L, alpha;
    for (i64 ki = 0; ki < Kg.order(); ++ki) {
      int hi = Hg.element_index(ginv * Kg.elements()[ki] * g);
      if (hi >= 0) {
        L.push_back(static_cast<int>(ki));
        alpha.push_back(hi);
      }
    }
    out.add(canonical_pair(Kg, Hg, L, alpha), 1);
  }
  return out;
}

// Canonical basis of A(G, K): pairs (L <= K, alpha : L -> G) up to
// (K x G)-conjugacy, enumerated per subgroup class of K with Weyl-orbit
// deduplication of homomorphism classes.  Deterministic order.
inline std::vector<BasisPair> category_basis(const PermGroup& G, const PermGroup& K) {
  i64 eff = config::hom_order_bound.load();
  if (G.order() > eff || K.order() > eff)
    throw resource_error("group order exceeds category basis bound " + std::to_string(eff));
  const auto& sdK = subgroup_data(K);
  std::vector<BasisPair> out;
  for (const SubgroupClass& cls : sdK.classes) {
    const PermGroup& Lg = cls.rep_group;
    std::vector<GroupHom> homs = enumerate_homs(Lg, G);
    std::vector<int> norm = normalizer_indices(K, cls.rep);

    // c_n as a permutation of Lg's element indices, for each n in N_K(L).
    std::vector<std::vector<int>> conj_maps;
    for (int ni : norm) {
      const Perm& n = K.elements()[ni];
      const Perm ninv = n.inverse();
      std::vector<int> cm(cls.rep.elems.size());
      for (size_t p = 0; p < cls.rep.elems.size(); ++p)
        cm[p] = Lg.element_index(ninv * K.elements()[cls.rep.elems[p]] * n);
      conj_maps.push_back(std::move(cm));
    }

    for (const GroupHom& h : homs) {
      // Keep h iff its canonical key is minimal within its Weyl orbit
      // { alpha . c_n : n in N_K(L) } taken up to G-conjugacy.
      std::vector<int> own = hom_canonical_key(Lg, G, h.full_map());
      bool minimal = true;
      std::vector<int> bm(cls.rep.elems.size());
      for (const auto& cm : conj_maps) {
        for (size_t p = 0; p < cm.size(); ++p) bm[p] = h.full_map()[cm[p]];
        if (hom_canonical_key(Lg, G, bm) < own) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      out.push_back(canonical_pair(K, G, cls.rep.elems, own));
    }
  }
  std::sort(out.begin(), out.end(), [](const BasisPair& a, const BasisPair& b) {
    if (a.L_elems.size() != b.L_elems.size()) return a.L_elems.size() < b.L_elems.size();
    return a.key() < b.key();
  });
  return out;
}

// Action of a morphism on Burnside-ring elements: the basis pair (L, alpha)
// acts as tr_L^K . alpha^*.
inline BurnsideElement evaluate(const CatMorphism& f, const BurnsideElement& x) {
  if (!(x.group() == f.source())) throw domain_error("element does not live over the morphism source");
  const PermGroup& K = f.target();
  BurnsideElement out(K);
  for (const auto& [key, c] : f.terms()) {
    Subgroup L = subgroup_from_elements(K, key.first);
    PermGroup Lg = as_group(L);
    GroupHom alpha(Lg, f.source(), key.second);
    BurnsideElement r = restrict_along(alpha, x);
    BurnsideElement t = transfer(K, L, r);
    out += c * t;
  }
  return out;
}

}  // namespace burnside
