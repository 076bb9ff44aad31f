#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"

namespace burnside {

// Group homomorphism held as a full element map (source index -> target
// index).  Construction verifies the homomorphism property on every pair of
// source elements.
class GroupHom {
public:
  GroupHom(PermGroup src, PermGroup dst, std::vector<int> full_map)
      : src_(std::move(src)), dst_(std::move(dst)), map_(std::move(full_map)) {
    if (static_cast<i64>(map_.size()) != src_.order())
      throw domain_error("homomorphism map has wrong length");
    for (int v : map_)
      if (v < 0 || v >= dst_.order()) throw domain_error("homomorphism image out of range");
    const i64 n = src_.order();
    for (i64 i = 0; i < n; ++i) {
      for (i64 j = 0; j < n; ++j) {
        int sij = src_.mul(static_cast<int>(i), static_cast<int>(j));
        int dij = dst_.mul(map_[i], map_[j]);
        if (map_[sij] != dij) throw domain_error("map is not a homomorphism");
      }
    }
  }

  const PermGroup& source() const { return src_; }
  const PermGroup& target() const { return dst_; }
  const std::vector<int>& full_map() const { return map_; }

  int apply_index(int i) const { return map_[i]; }
  Perm apply(const Perm& p) const {
    int i = src_.element_index(p);
    if (i < 0) throw domain_error("element not in the source group");
    return dst_.elements()[map_[i]];
  }

  bool is_surjective() const {
    std::vector<char> hit(static_cast<size_t>(dst_.order()), 0);
    i64 distinct = 0;
    for (int v : map_)
      if (!hit[v]) {
        hit[v] = 1;
        ++distinct;
      }
    return distinct == dst_.order();
  }

private:
  PermGroup src_, dst_;
  std::vector<int> map_;
};

inline GroupHom identity_hom(const PermGroup& G) {
  std::vector<int> m(static_cast<size_t>(G.order()));
  std::iota(m.begin(), m.end(), 0);
  return GroupHom(G, G, std::move(m));
}

// Inclusion of a subgroup-as-group into the ambient group; every element of
// `sub` must belong to `big`.
inline GroupHom inclusion_hom(const PermGroup& sub, const PermGroup& big) {
  std::vector<int> m;
  m.reserve(static_cast<size_t>(sub.order()));
  for (const Perm& p : sub.elements()) {
    int i = big.element_index(p);
    if (i < 0) throw domain_error("inclusion: element not in the ambient group");
    m.push_back(i);
  }
  return GroupHom(sub, big, std::move(m));
}

// Inner automorphism c_g : x -> g^{-1} x g.
inline GroupHom conjugation_hom(const PermGroup& G, const Perm& g) {
  if (G.element_index(g) < 0) throw domain_error("conjugating element not in the group");
  Perm ginv = g.inverse();
  std::vector<int> m;
  m.reserve(static_cast<size_t>(G.order()));
  for (const Perm& x : G.elements()) m.push_back(G.element_index(ginv * x * g));
  return GroupHom(G, G, std::move(m));
}

inline GroupHom compose_homs(const GroupHom& f, const GroupHom& g) {
  if (!(g.target() == f.source())) throw domain_error("homomorphisms do not compose");
  std::vector<int> m;
  m.reserve(g.full_map().size());
  for (int v : g.full_map()) m.push_back(f.apply_index(v));
  return GroupHom(g.source(), f.target(), std::move(m));
}

// Restriction of alpha to a subgroup L of its source, as a map from L
// realized as a group in its own right.
inline GroupHom restrict_hom(const GroupHom& alpha, const Subgroup& L) {
  if (!(L.parent == alpha.source())) throw domain_error("subgroup not in the source of the map");
  PermGroup Lg = as_group(L);
  std::vector<int> m;
  m.reserve(L.elems.size());
  for (int i : L.elems) m.push_back(alpha.apply_index(i));
  return GroupHom(Lg, alpha.target(), std::move(m));
}

// Preimage alpha^{-1}(H) of a subgroup of the target, as a subgroup of the
// source.
inline Subgroup preimage_subgroup(const GroupHom& alpha, const Subgroup& H) {
  if (!(H.parent == alpha.target())) throw domain_error("subgroup not in the target of the map");
  std::vector<int> elems;
  for (i64 i = 0; i < alpha.source().order(); ++i)
    if (H.contains_index(alpha.apply_index(static_cast<int>(i)))) elems.push_back(static_cast<int>(i));
  return subgroup_from_elements(alpha.source(), std::move(elems));
}

// Canonical key of a homomorphism up to conjugation in the target: the
// lex-minimal full map among c_g . alpha over all g.
inline std::vector<int> hom_canonical_key(const PermGroup& src, const PermGroup& dst,
                                          const std::vector<int>& full_map) {
  std::vector<int> best;
  std::vector<int> cand(full_map.size());
  for (const Perm& g : dst.elements()) {
    Perm ginv = g.inverse();
    for (size_t i = 0; i < full_map.size(); ++i)
      cand[i] = dst.element_index(ginv * dst.elements()[full_map[i]] * g);
    if (best.empty() || cand < best) best = cand;
  }
  (void)src;
  return best;
}

// Greedy small generating sequence: scan elements in order, keep those not
// yet generated.  Returns (perm, source index) pairs; empty for the trivial
// group.
inline std::vector<std::pair<Perm, int>> greedy_generators(const PermGroup& G) {
  std::vector<std::pair<Perm, int>> gens;
  std::vector<Perm> closure = detail::generate_elements(G.degree(), {});
  for (i64 i = 1; i < G.order(); ++i) {
    const Perm& p = G.elements()[i];
    if (std::binary_search(closure.begin(), closure.end(), p)) continue;
    gens.emplace_back(p, static_cast<int>(i));
    std::vector<Perm> gl;
    for (auto& [q, qi] : gens) gl.push_back(q);
    closure = detail::generate_elements(G.degree(), gl);
    if (static_cast<i64>(closure.size()) == G.order()) break;
  }
  return gens;
}

// All homomorphisms L -> G up to conjugation in G, by brute force over
// generator images (pruned by element orders) with full verification.
// Deterministic: results are sorted by their canonical conjugation key.
inline std::vector<GroupHom> enumerate_homs(const PermGroup& L, const PermGroup& G, i64 bound = 0) {
  i64 eff = bound > 0 ? bound : config::hom_order_bound.load();
  if (L.order() > eff || G.order() > eff)
    throw resource_error("group order exceeds homomorphism enumeration bound " + std::to_string(eff));

  auto gens = greedy_generators(L);
  const int k = static_cast<int>(gens.size());
  const i64 nL = L.order();

  // BFS tree over L with respect to the greedy generators: discovery order
  // with (parent, generator) edges, rooted at the identity.
  std::vector<int> disc_order, parent(nL, -1), via_gen(nL, -1);
  {
    std::vector<char> seen(static_cast<size_t>(nL), 0);
    std::deque<int> q;
    seen[L.identity_index()] = 1;
    q.push_back(L.identity_index());
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      disc_order.push_back(x);
      for (int gi = 0; gi < k; ++gi) {
        int y = L.element_index(L.elements()[x] * gens[gi].first);
        if (!seen[y]) {
          seen[y] = 1;
          parent[y] = x;
          via_gen[y] = gi;
          q.push_back(y);
        }
      }
    }
    if (static_cast<i64>(disc_order.size()) != nL) throw internal_error("generators do not generate");
  }

  // Candidate images per generator, pruned by order divisibility.
  std::vector<std::vector<int>> allowed(k);
  for (int gi = 0; gi < k; ++gi) {
    i64 o = gens[gi].first.order();
    for (i64 d = 0; d < G.order(); ++d)
      if (o % G.elements()[d].order() == 0) allowed[gi].push_back(static_cast<int>(d));
  }

  // The canonical key is itself the full map of a conjugate homomorphism, so
  // the key set doubles as the list of canonical representatives.
  std::set<std::vector<int>> reps;
  std::vector<int> choice(k, 0), img(k, 0), fmap(static_cast<size_t>(nL), -1);

  auto try_candidate = [&]() {
    fmap.assign(static_cast<size_t>(nL), -1);
    fmap[L.identity_index()] = G.identity_index();
    for (int x : disc_order) {
      if (x == L.identity_index()) continue;
      fmap[x] = G.mul(fmap[parent[x]], img[via_gen[x]]);
    }
    // Edge check suffices: f(x*s)=f(x)f(s) for every x and generator s
    // extends to the full homomorphism property by induction on word length.
    for (i64 x = 0; x < nL; ++x) {
      for (int gi = 0; gi < k; ++gi) {
        int xs = L.element_index(L.elements()[x] * gens[gi].first);
        if (fmap[xs] != G.mul(fmap[x], img[gi])) return;
      }
    }
    reps.insert(hom_canonical_key(L, G, fmap));
  };

  if (k == 0) {
    try_candidate();
  } else {
    while (true) {
      for (int gi = 0; gi < k; ++gi) img[gi] = allowed[gi][choice[gi]];
      try_candidate();
      int pos = k - 1;
      while (pos >= 0 && ++choice[pos] == static_cast<int>(allowed[pos].size())) {
        choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }

  std::vector<GroupHom> out;
  out.reserve(reps.size());
  for (const auto& m : reps) out.emplace_back(L, G, m);
  return out;
}

}  // namespace burnside
