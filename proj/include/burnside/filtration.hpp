#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

// t_K^H = [H:K] * tr_H(1) - tr_K(1) in A(G), for nested subgroups K <= H <= G.
inline BurnsideElement t_class(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
  if (!(H.parent == G) || !(K.parent == G)) throw domain_error("subgroup does not belong to this group");
  if (!subgroup_includes(H, K)) throw domain_error("t_class requires K <= H");
  if (H.order() % K.order() != 0) throw internal_error("subgroup order does not divide");
  i64 index = H.order() / K.order();
  BurnsideElement out(G);
  int ch = class_index(G, H);
  int ck = class_index(G, K);
  out.coeff(ch) = checked_add(out.coeff(ch), index);
  out.coeff(ck) = checked_sub(out.coeff(ck), 1);
  return out;
}

// I_n(G): the sublattice of A(G) spanned by all t_K^H with [H:K] <= n.
// Enumeration: for each subgroup class representative H, all subgroups
// K <= H of index at most n, up to N_G(H)-conjugacy.
inline LatticeBasis ideal_lattice(const PermGroup& G, i64 n) {
  if (n < 1) throw domain_error("filtration stage must be at least 1");
  const auto& sd = subgroup_data(G);
  const int nc = static_cast<int>(sd.classes.size());
  std::vector<std::vector<i64>> rows;

  for (int h = 0; h < nc; ++h) {
    const Subgroup& H = sd.classes[h].rep;
    std::vector<std::pair<Perm, Perm>> norm;  // (g, g^{-1}) over N_G(H)
    for (int gi : normalizer_indices(G, H)) {
      const Perm& g = G.elements()[gi];
      norm.emplace_back(g, g.inverse());
    }
    std::set<std::vector<int>> seen;
    for (size_t s = 0; s < sd.subgroups.size(); ++s) {
      const auto& K = sd.subgroups[s];
      if (static_cast<i64>(K.size()) == H.order()) continue;  // t vanishes for K = H
      if (checked_mul(static_cast<i64>(K.size()), n) < H.order()) continue;  // index > n
      if (!std::includes(H.elems.begin(), H.elems.end(), K.begin(), K.end())) continue;
      if (seen.count(K)) continue;
      for (const auto& [g, gi] : norm) seen.insert(detail::conjugate_key(G, K, g, gi));
      Subgroup Ksub{G, K, sd.subgroup_gens[s]};
      rows.push_back(t_class(G, H, Ksub).coeffs());
    }
  }
  return hnf_basis(nc, std::move(rows));
}

// The augmentation ideal I(G), spanned by t_H^G over all classes; its rank
// is always (number of classes) - 1.
inline LatticeBasis augmentation_ideal(const PermGroup& G) {
  const auto& sd = subgroup_data(G);
  const int nc = static_cast<int>(sd.classes.size());
  Subgroup full = full_subgroup(G);
  std::vector<std::vector<i64>> rows;
  for (int k = 0; k + 1 < nc; ++k)  // the last class is G itself: zero row
    rows.push_back(t_class(G, full, sd.classes[k].rep).coeffs());
  LatticeBasis out = hnf_basis(nc, std::move(rows));
  if (out.rank() != nc - 1) throw internal_error("augmentation ideal has unexpected rank");
  return out;
}

// Invariants of A(G)/I_n(G); n = nullopt means the colimit stage, where
// I_n(G) has stabilized to the augmentation ideal.
inline AbelianInvariants sp_invariants(const PermGroup& G, std::optional<i64> n) {
  const auto& sd = subgroup_data(G);
  i64 eff = n ? *n : G.order();
  return quotient_invariants(static_cast<int>(sd.classes.size()), ideal_lattice(G, eff));
}

// Least n with I_n(G) = I(G).  Guaranteed to be at most |G|; found by
// binary search over the monotone chain I_1 <= I_2 <= ...
inline i64 stabilization_index(const PermGroup& G) {
  LatticeBasis target = augmentation_ideal(G);
  i64 lo = 1, hi = G.order();
  if (!(ideal_lattice(G, hi) == target)) throw internal_error("filtration failed to stabilize at |G|");
  while (lo < hi) {
    i64 mid = lo + (hi - lo) / 2;
    if (ideal_lattice(G, mid) == target)
      hi = mid;
    else
      lo = mid + 1;
  }
  return lo;
}

// Whether the step from I_{n-1} to I_n is rationally trivial (no rank jump).
inline bool rational_step_check(const PermGroup& G, i64 n) {
  if (n < 2) throw domain_error("rational step check needs n >= 2");
  return ideal_lattice(G, n - 1).rank() == ideal_lattice(G, n).rank();
}

struct FiltrationStage {
  i64 n = 0;
  i64 ideal_rank = 0;
  AbelianInvariants quotient;
};

struct FiltrationTable {
  PermGroup group;
  std::vector<FiltrationStage> stages;
  i64 stabilization = 0;
};

inline FiltrationTable filtration_table(const PermGroup& G, std::optional<i64> n_max = std::nullopt) {
  FiltrationTable out;
  out.group = G;
  const auto& sd = subgroup_data(G);
  const int nc = static_cast<int>(sd.classes.size());
  i64 top = n_max ? *n_max : G.order();
  if (top < 1) throw domain_error("filtration stage must be at least 1");
  for (i64 n = 1; n <= top; ++n) {
    LatticeBasis L = ideal_lattice(G, n);
    FiltrationStage st;
    st.n = n;
    st.ideal_rank = L.rank();
    st.quotient = quotient_invariants(nc, L);
    out.stages.push_back(std::move(st));
  }
  out.stabilization = stabilization_index(G);
  return out;
}

}  // namespace burnside
