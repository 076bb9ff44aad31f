#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"

namespace burnside {

// Basis of a sublattice of Z^ambient_rank in row-style Hermite normal form:
// rows in echelon order, positive pivots, and every entry above a pivot
// reduced into [0, pivot).  The HNF is the canonical form, so two lattices
// are equal iff their bases compare equal.
struct LatticeBasis {
  int ambient_rank = 0;
  std::vector<std::vector<i64>> rows;

  int rank() const { return static_cast<int>(rows.size()); }
  friend bool operator==(const LatticeBasis&, const LatticeBasis&) = default;
};

// Invariants of a finitely generated abelian group: free rank plus torsion
// factors d_1 | d_2 | ... with every d_i >= 2.
struct AbelianInvariants {
  i64 rank = 0;
  std::vector<i64> torsion;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

inline LatticeBasis hnf_basis(int ambient, std::vector<std::vector<i64>> gens) {
  if (ambient < 0) throw domain_error("negative ambient rank");
  for (const auto& r : gens)
    if (static_cast<int>(r.size()) != ambient) throw domain_error("generator has wrong length");

  size_t top = 0;  // rows [0, top) are finished pivot rows
  for (int col = 0; col < ambient && top < gens.size(); ++col) {
    // Euclidean elimination in this column, selecting the entry of smallest
    // nonzero absolute value as the pivot each round.
    while (true) {
      size_t piv = gens.size();
      for (size_t i = top; i < gens.size(); ++i) {
        if (gens[i][col] == 0) continue;
        if (piv == gens.size() || checked_abs(gens[i][col]) < checked_abs(gens[piv][col])) piv = i;
      }
      if (piv == gens.size()) break;  // column is clear below top
      std::swap(gens[piv], gens[top]);
      bool clear = true;
      for (size_t i = top + 1; i < gens.size(); ++i) {
        if (gens[i][col] == 0) continue;
        i64 q = floor_div(gens[i][col], gens[top][col]);
        for (int c = col; c < ambient; ++c)
          gens[i][c] = checked_sub(gens[i][c], checked_mul(q, gens[top][c]));
        if (gens[i][col] != 0) clear = false;  // remainder stays; re-pick pivot
      }
      if (clear) {
        if (gens[top][col] < 0)
          for (int c = col; c < ambient; ++c) gens[top][c] = checked_neg(gens[top][c]);
        // Reduce the entries above the new pivot into [0, pivot).
        for (size_t i = 0; i < top; ++i) {
          i64 q = floor_div(gens[i][col], gens[top][col]);
          if (q == 0) continue;
          for (int c = col; c < ambient; ++c)
            gens[i][c] = checked_sub(gens[i][c], checked_mul(q, gens[top][c]));
        }
        ++top;
        break;
      }
    }
  }
  gens.resize(top);
  return LatticeBasis{ambient, std::move(gens)};
}

// Smith normal form invariant factors d_1 | d_2 | ... of an integer matrix.
// Factors equal to 1 are kept; zero rows/columns contribute nothing.
inline std::vector<i64> smith_invariants(std::vector<std::vector<i64>> m) {
  if (m.empty()) return {};
  const size_t R = m.size(), C = m[0].size();
  for (const auto& r : m)
    if (r.size() != C) throw domain_error("matrix is not rectangular");

  std::vector<i64> diag;
  size_t t = 0;
  while (t < R && t < C) {
    // Locate the entry of minimal nonzero absolute value in the submatrix.
    size_t pi = R, pj = C;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j)
        if (m[i][j] != 0 && (pi == R || checked_abs(m[i][j]) < checked_abs(m[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi == R) break;  // submatrix is zero
    std::swap(m[pi], m[t]);
    for (size_t i = 0; i < R; ++i) std::swap(m[i][pj], m[i][t]);

    bool dirty = false;
    for (size_t i = t + 1; i < R; ++i) {
      if (m[i][t] == 0) continue;
      i64 q = floor_div(m[i][t], m[t][t]);
      for (size_t j = t; j < C; ++j) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[t][j]));
      if (m[i][t] != 0) dirty = true;
    }
    for (size_t j = t + 1; j < C; ++j) {
      if (m[t][j] == 0) continue;
      i64 q = floor_div(m[t][j], m[t][t]);
      for (size_t i = t; i < R; ++i) m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][t]));
      if (m[t][j] != 0) dirty = true;
    }
    if (dirty) continue;  // smaller remainders appeared; re-pick the pivot

    // Divisibility fix-up: the pivot must divide every remaining entry.
    bool fixed = true;
    for (size_t i = t + 1; i < R && fixed; ++i)
      for (size_t j = t + 1; j < C && fixed; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (size_t c = t; c < C; ++c) m[t][c] = checked_add(m[t][c], m[i][c]);
          fixed = false;
        }
    if (!fixed) continue;

    diag.push_back(checked_abs(m[t][t]));
    ++t;
  }
  return diag;
}

// Membership by back-substitution over the HNF rows.
inline bool lattice_contains(const LatticeBasis& L, std::vector<i64> v) {
  if (static_cast<int>(v.size()) != L.ambient_rank) throw domain_error("vector has wrong length");
  size_t ri = 0;
  for (int col = 0; col < L.ambient_rank; ++col) {
    if (ri < L.rows.size()) {
      // Find this row's pivot column.
      int pc = -1;
      for (int c = 0; c < L.ambient_rank; ++c)
        if (L.rows[ri][c] != 0) {
          pc = c;
          break;
        }
      if (pc == col) {
        i64 piv = L.rows[ri][col];
        if (v[col] % piv != 0) return false;
        i64 q = v[col] / piv;
        if (q != 0)
          for (int c = col; c < L.ambient_rank; ++c)
            v[c] = checked_sub(v[c], checked_mul(q, L.rows[ri][c]));
        ++ri;
        continue;
      }
    }
    if (v[col] != 0) return false;
  }
  return true;
}

inline AbelianInvariants quotient_invariants(int ambient, const LatticeBasis& L) {
  if (L.ambient_rank != ambient) throw domain_error("ambient rank mismatch");
  AbelianInvariants out;
  out.rank = ambient - L.rank();
  for (i64 d : smith_invariants(L.rows))
    if (d >= 2) out.torsion.push_back(d);
  return out;
}

// Whether some nonzero integer multiple of v lies in L, i.e. v is in the
// rational span of L.  Decided exactly: adjoining v must not raise the rank.
inline bool saturation_contains(const LatticeBasis& L, const std::vector<i64>& v) {
  if (static_cast<int>(v.size()) != L.ambient_rank) throw domain_error("vector has wrong length");
  std::vector<std::vector<i64>> rows = L.rows;
  rows.push_back(v);
  return hnf_basis(L.ambient_rank, std::move(rows)).rank() == L.rank();
}

// Index [L2 : L1] for L1 a sublattice of L2 (verified; domain error
// otherwise); nullopt means infinite index (rank drop).
inline std::optional<i64> sublattice_index(const LatticeBasis& L1, const LatticeBasis& L2) {
  if (L1.ambient_rank != L2.ambient_rank) throw domain_error("ambient rank mismatch");
  for (const auto& r : L1.rows)
    if (!lattice_contains(L2, r)) throw domain_error("first lattice is not contained in the second");
  if (L1.rank() < L2.rank()) return std::nullopt;
  // Equal rank and containment: same pivot columns, and the index is the
  // ratio of the pivot products.
  i64 p1 = 1, p2 = 1;
  for (const auto& r : L1.rows)
    for (i64 x : r)
      if (x != 0) {
        p1 = checked_mul(p1, x);
        break;
      }
  for (const auto& r : L2.rows)
    for (i64 x : r)
      if (x != 0) {
        p2 = checked_mul(p2, x);
        break;
      }
  if (p2 == 0 || p1 % p2 != 0) throw internal_error("pivot products do not divide");
  return p1 / p2;
}

}  // namespace burnside
