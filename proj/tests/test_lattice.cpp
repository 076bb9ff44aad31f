#include <catch2/catch_amalgamated.hpp>

#include <burnside/lattice.hpp>
#include <burnside/errors.hpp>

#include <algorithm>

using namespace burnside;

using Mat = std::vector<std::vector<i64>>;

namespace {

i64 det3(const Mat& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Independent membership oracle for a full-rank 3x3 generator matrix: solve
// x * M = v by Cramer's rule and demand integral coordinates.
bool cramer_contains(const Mat& rows, const std::vector<i64>& v) {
  i64 d = det3(rows);
  REQUIRE(d != 0);
  for (int i = 0; i < 3; ++i) {
    Mat rep = rows;
    rep[i] = v;
    if (det3(rep) % d != 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hermite form of a small lattice") {
  LatticeBasis L = hnf_basis(2, {{2, -1}, {0, 3}});
  REQUIRE(L.rows == Mat{{2, 2}, {0, 3}});
  REQUIRE(L.rank() == 2);
  REQUIRE(L.ambient_rank == 2);
}

TEST_CASE("hermite form is canonical") {
  Mat gens = {{3, 1, 4}, {1, 5, 9}, {2, 6, 5}};
  LatticeBasis a = hnf_basis(3, gens);

  // generator order must not matter
  Mat shuffled = {gens[2], gens[0], gens[1]};
  REQUIRE(hnf_basis(3, shuffled).rows == a.rows);

  // row operations must not matter
  Mat mixed = {{3, 1, 4},
               {4, 6, 13},   // r0 + r1
               {-2, -6, -5}};  // -r2
  REQUIRE(hnf_basis(3, mixed).rows == a.rows);

  // re-normalizing the result is a fixed point
  REQUIRE(hnf_basis(3, a.rows).rows == a.rows);

  // HNF shape: positive pivots, zeros below, entries above in [0, pivot)
  int prev_col = -1;
  for (size_t r = 0; r < a.rows.size(); ++r) {
    size_t c = 0;
    while (c < a.rows[r].size() && a.rows[r][c] == 0) ++c;
    REQUIRE(c < a.rows[r].size());
    REQUIRE(static_cast<int>(c) > prev_col);
    prev_col = static_cast<int>(c);
    REQUIRE(a.rows[r][c] > 0);
    for (size_t r2 = 0; r2 < r; ++r2) {
      REQUIRE(a.rows[r2][c] >= 0);
      REQUIRE(a.rows[r2][c] < a.rows[r][c]);
    }
  }
}

TEST_CASE("hermite form drops dependent rows") {
  LatticeBasis L = hnf_basis(3, {{1, 2, 3}, {2, 4, 6}, {0, 0, 0}});
  REQUIRE(L.rank() == 1);
  REQUIRE(L.rows == Mat{{1, 2, 3}});
  REQUIRE(hnf_basis(2, {}).rank() == 0);
}

TEST_CASE("membership agrees with the Cramer oracle") {
  const Mat rows = {{2, 1, 0}, {0, 3, 1}, {0, 0, 5}};
  LatticeBasis L = hnf_basis(3, rows);
  for (i64 x = -4; x <= 4; ++x)
    for (i64 y = -4; y <= 4; ++y)
      for (i64 z = -4; z <= 4; ++z) {
        std::vector<i64> v{x, y, z};
        INFO(x << "," << y << "," << z);
        REQUIRE(lattice_contains(L, v) == cramer_contains(rows, v));
      }
}

TEST_CASE("membership contains every small integer combination") {
  const Mat rows = {{2, -1}, {0, 3}};
  LatticeBasis L = hnf_basis(2, rows);
  for (i64 a = -10; a <= 10; ++a)
    for (i64 b = -10; b <= 10; ++b) {
      std::vector<i64> v{2 * a, -a + 3 * b};
      REQUIRE(lattice_contains(L, v));
    }
  REQUIRE(!lattice_contains(L, {1, 0}));
  REQUIRE(!lattice_contains(L, {0, 1}));
  REQUIRE(!lattice_contains(L, {2, 0}));  // (2,0) = (2,-1)+(0,1): not in L
  REQUIRE_THROWS_AS(lattice_contains(L, {1, 2, 3}), domain_error);
}

TEST_CASE("membership in a rank-deficient lattice") {
  LatticeBasis L = hnf_basis(3, {{1, 2, 0}});
  REQUIRE(lattice_contains(L, {3, 6, 0}));
  REQUIRE(!lattice_contains(L, {3, 5, 0}));
  REQUIRE(!lattice_contains(L, {0, 0, 1}));
  REQUIRE(lattice_contains(L, {0, 0, 0}));
}

TEST_CASE("smith invariants") {
  REQUIRE(smith_invariants({{2, 0}, {0, 3}}) == std::vector<i64>{1, 6});
  REQUIRE(smith_invariants({{4, 0}, {0, 6}}) == std::vector<i64>{2, 12});
  REQUIRE(smith_invariants({{2, 4}, {0, 4}}) == std::vector<i64>{2, 4});
  REQUIRE(smith_invariants({{1, 0}, {0, 1}}) == std::vector<i64>{1, 1});
  REQUIRE(smith_invariants({}) == std::vector<i64>{});
  REQUIRE(smith_invariants({{0, 0}, {0, 0}}) == std::vector<i64>{});
  REQUIRE(smith_invariants({{6}}) == std::vector<i64>{6});
  REQUIRE(smith_invariants({{-6}}) == std::vector<i64>{6});

  // divisibility chain always holds
  auto inv = smith_invariants({{6, 4, 2}, {4, 10, 8}, {2, 8, 16}});
  for (size_t i = 1; i < inv.size(); ++i) REQUIRE(inv[i] % inv[i - 1] == 0);
}

TEST_CASE("quotient invariants") {
  AbelianInvariants q1 = quotient_invariants(2, hnf_basis(2, {{2, -1}}));
  REQUIRE(q1 == AbelianInvariants{1, {}});

  AbelianInvariants q2 = quotient_invariants(1, hnf_basis(1, {{3}}));
  REQUIRE(q2 == AbelianInvariants{0, {3}});

  AbelianInvariants q3 = quotient_invariants(3, hnf_basis(3, {{1, 0, 0}, {0, 2, 0}}));
  REQUIRE(q3 == AbelianInvariants{1, {2}});

  AbelianInvariants q4 = quotient_invariants(2, hnf_basis(2, {}));
  REQUIRE(q4 == AbelianInvariants{2, {}});

  AbelianInvariants q5 = quotient_invariants(2, hnf_basis(2, {{2, 0}, {0, 3}}));
  REQUIRE(q5 == AbelianInvariants{0, {6}});
}

TEST_CASE("saturation membership") {
  LatticeBasis L = hnf_basis(2, {{2, 2}});
  REQUIRE(saturation_contains(L, {1, 1}));
  REQUIRE(saturation_contains(L, {2, 2}));
  REQUIRE(saturation_contains(L, {-3, -3}));
  REQUIRE(!saturation_contains(L, {1, 0}));
  REQUIRE(saturation_contains(L, {0, 0}));
  REQUIRE_THROWS_AS(saturation_contains(L, {1, 2, 3}), domain_error);
}

TEST_CASE("sublattice index") {
  LatticeBasis full = hnf_basis(2, {{1, 0}, {0, 1}});
  LatticeBasis sub = hnf_basis(2, {{2, 0}, {0, 3}});
  auto idx = sublattice_index(sub, full);
  REQUIRE(idx.has_value());
  REQUIRE(*idx == 6);

  REQUIRE(sublattice_index(full, full) == std::optional<i64>{1});

  // rank drop means infinite index
  LatticeBasis line = hnf_basis(2, {{1, 0}});
  REQUIRE(!sublattice_index(line, full).has_value());

  // non-containment is a domain error
  REQUIRE_THROWS_AS(sublattice_index(full, sub), domain_error);
}
