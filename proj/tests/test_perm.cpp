#include <catch2/catch_amalgamated.hpp>

#include <burnside/perm.hpp>
#include <burnside/errors.hpp>

using namespace burnside;

TEST_CASE("identity permutation") {
  Perm id(4);
  REQUIRE(id.degree() == 4);
  REQUIRE(id.is_identity());
  REQUIRE(id.order() == 1);
  REQUIRE(id.cycle_string() == "(1)");
  REQUIRE(id == id.inverse());
}

TEST_CASE("construction from images validates bijectivity") {
  REQUIRE_NOTHROW(Perm({1, 0, 2}));
  REQUIRE_THROWS_AS(Perm({0, 0, 2}), validity_error);
  REQUIRE_THROWS_AS(Perm({0, 3, 1}), validity_error);
  REQUIRE_THROWS_AS(Perm({-1, 1, 2}), validity_error);
}

TEST_CASE("cycle notation round trip") {
  Perm p = Perm::from_cycles(4, {{1, 2}, {3, 4}});
  REQUIRE(p.cycle_string() == "(1 2)(3 4)");
  REQUIRE(p.order() == 2);

  Perm q = Perm::from_cycles(5, {{1, 2, 3, 4, 5}});
  REQUIRE(q.cycle_string() == "(1 2 3 4 5)");
  REQUIRE(q.order() == 5);

  // fixed points are suppressed
  Perm r = Perm::from_cycles(5, {{2, 4}});
  REQUIRE(r.cycle_string() == "(2 4)");

  // one-element cycles are no-ops
  REQUIRE(Perm::from_cycles(3, {{2}}).is_identity());
}

TEST_CASE("from_cycles rejects bad input") {
  REQUIRE_THROWS_AS(Perm::from_cycles(3, {{1, 1}}), validity_error);
  REQUIRE_THROWS_AS(Perm::from_cycles(3, {{0, 1}}), validity_error);
  REQUIRE_THROWS_AS(Perm::from_cycles(3, {{3, 4}}), validity_error);
}

TEST_CASE("composition applies the right factor first") {
  Perm a = Perm::from_cycles(3, {{1, 2}});
  Perm b = Perm::from_cycles(3, {{2, 3}});
  Perm ab = a * b;  // b first, then a
  // point 2 (index 1): b sends 2 -> 3, a fixes 3; so 2 -> 3.
  REQUIRE(ab(1) == 2);
  REQUIRE(ab == Perm::from_cycles(3, {{1, 2, 3}}));
  Perm ba = b * a;
  REQUIRE(ba == Perm::from_cycles(3, {{1, 3, 2}}));
  REQUIRE(ab != ba);
}

TEST_CASE("leftmost cycle acts first in multi-cycle input") {
  // (1 2)(2 3) as a product: apply (1 2) first, then (2 3).
  Perm p = Perm::from_cycles(3, {{1, 2}, {2, 3}});
  REQUIRE(p(0) == 2);  // 1 -> 2 -> 3
  REQUIRE(p == Perm::from_cycles(3, {{1, 3, 2}}));
}

TEST_CASE("inverse and order") {
  Perm p = Perm::from_cycles(6, {{1, 2, 3}, {4, 5}});
  REQUIRE((p * p.inverse()).is_identity());
  REQUIRE((p.inverse() * p).is_identity());
  REQUIRE(p.order() == 6);
}

TEST_CASE("lexicographic comparison on image arrays") {
  Perm id(3);
  Perm t = Perm::from_cycles(3, {{2, 3}});
  Perm s = Perm::from_cycles(3, {{1, 2}});
  REQUIRE(id < t);
  REQUIRE(t < s);
  std::vector<Perm> v{s, id, t};
  std::sort(v.begin(), v.end());
  REQUIRE(v.front() == id);
  REQUIRE(v.back() == s);
}
