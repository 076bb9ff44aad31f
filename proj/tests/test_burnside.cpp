#include <catch2/catch_amalgamated.hpp>

#include <burnside/burnside.hpp>

using namespace burnside;

namespace {

GroupHom parity_hom(const PermGroup& G, const PermGroup& s2) {
  std::vector<int> parity;
  for (const Perm& p : G.elements()) {
    int inv = 0;
    for (int a = 0; a < G.degree(); ++a)
      for (int b = a + 1; b < G.degree(); ++b)
        if (p(a) > p(b)) ++inv;
    parity.push_back(inv % 2);
  }
  return GroupHom(G, s2, parity);
}

// The quotient Sym(4) -> Sym(3) acting on the three pairings of {1,2,3,4}.
GroupHom pairings_hom(const PermGroup& s4, const PermGroup& s3) {
  std::vector<int> map;
  for (const Perm& g : s4.elements()) {
    std::vector<int> img(3);
    for (int p = 2; p <= 4; ++p) {
      int x = -1, y = -1;
      for (int q = 2; q <= 4; ++q)
        if (q != p) (x < 0 ? x : y) = q;
      int g1 = g(0) + 1, gp = g(p - 1) + 1, gx = g(x - 1) + 1, gy = g(y - 1) + 1;
      int partner;
      if (g1 == 1)
        partner = gp;
      else if (gp == 1)
        partner = g1;
      else if (gx == 1)
        partner = gy;
      else
        partner = gx;
      img[p - 2] = partner - 2;
    }
    map.push_back(s3.element_index(Perm(img)));
    REQUIRE(map.back() >= 0);
  }
  return GroupHom(s4, s3, map);
}

}  // namespace

TEST_CASE("basis order and ring unit") {
  PermGroup s3 = symmetric_group(3);
  const auto& sd = subgroup_data(s3);
  REQUIRE(sd.classes.size() == 4);
  REQUIRE(sd.classes[0].rep.order() == 1);
  REQUIRE(sd.classes[1].rep.order() == 2);
  REQUIRE(sd.classes[2].rep.order() == 3);
  REQUIRE(sd.classes[3].rep.order() == 6);

  BurnsideElement one = BurnsideElement::one(s3);
  REQUIRE(one.coeffs() == std::vector<i64>{0, 0, 0, 1});
  for (size_t j = 0; j < 4; ++j) {
    BurnsideElement b = BurnsideElement::basis(s3, j);
    REQUIRE(multiply(one, b) == b);
    REQUIRE(multiply(b, one) == b);
    REQUIRE(augmentation(b) == sd.classes[j].index_in_parent);
  }
}

TEST_CASE("element arithmetic") {
  PermGroup s3 = symmetric_group(3);
  BurnsideElement x(s3, {1, -2, 0, 3});
  BurnsideElement y(s3, {0, 1, 1, 0});
  REQUIRE((x + y).coeffs() == std::vector<i64>{1, -1, 1, 3});
  REQUIRE((x - y).coeffs() == std::vector<i64>{1, -3, -1, 3});
  REQUIRE((2 * x).coeffs() == std::vector<i64>{2, -4, 0, 6});
  REQUIRE_THROWS_AS(BurnsideElement(s3, {1, 2}), domain_error);

  PermGroup s2 = symmetric_group(2);
  BurnsideElement z(s2, {1, 0});
  REQUIRE_THROWS_AS(x + z, domain_error);
  REQUIRE_THROWS_AS(multiply(x, z), domain_error);
}

TEST_CASE("table of marks of Sym(3)") {
  PermGroup s3 = symmetric_group(3);
  auto M = mark_table(s3);
  std::vector<std::vector<i64>> expected = {
      {6, 3, 2, 1}, {0, 1, 0, 1}, {0, 0, 2, 1}, {0, 0, 0, 1}};
  REQUIRE(M == expected);

  // marks of a combination are the matrix product
  BurnsideElement x(s3, {1, 2, 0, -1});
  auto mk = marks(x);
  for (size_t l = 0; l < 4; ++l) {
    i64 want = 0;
    for (size_t j = 0; j < 4; ++j) want += M[l][j] * x.coeffs()[j];
    REQUIRE(mk[l] == want);
  }
}

TEST_CASE("marks are upper triangular with Weyl orders on the diagonal") {
  for (const char* spec : {"Sym(3)", "Sym(4)", "Alt(5)"}) {
    PermGroup g = group_from_spec(spec);
    const auto& sd = subgroup_data(g);
    auto M = mark_table(g);
    for (size_t l = 0; l < sd.classes.size(); ++l) {
      REQUIRE(M[l][l] == sd.classes[l].weyl_order);
      for (size_t j = 0; j < sd.classes.size(); ++j)
        if (sd.classes[l].rep.order() > sd.classes[j].rep.order()) REQUIRE(M[l][j] == 0);
    }
  }
}

TEST_CASE("marks are multiplicative and injective") {
  PermGroup s4 = symmetric_group(4);
  size_t nc = subgroup_data(s4).classes.size();
  for (size_t i = 0; i < nc; ++i)
    for (size_t j = 0; j < nc; ++j) {
      BurnsideElement x = BurnsideElement::basis(s4, i);
      BurnsideElement y = BurnsideElement::basis(s4, j);
      auto mx = marks(x), my = marks(y), mxy = marks(multiply(x, y));
      for (size_t l = 0; l < nc; ++l) REQUIRE(mxy[l] == mx[l] * my[l]);
    }
}

TEST_CASE("multiplication oracles in small rings") {
  PermGroup s2 = symmetric_group(2);
  BurnsideElement free2 = BurnsideElement::basis(s2, 0);  // [S2/e]
  REQUIRE(multiply(free2, free2).coeffs() == std::vector<i64>{2, 0});

  PermGroup s3 = symmetric_group(3);
  BurnsideElement xc2 = BurnsideElement::basis(s3, 1);
  BurnsideElement xc3 = BurnsideElement::basis(s3, 2);
  REQUIRE(multiply(xc2, xc3).coeffs() == std::vector<i64>{1, 0, 0, 0});
  REQUIRE(multiply(xc2, xc2).coeffs() == std::vector<i64>{1, 1, 0, 0});
  REQUIRE(multiply(xc3, xc3).coeffs() == std::vector<i64>{0, 0, 2, 0});
}

TEST_CASE("multiplication is commutative and associative") {
  PermGroup s4 = symmetric_group(4);
  size_t nc = subgroup_data(s4).classes.size();
  for (size_t i = 0; i < nc; i += 3)
    for (size_t j = 0; j < nc; j += 2) {
      BurnsideElement x = BurnsideElement::basis(s4, i);
      BurnsideElement y = BurnsideElement::basis(s4, j);
      REQUIRE(multiply(x, y) == multiply(y, x));
      BurnsideElement z = BurnsideElement::basis(s4, (i + j) % nc);
      REQUIRE(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
}

TEST_CASE("augmentation is a ring map and scales under transfer") {
  PermGroup s4 = symmetric_group(4);
  BurnsideElement x(s4, {1, 0, -2, 0, 1, 0, 0, 3, 0, 0, 1});
  BurnsideElement y(s4, {0, 2, 0, 0, 0, -1, 0, 0, 1, 0, 2});
  REQUIRE(augmentation(multiply(x, y)) == augmentation(x) * augmentation(y));

  Subgroup v4 = subgroup_from_gens(s4, parse_perms("(1 2)(3 4), (1 3)(2 4)", 4));
  PermGroup vg = as_group(v4);
  for (size_t j = 0; j < subgroup_data(vg).classes.size(); ++j) {
    BurnsideElement b = BurnsideElement::basis(vg, j);
    REQUIRE(augmentation(transfer(s4, v4, b)) == 6 * augmentation(b));
  }
}

TEST_CASE("transfer on basis classes re-identifies subgroups") {
  PermGroup s3 = symmetric_group(3);
  Subgroup c2 = subgroup_from_gens(s3, parse_perms("(1 2)", 3));
  PermGroup c2g = as_group(c2);

  BurnsideElement t2 = t_class(c2g, full_subgroup(c2g), trivial_subgroup(c2g));
  REQUIRE(t2.coeffs() == std::vector<i64>{-1, 2});

  BurnsideElement tr2 = transfer(s3, c2, t2);
  REQUIRE(tr2.coeffs() == std::vector<i64>{-1, 2, 0, 0});
}

TEST_CASE("transfer is transitive") {
  PermGroup s4 = symmetric_group(4);
  Subgroup v4 = subgroup_from_gens(s4, parse_perms("(1 2)(3 4), (1 3)(2 4)", 4));
  PermGroup vg = as_group(v4);
  Subgroup c2_in_v4 = subgroup_from_gens(vg, parse_perms("(1 2)(3 4)", 4));
  Subgroup c2_in_s4 = subgroup_from_gens(s4, parse_perms("(1 2)(3 4)", 4));
  PermGroup c2g = as_group(c2_in_v4);

  for (size_t j = 0; j < subgroup_data(c2g).classes.size(); ++j) {
    BurnsideElement x = BurnsideElement::basis(c2g, j);
    BurnsideElement via = transfer(s4, v4, transfer(vg, c2_in_v4, x));
    BurnsideElement direct = transfer(s4, c2_in_s4, x);
    REQUIRE(via == direct);
  }
}

TEST_CASE("restriction along the identity and along conjugation is trivial") {
  PermGroup s4 = symmetric_group(4);
  for (size_t j = 0; j < subgroup_data(s4).classes.size(); j += 2) {
    BurnsideElement x = BurnsideElement::basis(s4, j);
    REQUIRE(restrict_along(identity_hom(s4), x) == x);
    for (int gi = 1; gi < s4.order(); gi += 5)
      REQUIRE(restrict_along(conjugation_hom(s4, s4.elements()[gi]), x) == x);
  }
}

TEST_CASE("restriction decomposes coset spaces") {
  PermGroup s3 = symmetric_group(3);
  Subgroup a3 = subgroup_from_gens(s3, parse_perms("(1 2 3)", 3));
  PermGroup a3g = as_group(a3);
  GroupHom inc = inclusion_hom(a3g, s3);

  // res_{A3}[S3/C2] = [A3/e] (A3 acts freely on the three cosets)
  BurnsideElement x = BurnsideElement::basis(s3, 1);
  REQUIRE(restrict_along(inc, x).coeffs() == std::vector<i64>{1, 0});

  // res_{A3}[S3/A3] = 2[A3/A3]
  BurnsideElement y = BurnsideElement::basis(s3, 2);
  REQUIRE(restrict_along(inc, y).coeffs() == std::vector<i64>{0, 2});
}

TEST_CASE("restriction is a ring map") {
  PermGroup s4 = symmetric_group(4);
  Subgroup s3sub = subgroup_from_gens(s4, parse_perms("(1 2), (1 2 3)", 4));
  GroupHom inc = inclusion_hom(as_group(s3sub), s4);
  BurnsideElement x(s4, {0, 1, 0, 2, 0, 0, -1, 0, 1, 0, 0});
  BurnsideElement y(s4, {1, 0, 1, 0, 0, 2, 0, -2, 0, 1, 0});
  REQUIRE(restrict_along(inc, multiply(x, y)) ==
          multiply(restrict_along(inc, x), restrict_along(inc, y)));
  REQUIRE(restrict_along(inc, BurnsideElement::one(s4)) ==
          BurnsideElement::one(as_group(s3sub)));
}

TEST_CASE("double coset expansion matches the direct composite") {
  for (const char* spec : {"Sym(3)", "Sym(4)", "Alt(4)", "Dihedral(4)",
                           "Perm(8; (1 3 2 4)(5 7 6 8), (1 5 2 6)(3 8 4 7))"}) {
    PermGroup g = group_from_spec(spec);
    const auto& sd = subgroup_data(g);
    for (const auto& ck : sd.classes)
      for (const auto& ch : sd.classes) {
        GroupHom inc = inclusion_hom(ck.rep_group, g);
        BurnsideElement direct =
            restrict_along(inc, transfer(g, ch.rep, BurnsideElement::one(ch.rep_group)));
        INFO(spec);
        REQUIRE(direct == res_tr_formula(g, ck.rep, ch.rep));
      }
  }
}

TEST_CASE("transfers commute with inflation") {
  PermGroup s4 = symmetric_group(4);
  PermGroup s3 = symmetric_group(3);
  PermGroup s2 = symmetric_group(2);

  auto check = [](const GroupHom& alpha) {
    const PermGroup& g = alpha.source();
    const PermGroup& q = alpha.target();
    for (const auto& kc : subgroup_data(q).classes) {
      Subgroup k = kc.rep;
      Subgroup l = preimage_subgroup(alpha, k);
      PermGroup kg = as_group(k);
      PermGroup lg = as_group(l);
      // alpha restricted to the preimage
      std::vector<int> m;
      for (const Perm& p : lg.elements()) {
        int qi = alpha.apply_index(g.element_index(p));
        m.push_back(kg.element_index(q.elements()[qi]));
      }
      GroupHom alpha_bar(lg, kg, m);
      for (size_t j = 0; j < subgroup_data(kg).classes.size(); ++j) {
        BurnsideElement y = BurnsideElement::basis(kg, j);
        BurnsideElement lhs = restrict_along(alpha, transfer(q, k, y));
        BurnsideElement rhs = transfer(g, l, restrict_along(alpha_bar, y));
        REQUIRE(lhs == rhs);
      }
    }
  };

  check(parity_hom(s3, s2));
  check(parity_hom(s4, s2));
  check(pairings_hom(s4, s3));
}

TEST_CASE("restriction along a non-injective non-surjective composite") {
  // C4 -> C2 -> S3: factor the unique surjection through the inclusion.
  PermGroup c4 = cyclic_group(4);
  PermGroup s3 = symmetric_group(3);
  Subgroup c2 = subgroup_from_gens(s3, parse_perms("(1 2)", 3));
  PermGroup c2g = as_group(c2);
  std::vector<int> to_c2;
  for (const Perm& p : c4.elements()) to_c2.push_back(p.order() == 4 ? 1 : 0);
  GroupHom f(c4, c2g, to_c2);
  GroupHom g = inclusion_hom(c2g, s3);
  GroupHom gf = compose_homs(g, f);
  for (size_t j = 0; j < 4; ++j) {
    BurnsideElement x = BurnsideElement::basis(s3, j);
    REQUIRE(restrict_along(gf, x) == restrict_along(f, restrict_along(g, x)));
  }
}
