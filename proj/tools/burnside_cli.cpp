#include <CLI11.hpp>

#include <burnside/burnside.hpp>

#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace burnside;

namespace {

enum class Fmt { Text, Json, Csv };

struct Options {
  Fmt fmt = Fmt::Text;
  unsigned long long seed = 0;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string join_i64(const std::vector<i64>& v, const std::string& sep) {
  std::vector<std::string> parts;
  for (i64 x : v) parts.push_back(std::to_string(x));
  return join(parts, sep);
}

void emit_json(const json& j) { std::cout << j.dump() << "\n"; }

// Subgroup selector: "classN" picks the N-th entry of the deterministic
// class list; "gens:(1 2),(3 4)" builds the subgroup those elements generate.
Subgroup select_subgroup(const PermGroup& G, const std::string& sel) {
  if (sel.rfind("class", 0) == 0) {
    const std::string num = sel.substr(5);
    if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad subgroup selector '" + sel + "'");
    size_t idx = static_cast<size_t>(std::stoull(num));
    const auto& classes = subgroup_data(G).classes;
    if (idx >= classes.size())
      throw validity_error("class index " + num + " out of range (group has " +
                           std::to_string(classes.size()) + " classes)");
    return classes[idx].rep;
  }
  if (sel.rfind("gens:", 0) == 0)
    return subgroup_from_gens(G, parse_perms(sel.substr(5), G.degree()));
  throw parse_error("bad subgroup selector '" + sel + "' (want classN or gens:...)");
}

BurnsideElement element_from_json(const PermGroup& G, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw parse_error(std::string("bad --elem vector: ") + e.what());
  }
  if (!j.is_array()) throw validity_error("--elem must be a JSON array of integers");
  std::vector<i64> coeffs;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw validity_error("--elem must be a JSON array of integers");
    coeffs.push_back(v.get<i64>());
  }
  return BurnsideElement(G, coeffs);  // validates the length
}

// ---------------- subgroups ----------------

void run_subgroups(const Options& opt, const std::string& spec) {
  PermGroup G = group_from_spec(spec);
  const auto& sd = subgroup_data(G);
  if (opt.fmt == Fmt::Json) {
    json doc{{"group", G.spec()},
             {"degree", G.degree()},
             {"order", G.order()},
             {"classes", json_of_classes(G)},
             {"total_subgroups", sd.total_subgroups}};
    emit_json(doc);
    return;
  }
  if (opt.fmt == Fmt::Csv) {
    std::cout << "class,order,index,class_size,normalizer_order,weyl_order,generators\n";
    for (size_t i = 0; i < sd.classes.size(); ++i) {
      const auto& c = sd.classes[i];
      std::cout << i << "," << c.rep.order() << "," << c.index_in_parent << "," << c.class_size << ","
                << c.normalizer_order << "," << c.weyl_order << ","
                << join(generator_strings(G, c.rep.gens), " ") << "\n";
    }
    return;
  }
  std::cout << "group " << G.spec() << " order " << G.order() << " degree " << G.degree() << "\n";
  std::cout << "classes " << sd.classes.size() << " subgroups " << sd.total_subgroups << "\n";
  for (size_t i = 0; i < sd.classes.size(); ++i) {
    const auto& c = sd.classes[i];
    std::cout << "class " << i << ": order " << c.rep.order() << " index " << c.index_in_parent
              << " class_size " << c.class_size << " normalizer " << c.normalizer_order << " weyl "
              << c.weyl_order << " gens " << join(generator_strings(G, c.rep.gens), " ") << "\n";
  }
}

// ---------------- burnside ----------------

void run_burnside(const Options& opt, const std::string& spec) {
  PermGroup G = group_from_spec(spec);
  const auto& sd = subgroup_data(G);
  auto M = mark_table(G);
  if (opt.fmt == Fmt::Json) {
    json doc{{"group", G.spec()},
             {"order", G.order()},
             {"classes", json_of_classes(G)},
             {"marks", M}};
    emit_json(doc);
    return;
  }
  if (opt.fmt == Fmt::Csv) {
    std::cout << "class,order";
    for (size_t j = 0; j < sd.classes.size(); ++j) std::cout << ",m" << j;
    std::cout << "\n";
    for (size_t l = 0; l < sd.classes.size(); ++l)
      std::cout << l << "," << sd.classes[l].rep.order() << "," << join_i64(M[l], ",") << "\n";
    return;
  }
  std::cout << "group " << G.spec() << " order " << G.order() << " classes " << sd.classes.size()
            << "\n";
  std::cout << "basis [G/H] over subgroup classes; marks rows are fixed points under class l\n";
  for (size_t l = 0; l < sd.classes.size(); ++l)
    std::cout << "marks " << l << " (order " << sd.classes[l].rep.order()
              << "): " << join_i64(M[l], " ") << "\n";
}

// ---------------- doublecoset-check ----------------

void run_doublecoset(const Options& opt, const std::string& spec, const std::string& selK,
                     const std::string& selH) {
  PermGroup G = group_from_spec(spec);
  const auto& sd = subgroup_data(G);
  std::vector<std::pair<int, int>> pairs;
  if (!selK.empty() || !selH.empty()) {
    if (selK.empty() || selH.empty())
      throw validity_error("--subK and --subH must be given together");
    Subgroup K = select_subgroup(G, selK);
    Subgroup H = select_subgroup(G, selH);
    pairs.emplace_back(class_index(G, K), class_index(G, H));
  } else {
    for (size_t i = 0; i < sd.classes.size(); ++i)
      for (size_t j = 0; j < sd.classes.size(); ++j)
        pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }

  bool all = true;
  json rows = json::array();
  std::ostringstream text;
  for (auto [ci, cj] : pairs) {
    const Subgroup& K = sd.classes[ci].rep;
    const Subgroup& H = sd.classes[cj].rep;
    GroupHom inc = inclusion_hom(sd.classes[ci].rep_group, G);
    BurnsideElement direct =
        restrict_along(inc, transfer(G, H, BurnsideElement::one(sd.classes[cj].rep_group)));
    BurnsideElement formula = res_tr_formula(G, K, H);
    size_t ncosets = double_cosets(G, K, H).size();
    bool ok = direct == formula;
    all = all && ok;
    rows.push_back(json{{"K", ci}, {"H", cj}, {"double_cosets", ncosets}, {"agree", ok}});
    text << "K class " << ci << " H class " << cj << ": double_cosets " << ncosets << " "
         << (ok ? "agree" : "DISAGREE") << "\n";
  }
  if (opt.fmt == Fmt::Json) {
    emit_json(json{{"group", G.spec()}, {"pairs", rows}, {"pass", all}});
  } else if (opt.fmt == Fmt::Csv) {
    std::cout << "K,H,double_cosets,agree\n";
    for (const auto& r : rows)
      std::cout << r["K"] << "," << r["H"] << "," << r["double_cosets"] << ","
                << (r["agree"].get<bool>() ? "true" : "false") << "\n";
  } else {
    std::cout << "group " << G.spec() << "\n" << text.str();
    std::cout << (all ? "pass" : "FAIL") << "\n";
  }
  if (!all) throw internal_error("double coset formula mismatch");
}

// ---------------- filtration ----------------

void run_filtration(const Options& opt, const std::string& spec, i64 max_n) {
  PermGroup G = group_from_spec(spec);
  std::optional<i64> nmax;
  if (max_n > 0) nmax = max_n;
  FiltrationTable t = filtration_table(G, nmax);
  if (opt.fmt == Fmt::Json) {
    emit_json(json_of(t));
    return;
  }
  if (opt.fmt == Fmt::Csv) {
    std::cout << "n,ideal_rank,quotient_rank,torsion\n";
    for (const auto& s : t.stages)
      std::cout << s.n << "," << s.ideal_rank << "," << s.quotient.rank << ","
                << join_i64(s.quotient.torsion, " ") << "\n";
    return;
  }
  std::cout << "group " << G.spec() << " classes " << subgroup_data(G).classes.size()
            << " stabilization " << t.stabilization << "\n";
  for (const auto& s : t.stages) {
    std::cout << "n " << s.n << ": ideal_rank " << s.ideal_rank << " quotient rank "
              << s.quotient.rank;
    if (!s.quotient.torsion.empty()) std::cout << " torsion " << join_i64(s.quotient.torsion, " ");
    std::cout << "\n";
  }
}

// ---------------- sp ----------------

void run_sp(const Options& opt, const std::string& spec, const std::string& stage) {
  PermGroup G = group_from_spec(spec);
  std::optional<i64> n;
  if (stage != "inf") {
    if (stage.empty() || stage.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("stage must be a positive integer or 'inf'");
    n = static_cast<i64>(std::stoll(stage));
    if (*n < 1) throw validity_error("stage must be >= 1");
  }
  AbelianInvariants inv = sp_invariants(G, n);
  if (opt.fmt == Fmt::Json) {
    emit_json(json_of(inv));
  } else if (opt.fmt == Fmt::Csv) {
    std::cout << "rank,torsion\n" << inv.rank << "," << join_i64(inv.torsion, " ") << "\n";
  } else {
    std::cout << "rank " << inv.rank;
    if (!inv.torsion.empty()) std::cout << " torsion " << join_i64(inv.torsion, " ");
    std::cout << "\n";
  }
}

// ---------------- member / saturation ----------------

void run_member(const Options& opt, const std::string& spec, i64 n, const std::string& elem,
                bool saturation) {
  PermGroup G = group_from_spec(spec);
  BurnsideElement x = element_from_json(G, elem);
  LatticeBasis L = ideal_lattice(G, n);
  bool ans = saturation ? saturation_contains(L, x.coeffs()) : lattice_contains(L, x.coeffs());
  if (opt.fmt == Fmt::Json) {
    emit_json(json{{"group", G.spec()}, {"n", n}, {"coeffs", x.coeffs()}, {"contains", ans}});
  } else if (opt.fmt == Fmt::Csv) {
    std::cout << "contains\n" << (ans ? "true" : "false") << "\n";
  } else {
    std::cout << (ans ? "true" : "false") << "\n";
  }
}

// ---------------- cat-basis ----------------

void run_cat_basis(const Options& opt, const std::string& specG, const std::string& specK) {
  PermGroup G = group_from_spec(specG);
  PermGroup K = group_from_spec(specK);
  auto basis = category_basis(G, K);
  if (opt.fmt == Fmt::Json) {
    json arr = json::array();
    for (const auto& p : basis) arr.push_back(json_of(p));
    emit_json(json{{"source", G.spec()},
                   {"target", K.spec()},
                   {"rank", static_cast<i64>(basis.size())},
                   {"pairs", arr}});
    return;
  }
  if (opt.fmt == Fmt::Csv) {
    std::cout << "pair,L_order,L_generators,alpha_images\n";
    for (size_t i = 0; i < basis.size(); ++i) {
      json p = json_of(basis[i]);
      std::vector<std::string> lg = p["L_generators"].get<std::vector<std::string>>();
      std::vector<std::string> ai = p["alpha_images"].get<std::vector<std::string>>();
      std::cout << i << "," << p["L_order"] << "," << join(lg, " ") << "," << join(ai, " ") << "\n";
    }
    return;
  }
  std::cout << "A(" << G.spec() << ", " << K.spec() << ") rank " << basis.size() << "\n";
  for (size_t i = 0; i < basis.size(); ++i) {
    json p = json_of(basis[i]);
    std::vector<std::string> lg = p["L_generators"].get<std::vector<std::string>>();
    std::vector<std::string> ai = p["alpha_images"].get<std::vector<std::string>>();
    std::cout << "pair " << i << ": L_order " << p["L_order"].get<i64>() << " L_gens "
              << join(lg, " ") << " alpha " << join(ai, " ") << "\n";
  }
}

// ---------------- compose-check ----------------

void run_compose_check(const Options& opt, const std::string& specG, const std::string& specK,
                       const std::string& specL) {
  PermGroup G = group_from_spec(specG);
  PermGroup K = group_from_spec(specK);
  PermGroup L = group_from_spec(specL);

  auto bGK = category_basis(G, K);  // morphisms G -> K
  auto bKL = category_basis(K, L);  // morphisms K -> L
  auto bLG = category_basis(L, G);  // morphisms L -> G

  auto as_morphism = [](const BasisPair& p) {
    CatMorphism m(p.G, p.K);
    m.add(p, 1);
    return m;
  };

  i64 unit_checks = 0, failures = 0;
  CatMorphism idG = identity_morphism(G), idK = identity_morphism(K), idL = identity_morphism(L);
  for (const auto& p : bGK) {
    CatMorphism u = as_morphism(p);
    if (!(compose(idK, u) == u)) ++failures;
    if (!(compose(u, idG) == u)) ++failures;
    unit_checks += 2;
  }
  for (const auto& p : bKL) {
    CatMorphism v = as_morphism(p);
    if (!(compose(idL, v) == v)) ++failures;
    if (!(compose(v, idK) == v)) ++failures;
    unit_checks += 2;
  }
  for (const auto& p : bLG) {
    CatMorphism w = as_morphism(p);
    if (!(compose(idG, w) == w)) ++failures;
    if (!(compose(w, idL) == w)) ++failures;
    unit_checks += 2;
  }

  i64 assoc_checks = 0;
  for (const auto& pu : bGK)
    for (const auto& pv : bKL)
      for (const auto& pw : bLG) {
        CatMorphism u = as_morphism(pu), v = as_morphism(pv), w = as_morphism(pw);
        if (!(compose(compose(w, v), u) == compose(w, compose(v, u)))) ++failures;
        ++assoc_checks;
      }

  // Seeded functoriality sampling: evaluate(f.g, x) == evaluate(f, evaluate(g, x)).
  std::mt19937_64 rng(opt.seed);
  const i64 samples = 100;
  size_t ncG = subgroup_data(G).classes.size();
  for (i64 s = 0; s < samples; ++s) {
    const BasisPair& pg = bGK[rng() % bGK.size()];
    const BasisPair& pf = bKL[rng() % bKL.size()];
    std::vector<i64> cs(ncG);
    for (auto& c : cs) c = static_cast<i64>(rng() % 7) - 3;
    BurnsideElement x(G, cs);
    CatMorphism f = as_morphism(pf), g = as_morphism(pg);
    if (!(evaluate(compose(f, g), x) == evaluate(f, evaluate(g, x)))) ++failures;
  }

  bool pass = failures == 0;
  if (opt.fmt == Fmt::Json) {
    emit_json(json{{"source", G.spec()},
                   {"middle", K.spec()},
                   {"target", L.spec()},
                   {"unit_checks", unit_checks},
                   {"associativity_checks", assoc_checks},
                   {"functoriality_samples", samples},
                   {"failures", failures},
                   {"pass", pass}});
  } else if (opt.fmt == Fmt::Csv) {
    std::cout << "unit_checks,associativity_checks,functoriality_samples,failures,pass\n"
              << unit_checks << "," << assoc_checks << "," << samples << "," << failures << ","
              << (pass ? "true" : "false") << "\n";
  } else {
    std::cout << "hom groups A(" << G.spec() << "," << K.spec() << ") rank " << bGK.size() << ", A("
              << K.spec() << "," << L.spec() << ") rank " << bKL.size() << ", A(" << L.spec() << ","
              << G.spec() << ") rank " << bLG.size() << "\n";
    std::cout << "unit checks " << unit_checks << "\n";
    std::cout << "associativity checks " << assoc_checks << "\n";
    std::cout << "functoriality samples " << samples << " (seed " << opt.seed << ")\n";
    std::cout << (pass ? "pass" : "FAIL") << "\n";
  }
  if (!pass) throw internal_error("category law violation");
}

// ---------------- reproduce ----------------

struct Reporter {
  json checks = json::array();
  bool all = true;
  std::ostringstream text;

  void item(const std::string& name, bool ok) {
    checks.push_back(json{{"name", name}, {"pass", ok}});
    all = all && ok;
    text << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
  }
};

bool stage_is(const FiltrationTable& t, size_t i, i64 rank, std::vector<i64> torsion) {
  return i < t.stages.size() && t.stages[i].quotient.rank == rank &&
         t.stages[i].quotient.torsion == torsion;
}

void reproduce_s2(Reporter& rep) {
  PermGroup s2 = symmetric_group(2);
  rep.item("Sym(2): 2 subgroup classes", subgroup_data(s2).classes.size() == 2);
  rep.item("Sym(2): stage 1 quotient free of rank 2",
           sp_invariants(s2, 1) == AbelianInvariants{2, {}});
  bool later = sp_invariants(s2, 2) == AbelianInvariants{1, {}} &&
               sp_invariants(s2, 5) == AbelianInvariants{1, {}} &&
               sp_invariants(s2, std::nullopt) == AbelianInvariants{1, {}};
  rep.item("Sym(2): stages n>=2 quotient free of rank 1", later);
  rep.item("Sym(2): filtration stabilizes at 2", stabilization_index(s2) == 2);
}

void reproduce_s3(Reporter& rep) {
  PermGroup s3 = symmetric_group(3);
  PermGroup s2 = symmetric_group(2);
  FiltrationTable t = filtration_table(s3, std::nullopt);
  rep.item("Sym(3): quotient ranks (4, 2, 1), torsion-free",
           stage_is(t, 0, 4, {}) && stage_is(t, 1, 2, {}) && stage_is(t, 2, 1, {}));
  rep.item("Sym(3): filtration stabilizes at 3", t.stabilization == 3);

  // Restriction along the parity projection sends t_2 to the alternating t-class.
  std::vector<int> parity_map;
  for (const Perm& p : s3.elements()) {
    int inv = 0;
    for (int a = 0; a < 3; ++a)
      for (int b = a + 1; b < 3; ++b)
        if (p(a) > p(b)) ++inv;
    parity_map.push_back(inv % 2);
  }
  GroupHom proj(s3, s2, parity_map);
  BurnsideElement t2 = t_class(s2, full_subgroup(s2), trivial_subgroup(s2));
  Subgroup a3 = subgroup_from_gens(s3, parse_perms("(1 2 3)", 3));
  rep.item("Sym(3): parity restriction of t_2 is the A_3 class",
           restrict_along(proj, t2) == t_class(s3, full_subgroup(s3), a3));

  // Transfer of t_2 from the order-2 subgroup.
  Subgroup c2 = subgroup_from_gens(s3, parse_perms("(1 2)", 3));
  PermGroup c2g = as_group(c2);
  BurnsideElement t2sub = t_class(c2g, full_subgroup(c2g), trivial_subgroup(c2g));
  BurnsideElement expected = t_class(s3, full_subgroup(s3), trivial_subgroup(s3));
  expected -= 2 * t_class(s3, full_subgroup(s3), c2);
  rep.item("Sym(3): transfer of t_2 expands as t_e - 2 t_{order 2}",
           transfer(s3, c2, t2sub) == expected);
}

void reproduce_s4(Reporter& rep) {
  PermGroup s4 = symmetric_group(4);
  rep.item("Sym(4): 11 subgroup classes", subgroup_data(s4).classes.size() == 11);
  FiltrationTable t = filtration_table(s4, 4);
  rep.item("Sym(4): stage quotients (11; 3; 1 + Z/3; 1)",
           stage_is(t, 0, 11, {}) && stage_is(t, 1, 3, {}) && stage_is(t, 2, 1, {3}) &&
               stage_is(t, 3, 1, {}));
  rep.item("Sym(4): filtration stabilizes at 4", t.stabilization == 4);
  LatticeBasis I3 = ideal_lattice(s4, 3);
  LatticeBasis I4 = ideal_lattice(s4, 4);
  auto idx = sublattice_index(I3, I4);
  rep.item("Sym(4): index of the third lattice in the fourth is 3", idx && *idx == 3);
  Subgroup sub3 = subgroup_from_gens(s4, parse_perms("(1 2), (1 2 3)", 4));
  BurnsideElement t4 = t_class(s4, full_subgroup(s4), sub3);
  BurnsideElement t4x3 = 3 * t4;
  rep.item("Sym(4): 3 t_4 lies in the third lattice", lattice_contains(I3, t4x3.coeffs()));
  rep.item("Sym(4): t_4 itself does not", !lattice_contains(I3, t4.coeffs()));
}

void reproduce_a5(Reporter& rep) {
  PermGroup a5 = alternating_group(5);
  rep.item("Alt(5): 9 subgroup classes", subgroup_data(a5).classes.size() == 9);
  FiltrationTable t = filtration_table(a5, 6);
  rep.item("Alt(5): stage quotients (9; 5; 3 + Z/3; 3; 1 + Z/5; 1)",
           stage_is(t, 0, 9, {}) && stage_is(t, 1, 5, {}) && stage_is(t, 2, 3, {3}) &&
               stage_is(t, 3, 3, {}) && stage_is(t, 4, 1, {5}) && stage_is(t, 5, 1, {}));
  LatticeBasis I5 = ideal_lattice(a5, 5);
  auto idx = sublattice_index(I5, augmentation_ideal(a5));
  rep.item("Alt(5): index of the fifth lattice in the full ideal is 5", idx && *idx == 5);
  Subgroup d5 = subgroup_from_gens(a5, parse_perms("(1 2 3 4 5), (2 5)(3 4)", 5));
  BurnsideElement td5 = t_class(a5, full_subgroup(a5), d5);
  BurnsideElement td5x5 = 5 * td5;
  rep.item("Alt(5): 5 t_{D5} lies in the fifth lattice", lattice_contains(I5, td5x5.coeffs()));
  rep.item("Alt(5): t_{D5} itself does not", !lattice_contains(I5, td5.coeffs()));
  Subgroup a4 = subgroup_from_gens(a5, parse_perms("(1 2 3), (1 2)(3 4)", 5));
  BurnsideElement ta4 = t_class(a5, full_subgroup(a5), a4);
  rep.item("Alt(5): t_{A4} avoids even the saturation of the fourth lattice",
           !saturation_contains(ideal_lattice(a5, 4), ta4.coeffs()));
}

void reproduce_s5(Reporter& rep) {
  PermGroup s5 = symmetric_group(5);
  PermGroup a5 = alternating_group(5);
  Subgroup B = subgroup_from_gens(s5, parse_perms("(1 2 3 4 5), (2 3 5 4)", 5));
  rep.item("Sym(5): the chosen order-20 subgroup has order 20", B.order() == 20);
  BurnsideElement tB = t_class(s5, full_subgroup(s5), B);
  std::vector<int> emb;
  for (const Perm& p : a5.elements()) emb.push_back(s5.element_index(p));
  GroupHom inc(a5, s5, emb);
  Subgroup d5 = subgroup_from_gens(a5, parse_perms("(1 2 3 4 5), (2 5)(3 4)", 5));
  rep.item("Sym(5): restriction of t_B to Alt(5) is t_{D5}",
           restrict_along(inc, tB) == t_class(a5, full_subgroup(a5), d5));
  rep.item("Sym(5): t_B lies outside the fifth lattice",
           !lattice_contains(ideal_lattice(s5, 5), tB.coeffs()));
  rep.item("Sym(5): the sixth lattice already equals the full ideal",
           ideal_lattice(s5, 6) == augmentation_ideal(s5));
  rep.item("Sym(5): filtration stabilizes at 6", stabilization_index(s5) == 6);
}

void reproduce_pgroups(Reporter& rep) {
  const std::vector<std::pair<std::string, i64>> cases = {
      {"Cyclic(4)", 2},
      {"Cyclic(8)", 2},
      {"Dihedral(4)", 2},
      {"Perm(8; (1 3 2 4)(5 7 6 8), (1 5 2 6)(3 8 4 7))", 2},
      {"Perm(4; (1 2), (3 4))", 2},
      {"Cyclic(9)", 3},
      {"Perm(6; (1 2 3), (4 5 6))", 3},
  };
  for (const auto& [spec, p] : cases) {
    PermGroup G = group_from_spec(spec);
    bool zero_below = true;
    for (i64 n = 1; n < p; ++n) zero_below = zero_below && ideal_lattice(G, n).rank() == 0;
    bool full_at_p = ideal_lattice(G, p) == augmentation_ideal(G);
    bool free_rank1 = sp_invariants(G, p) == AbelianInvariants{1, {}} &&
                      sp_invariants(G, std::nullopt) == AbelianInvariants{1, {}};
    rep.item(spec + ": lattice vanishes below p = " + std::to_string(p), zero_below);
    rep.item(spec + ": lattice at p equals the full ideal", full_at_p);
    rep.item(spec + ": quotient free of rank 1 from p onward", free_rank1);
  }
}

void run_reproduce(const Options& opt, const std::string& id) {
  Reporter rep;
  if (id == "s2")
    reproduce_s2(rep);
  else if (id == "s3")
    reproduce_s3(rep);
  else if (id == "s4")
    reproduce_s4(rep);
  else if (id == "a5")
    reproduce_a5(rep);
  else if (id == "s5")
    reproduce_s5(rep);
  else if (id == "pgroups")
    reproduce_pgroups(rep);
  else
    throw parse_error("unknown example id '" + id + "' (want s2|s3|s4|a5|s5|pgroups)");

  if (opt.fmt == Fmt::Json) {
    emit_json(json{{"id", id}, {"checks", rep.checks}, {"pass", rep.all}});
  } else if (opt.fmt == Fmt::Csv) {
    std::cout << "name,pass\n";
    for (const auto& c : rep.checks)
      std::cout << c["name"].get<std::string>() << "," << (c["pass"].get<bool>() ? "true" : "false")
                << "\n";
  } else {
    std::cout << rep.text.str();
    std::cout << id << ": " << (rep.all ? "PASS" : "FAIL") << "\n";
  }
  if (!rep.all) throw internal_error("reproduction check failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Burnside rings, symmetric-product filtrations, and the biset category"};
  app.require_subcommand(1);
  app.fallthrough();

  bool json_flag = false, csv_flag = false;
  unsigned long long seed = 0;
  long long bound = 0;
  auto* jf = app.add_flag("--json", json_flag, "emit JSON");
  auto* cf = app.add_flag("--csv", csv_flag, "emit CSV");
  jf->excludes(cf);
  cf->excludes(jf);
  app.add_option("--seed", seed, "seed for randomized property sampling");
  app.add_option("--bound", bound, "group-order resource bound (default 2000)");

  std::string spec, spec2, spec3, stage, elem, sel_k, sel_h, example_id;
  long long n_arg = 0, max_n = 0;

  auto* sg = app.add_subcommand("subgroups", "subgroup classes of a group");
  sg->add_option("spec", spec, "group spec")->required();

  auto* br = app.add_subcommand("burnside", "Burnside ring basis and table of marks");
  br->add_option("spec", spec, "group spec")->required();

  auto* dc = app.add_subcommand("doublecoset-check",
                                "verify the double coset expansion of res after transfer");
  dc->add_option("spec", spec, "group spec")->required();
  dc->add_option("--subK", sel_k, "subgroup selector classN or gens:...");
  dc->add_option("--subH", sel_h, "subgroup selector classN or gens:...");

  auto* fl = app.add_subcommand("filtration", "lattice filtration of the augmentation ideal");
  fl->add_option("spec", spec, "group spec")->required();
  fl->add_option("--max-n", max_n, "largest stage (default group order)");

  auto* sp = app.add_subcommand("sp", "abelian invariants of a filtration quotient");
  sp->add_option("spec", spec, "group spec")->required();
  sp->add_option("stage", stage, "stage number or 'inf'")->required();

  auto* mb = app.add_subcommand("member", "ideal lattice membership of an element");
  mb->add_option("spec", spec, "group spec")->required();
  mb->add_option("n", n_arg, "stage")->required();
  mb->add_option("--elem", elem, "JSON coefficient vector")->required();

  auto* st = app.add_subcommand("saturation", "rational-span membership of an element");
  st->add_option("spec", spec, "group spec")->required();
  st->add_option("n", n_arg, "stage")->required();
  st->add_option("--elem", elem, "JSON coefficient vector")->required();

  auto* cb = app.add_subcommand("cat-basis", "canonical basis of a hom group of the category");
  cb->add_option("specG", spec, "source group spec")->required();
  cb->add_option("specK", spec2, "target group spec")->required();

  auto* cc = app.add_subcommand("compose-check", "category laws on three objects");
  cc->add_option("specG", spec, "first group spec")->required();
  cc->add_option("specK", spec2, "second group spec")->required();
  cc->add_option("specL", spec3, "third group spec")->required();

  auto* rp = app.add_subcommand("reproduce", "recompute a worked example and report");
  rp->add_option("id", example_id, "one of s2 s3 s4 a5 s5 pgroups")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  Options opt;
  if (json_flag) opt.fmt = Fmt::Json;
  if (csv_flag) opt.fmt = Fmt::Csv;
  opt.seed = seed;

  try {
    if (bound != 0) {
      if (bound < 1) throw validity_error("--bound must be positive");
      config::order_bound.store(bound);
    }
    if (sg->parsed()) run_subgroups(opt, spec);
    if (br->parsed()) run_burnside(opt, spec);
    if (dc->parsed()) run_doublecoset(opt, spec, sel_k, sel_h);
    if (fl->parsed()) run_filtration(opt, spec, max_n);
    if (sp->parsed()) run_sp(opt, spec, stage);
    if (mb->parsed()) run_member(opt, spec, n_arg, elem, false);
    if (st->parsed()) run_member(opt, spec, n_arg, elem, true);
    if (cb->parsed()) run_cat_basis(opt, spec, spec2);
    if (cc->parsed()) run_compose_check(opt, spec, spec2, spec3);
    if (rp->parsed()) run_reproduce(opt, example_id);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const validity_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
