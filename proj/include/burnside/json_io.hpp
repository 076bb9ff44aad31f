#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "burnside/biset.hpp"
#include "burnside/burnside_ring.hpp"
#include "burnside/filtration.hpp"
#include "burnside/group.hpp"
#include "burnside/lattice.hpp"

namespace burnside {

using json = nlohmann::ordered_json;

inline json json_of(const PermGroup& G) {
  return json{{"spec", G.spec()}, {"degree", G.degree()}, {"order", G.order()}};
}

inline json json_of(const AbelianInvariants& inv) {
  return json{{"rank", inv.rank}, {"torsion", inv.torsion}};
}

inline json json_of(const LatticeBasis& L) {
  return json{{"ambient_rank", L.ambient_rank}, {"rank", L.rank()}, {"rows", L.rows}};
}

inline std::vector<std::string> generator_strings(const PermGroup& G, const std::vector<Perm>& gens) {
  std::vector<std::string> out;
  for (const Perm& g : gens) out.push_back(g.cycle_string());
  if (out.empty()) out.push_back(Perm(G.degree()).cycle_string());
  return out;
}

inline json json_of_class(const PermGroup& G, const SubgroupClass& c) {
  return json{{"order", c.rep.order()},
              {"index", c.index_in_parent},
              {"class_size", c.class_size},
              {"normalizer_order", c.normalizer_order},
              {"weyl_order", c.weyl_order},
              {"generators", generator_strings(G, c.rep.gens)}};
}

inline json json_of_classes(const PermGroup& G) {
  const auto& sd = subgroup_data(G);
  json arr = json::array();
  for (const SubgroupClass& c : sd.classes) arr.push_back(json_of_class(G, c));
  return arr;
}

inline json json_of(const BurnsideElement& x) {
  return json{{"group", x.group().spec()}, {"coeffs", x.coeffs()}};
}

inline json json_of(const FiltrationTable& t) {
  json stages = json::array();
  for (const FiltrationStage& s : t.stages)
    stages.push_back(json{{"n", s.n}, {"ideal_rank", s.ideal_rank}, {"quotient", json_of(s.quotient)}});
  return json{{"group", t.group.spec()},
              {"classes", static_cast<i64>(subgroup_data(t.group).classes.size())},
              {"stages", stages},
              {"stabilization", t.stabilization}};
}

inline json json_of(const BasisPair& p) {
  Subgroup L = subgroup_from_elements(p.K, p.L_elems);
  std::vector<std::string> alpha_imgs;
  for (const Perm& gp : L.gens) {
    int ki = p.K.element_index(gp);
    size_t pos = static_cast<size_t>(
        std::lower_bound(p.L_elems.begin(), p.L_elems.end(), ki) - p.L_elems.begin());
    alpha_imgs.push_back(p.G.elements()[p.alpha[pos]].cycle_string());
  }
  if (L.gens.empty()) alpha_imgs.push_back(Perm(p.G.degree()).cycle_string());
  return json{{"L_order", L.order()},
              {"L_generators", generator_strings(p.K, L.gens)},
              {"alpha_images", alpha_imgs}};
}

inline json json_of(const CatMorphism& f) {
  json terms = json::array();
  for (const auto& [k, c] : f.terms()) {
    json t = json_of(f.pair_of(k));
    t["coeff"] = c;
    terms.push_back(t);
  }
  return json{{"source", f.source().spec()}, {"target", f.target().spec()}, {"terms", terms}};
}

}  // namespace burnside
