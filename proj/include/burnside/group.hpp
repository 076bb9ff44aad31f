#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/exact_int.hpp"
#include "burnside/perm.hpp"

namespace burnside {

class PermGroup;
struct Subgroup;
struct SubgroupClass;
struct SubgroupData;

namespace config {
// Order bound guarding full subgroup-lattice enumeration (CLI --bound).
inline std::atomic<i64> order_bound{2000};
// Order bound for brute-force homomorphism enumeration.
inline std::atomic<i64> hom_order_bound{120};
}  // namespace config

namespace detail {

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Closure of a generating set under composition; returns the sorted element
// list.  Works for any finite set of same-degree permutations; inverses are
// reached as powers.
inline std::vector<Perm> generate_elements(int degree, const std::vector<Perm>& gens) {
  const i64 cap = config::order_bound.load();
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const Perm& s : gens) {
      Perm y = x * s;
      if (seen.insert(y).second) {
        if (static_cast<i64>(seen.size()) > cap)
          throw resource_error("group order exceeds bound " + std::to_string(cap));
        queue.push_back(y);
      }
    }
  }
  std::vector<Perm> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

struct GroupData {
  int degree = 0;
  std::vector<Perm> gens;
  std::vector<Perm> elements;  // sorted; element 0 is always the identity
  std::string spec;

  // Lazily built caches; GroupData itself is immutable after construction.
  mutable std::once_flag subs_once;
  mutable std::unique_ptr<const SubgroupData> subs;
  mutable std::once_flag ring_once;
  mutable std::shared_ptr<const void> ring_cache;

  GroupData() = default;
  GroupData(const GroupData&) = delete;
  GroupData& operator=(const GroupData&) = delete;
};

inline std::string synth_perm_spec(int degree, const std::vector<Perm>& gens) {
  std::string s = "Perm(" + std::to_string(degree) + ";";
  if (gens.empty()) {
    s += " (1)";
  } else {
    for (size_t i = 0; i < gens.size(); ++i) {
      s += (i == 0 ? " " : ", ");
      s += gens[i].cycle_string();
    }
  }
  s += ")";
  return s;
}

}  // namespace detail

// Finite permutation group, held as an immutable shared value.  Copies are
// cheap handles onto the same element table, so caches attached to the group
// are shared by every copy.
class PermGroup {
public:
  PermGroup() = default;

  static PermGroup from_generators(int degree, std::vector<Perm> gens, std::string spec = "") {
    if (degree < 1) throw validity_error("group degree must be at least 1");
    for (const Perm& g : gens)
      if (g.degree() != degree) throw validity_error("generator degree mismatch");
    auto d = std::make_shared<detail::GroupData>();
    d->degree = degree;
    d->elements = detail::generate_elements(degree, gens);
    d->gens = std::move(gens);
    d->spec = spec.empty() ? detail::synth_perm_spec(degree, d->gens) : std::move(spec);
    PermGroup g;
    g.d_ = std::move(d);
    return g;
  }

  // Element list supplied by the caller; it must equal the closure of gens.
  static PermGroup from_elements(int degree, std::vector<Perm> gens, std::vector<Perm> sorted_elements,
                                 std::string spec = "") {
    PermGroup g = from_generators(degree, std::move(gens), std::move(spec));
    if (g.elements() != sorted_elements)
      throw internal_error("from_elements: supplied set is not the closure of the generators");
    return g;
  }

  bool valid() const { return static_cast<bool>(d_); }
  int degree() const { return d_->degree; }
  i64 order() const { return static_cast<i64>(d_->elements.size()); }
  const std::vector<Perm>& elements() const { return d_->elements; }
  const std::vector<Perm>& generators() const { return d_->gens; }
  const std::string& spec() const { return d_->spec; }

  // Index of p in the sorted element list, -1 if absent.
  int element_index(const Perm& p) const {
    const auto& es = d_->elements;
    auto it = std::lower_bound(es.begin(), es.end(), p);
    if (it != es.end() && *it == p) return static_cast<int>(it - es.begin());
    return -1;
  }

  int mul(int i, int j) const { return element_index(d_->elements[i] * d_->elements[j]); }
  int inv(int i) const { return element_index(d_->elements[i].inverse()); }
  int identity_index() const { return 0; }

  bool same_data(const PermGroup& o) const { return d_ == o.d_; }

  // Value equality: same underlying permutation set.
  friend bool operator==(const PermGroup& a, const PermGroup& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->degree == b.d_->degree && a.d_->elements == b.d_->elements;
  }

  const detail::GroupData& data() const { return *d_; }

private:
  std::shared_ptr<const detail::GroupData> d_;
};

// Subgroup of a fixed parent group: sorted parent-element indices plus a
// small generating list (empty exactly for the trivial subgroup).
struct Subgroup {
  PermGroup parent;
  std::vector<int> elems;
  std::vector<Perm> gens;

  i64 order() const { return static_cast<i64>(elems.size()); }
  bool contains_index(int i) const { return std::binary_search(elems.begin(), elems.end(), i); }
};

struct SubgroupClass {
  Subgroup rep;         // canonical representative: lex-minimal element-index set in the class
  PermGroup rep_group;  // the representative as a group in its own right
  i64 class_size = 0;
  i64 normalizer_order = 0;
  i64 weyl_order = 0;
  i64 index_in_parent = 0;
};

// Output of the full subgroup-lattice enumeration.  `classes` is the
// canonical ordered basis used by every Burnside-ring coefficient vector:
// sorted by (subgroup order ascending, lex-minimal element key ascending).
struct SubgroupData {
  std::vector<SubgroupClass> classes;
  std::vector<std::vector<int>> subgroups;  // every subgroup, sorted by (size, lex key)
  std::vector<std::vector<Perm>> subgroup_gens;
  std::map<std::vector<int>, int> class_of_key;
  i64 total_subgroups = 0;
};

inline PermGroup as_group(const Subgroup& s) {
  std::vector<Perm> elems;
  elems.reserve(s.elems.size());
  for (int i : s.elems) elems.push_back(s.parent.elements()[i]);
  return PermGroup::from_elements(s.parent.degree(), s.gens, std::move(elems));
}

namespace detail {

inline std::vector<int> sorted_indices_of(const PermGroup& G, const std::vector<Perm>& perms) {
  std::vector<int> idx;
  idx.reserve(perms.size());
  for (const Perm& p : perms) {
    int i = G.element_index(p);
    if (i < 0) throw domain_error("permutation does not belong to the group");
    idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Key of g H g^{-1} given H as a sorted index set.
inline std::vector<int> conjugate_key(const PermGroup& G, const std::vector<int>& elems, const Perm& g,
                                      const Perm& ginv) {
  std::vector<int> out;
  out.reserve(elems.size());
  for (int h : elems) {
    int i = G.element_index(g * G.elements()[h] * ginv);
    if (i < 0) throw internal_error("conjugate left the group");
    out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline const SubgroupData* compute_subgroup_data(const PermGroup& G) {
  auto out = std::make_unique<SubgroupData>();
  const i64 n = G.order();
  const auto& els = G.elements();

  // Breadth-first generator extension over the whole lattice: seed with the
  // trivial subgroup and every cyclic subgroup, then extend each discovered
  // subgroup by one additional element until nothing new appears.
  std::map<std::vector<int>, std::vector<Perm>> found;
  std::deque<const std::vector<int>*> queue;

  auto discover = [&](std::vector<int> key, std::vector<Perm> gens) {
    auto [it, fresh] = found.emplace(std::move(key), std::move(gens));
    if (fresh) queue.push_back(&it->first);
  };

  discover({G.identity_index()}, {});
  for (i64 gi = 1; gi < n; ++gi) {
    std::vector<int> key{G.identity_index()};
    int x = static_cast<int>(gi);
    while (x != G.identity_index()) {
      key.push_back(x);
      x = G.mul(x, static_cast<int>(gi));
    }
    std::sort(key.begin(), key.end());
    discover(std::move(key), {els[gi]});
  }

  while (!queue.empty()) {
    const std::vector<int>& key = *queue.front();
    queue.pop_front();
    if (static_cast<i64>(key.size()) == n) continue;
    std::vector<Perm> base_gens = found.at(key);
    for (i64 gi = 1; gi < n; ++gi) {
      if (std::binary_search(key.begin(), key.end(), static_cast<int>(gi))) continue;
      std::vector<Perm> gens = base_gens;
      gens.push_back(els[gi]);
      std::vector<Perm> closure = generate_elements(G.degree(), gens);
      std::vector<int> jkey;
      jkey.reserve(closure.size());
      for (const Perm& p : closure) jkey.push_back(G.element_index(p));
      // closure of a subset of G stays inside G and stays sorted
      discover(std::move(jkey), std::move(gens));
    }
  }

  // Deterministic global order: (size ascending, key ascending).
  out->subgroups.reserve(found.size());
  out->subgroup_gens.reserve(found.size());
  {
    std::vector<const std::pair<const std::vector<int>, std::vector<Perm>>*> items;
    items.reserve(found.size());
    for (const auto& kv : found) items.push_back(&kv);
    std::sort(items.begin(), items.end(), [](const auto* a, const auto* b) {
      if (a->first.size() != b->first.size()) return a->first.size() < b->first.size();
      return a->first < b->first;
    });
    for (const auto* kv : items) {
      out->subgroups.push_back(kv->first);
      out->subgroup_gens.push_back(kv->second);
    }
  }
  out->total_subgroups = static_cast<i64>(out->subgroups.size());

  // Conjugacy classes.  Iterating subgroups in the global order means the
  // first member of each class encountered is its lex-minimal key, which is
  // the canonical representative; class order inherits (order, key) order.
  std::vector<std::pair<Perm, Perm>> conj;  // (g, g^{-1}) per element
  conj.reserve(els.size());
  for (const Perm& g : els) conj.emplace_back(g, g.inverse());

  for (size_t si = 0; si < out->subgroups.size(); ++si) {
    const auto& key = out->subgroups[si];
    if (out->class_of_key.count(key)) continue;
    std::set<std::vector<int>> orbit;
    for (const auto& [g, ginv] : conj) orbit.insert(conjugate_key(G, key, g, ginv));
    if (*orbit.begin() != key) throw internal_error("class representative is not lex-minimal");
    int cls = static_cast<int>(out->classes.size());
    for (const auto& ck : orbit) {
      if (!found.count(ck)) throw internal_error("conjugate subgroup missing from enumeration");
      out->class_of_key.emplace(ck, cls);
    }
    SubgroupClass c;
    c.rep = Subgroup{G, key, found.at(key)};
    c.rep_group = as_group(c.rep);
    c.class_size = static_cast<i64>(orbit.size());
    c.normalizer_order = n / c.class_size;
    c.weyl_order = c.normalizer_order / static_cast<i64>(key.size());
    c.index_in_parent = n / static_cast<i64>(key.size());
    out->classes.push_back(std::move(c));
  }

  return out.release();
}

}  // namespace detail

// Full subgroup lattice of G, conjugacy classes in canonical order, and the
// key -> class map.  Cached on the group; `bound` (default config value)
// guards against runaway enumeration by group order.
inline const SubgroupData& subgroup_data(const PermGroup& G, i64 bound = 0) {
  i64 eff = bound > 0 ? bound : config::order_bound.load();
  if (G.order() > eff)
    throw resource_error("group order " + std::to_string(G.order()) +
                         " exceeds subgroup enumeration bound " + std::to_string(eff));
  const auto& gd = G.data();
  std::call_once(gd.subs_once, [&] { gd.subs.reset(detail::compute_subgroup_data(G)); });
  return *gd.subs;
}

inline Subgroup subgroup_from_gens(const PermGroup& G, const std::vector<Perm>& gens) {
  for (const Perm& g : gens)
    if (G.element_index(g) < 0) throw domain_error("subgroup generator is not an element of the group");
  std::vector<Perm> closure = detail::generate_elements(G.degree(), gens);
  std::vector<int> idx;
  idx.reserve(closure.size());
  for (const Perm& p : closure) idx.push_back(G.element_index(p));
  std::vector<Perm> kept;
  for (const Perm& g : gens)
    if (!g.is_identity()) kept.push_back(g);
  return Subgroup{G, std::move(idx), std::move(kept)};
}

// Greedy small generating list for a closed element-index set.
inline Subgroup subgroup_from_elements(const PermGroup& G, std::vector<int> elems) {
  std::sort(elems.begin(), elems.end());
  std::vector<Perm> gens;
  std::vector<Perm> closure = detail::generate_elements(G.degree(), gens);
  for (int i : elems) {
    const Perm& p = G.elements()[i];
    if (std::binary_search(closure.begin(), closure.end(), p)) continue;
    gens.push_back(p);
    closure = detail::generate_elements(G.degree(), gens);
  }
  if (static_cast<i64>(closure.size()) != static_cast<i64>(elems.size()))
    throw domain_error("element set is not a subgroup");
  return Subgroup{G, std::move(elems), std::move(gens)};
}

inline Subgroup full_subgroup(const PermGroup& G) {
  std::vector<int> all(static_cast<size_t>(G.order()));
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{G, std::move(all), G.generators()};
}

inline Subgroup trivial_subgroup(const PermGroup& G) {
  return Subgroup{G, {G.identity_index()}, {}};
}

inline bool subgroup_includes(const Subgroup& H, const Subgroup& K) {
  if (!(H.parent == K.parent)) throw domain_error("subgroups of different parent groups");
  return std::includes(H.elems.begin(), H.elems.end(), K.elems.begin(), K.elems.end());
}

inline Subgroup conjugate_subgroup(const Subgroup& H, const Perm& g) {
  const PermGroup& G = H.parent;
  if (G.element_index(g) < 0) throw domain_error("conjugating element is not in the parent group");
  Perm ginv = g.inverse();
  std::vector<int> elems = detail::conjugate_key(G, H.elems, g, ginv);
  std::vector<Perm> gens;
  gens.reserve(H.gens.size());
  for (const Perm& h : H.gens) gens.push_back(g * h * ginv);
  return Subgroup{G, std::move(elems), std::move(gens)};
}

inline Subgroup intersect_subgroups(const Subgroup& H, const Subgroup& K) {
  if (!(H.parent == K.parent)) throw domain_error("subgroups of different parent groups");
  std::vector<int> common;
  std::set_intersection(H.elems.begin(), H.elems.end(), K.elems.begin(), K.elems.end(),
                        std::back_inserter(common));
  return subgroup_from_elements(H.parent, std::move(common));
}

// Indices of the normalizer N_G(H) = {g : gHg^{-1} = H}.
inline std::vector<int> normalizer_indices(const PermGroup& G, const Subgroup& H) {
  if (!(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  std::vector<int> out;
  for (i64 gi = 0; gi < G.order(); ++gi) {
    const Perm& g = G.elements()[gi];
    if (detail::conjugate_key(G, H.elems, g, g.inverse()) == H.elems) out.push_back(static_cast<int>(gi));
  }
  return out;
}

inline bool is_conjugate(const PermGroup& G, const Subgroup& H, const Subgroup& K) {
  if (!(H.parent == G) || !(K.parent == G)) throw domain_error("subgroup does not belong to this group");
  if (H.elems.size() != K.elems.size()) return false;
  if (H.elems == K.elems) return true;
  for (const Perm& g : G.elements())
    if (detail::conjugate_key(G, H.elems, g, g.inverse()) == K.elems) return true;
  return false;
}

// Class index of an arbitrary subgroup, via the complete key -> class map.
inline int class_index(const PermGroup& G, const Subgroup& H) {
  if (!(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  const auto& sd = subgroup_data(G);
  auto it = sd.class_of_key.find(H.elems);
  if (it == sd.class_of_key.end()) throw internal_error("subgroup missing from complete enumeration");
  return it->second;
}

struct DoubleCoset {
  int rep_index;  // minimal element index in the coset
  i64 size;
};

// Partition of G into K\G/H double cosets, ordered by minimal representative.
inline std::vector<DoubleCoset> double_cosets(const PermGroup& G, const Subgroup& K, const Subgroup& H) {
  if (!(K.parent == G) || !(H.parent == G)) throw domain_error("subgroup does not belong to this group");
  std::vector<int> assigned(static_cast<size_t>(G.order()), -1);
  std::vector<DoubleCoset> out;
  std::vector<int> stack;
  for (i64 start = 0; start < G.order(); ++start) {
    if (assigned[start] >= 0) continue;
    int id = static_cast<int>(out.size());
    i64 size = 0;
    stack.push_back(static_cast<int>(start));
    assigned[start] = id;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++size;
      const Perm& px = G.elements()[x];
      for (const Perm& k : K.gens) {
        int y = G.element_index(k * px);
        if (assigned[y] < 0) {
          assigned[y] = id;
          stack.push_back(y);
        }
      }
      for (const Perm& h : H.gens) {
        int y = G.element_index(px * h);
        if (assigned[y] < 0) {
          assigned[y] = id;
          stack.push_back(y);
        }
      }
    }
    out.push_back(DoubleCoset{static_cast<int>(start), size});
  }
  return out;
}

// Coset structure of G/H: for each element, the id of its left coset gH, plus
// the minimal element index representing every coset.  Cosets are numbered in
// order of their minimal representative.
struct CosetStructure {
  std::vector<int> coset_of;  // |G| entries
  std::vector<int> reps;      // coset id -> minimal element index
};

inline CosetStructure coset_structure(const PermGroup& G, const std::vector<int>& h_elems) {
  CosetStructure cs;
  cs.coset_of.assign(static_cast<size_t>(G.order()), -1);
  for (i64 gi = 0; gi < G.order(); ++gi) {
    if (cs.coset_of[gi] >= 0) continue;
    int id = static_cast<int>(cs.reps.size());
    cs.reps.push_back(static_cast<int>(gi));
    const Perm& g = G.elements()[gi];
    for (int h : h_elems) {
      int j = G.element_index(g * G.elements()[h]);
      cs.coset_of[j] = id;
    }
  }
  return cs;
}

inline i64 element_order(const PermGroup& G, int i) { return G.elements()[i].order(); }

}  // namespace burnside
