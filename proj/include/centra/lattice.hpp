#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "centra/centralizer.hpp"
#include "centra/poset.hpp"

namespace centra {

/// The lattice of all centralizers C_G(S), S ⊆ G.
struct CentLattice {
  std::vector<Subgroup> nodes;    ///< canonical order: size, then member list
  FinitePoset order;              ///< containment
  std::vector<std::size_t> dual;  ///< H ↦ C_G(H)
  std::size_t top = 0;            ///< G
  std::size_t bottom = 0;         ///< Z(G)

  std::size_t size() const noexcept { return nodes.size(); }

  std::optional<std::size_t> find(const ElemSet& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  /// Node index of `s`; throws PreconditionError if `s` is not a centralizer.
  std::size_t index_of(const ElemSet& s) const {
    if (auto i = find(s)) return *i;
    throw PreconditionError("subset is not a node of the centralizer lattice");
  }

  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index;
};

namespace detail {

inline void sort_canonically(std::vector<ElemSet>& v) {
  std::vector<std::pair<std::size_t, std::vector<ElemId>>> keyed;
  keyed.reserve(v.size());
  for (const auto& s : v) keyed.emplace_back(s.size(), s.members());
  std::vector<std::size_t> idx(v.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keyed[a] < keyed[b]; });
  std::vector<ElemSet> out;
  out.reserve(v.size());
  for (std::size_t i : idx) out.push_back(std::move(v[i]));
  v = std::move(out);
}

}  // namespace detail

/// Closes {G} ∪ {C_G(g)} under pairwise intersection. Since
/// C_G(S) = ∩_{s∈S} C_G(s), the fixed point is exactly the set of all
/// centralizers.
inline CentLattice build_lattice(const Centralizers& c) {
  const std::size_t n = c.order();
  std::vector<ElemSet> nodes;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> seen;
  auto add = [&](ElemSet s) {
    if (seen.try_emplace(s, nodes.size()).second) nodes.push_back(std::move(s));
  };
  add(ElemSet::full(n));
  for (const auto& k : c.classes()) add(k.cent);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) add(nodes[i] & nodes[j]);

  detail::sort_canonically(nodes);
  CentLattice lat;
  lat.nodes = std::move(nodes);
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) lat.index.emplace(lat.nodes[i], i);
  lat.order = FinitePoset::from(lat.nodes.size(),
                                [&](std::size_t i, std::size_t j) { return lat.nodes[i].is_subset_of(lat.nodes[j]); });
  lat.dual.resize(lat.nodes.size());
  for (std::size_t i = 0; i < lat.nodes.size(); ++i) {
    auto d = lat.find(c.centralizer(lat.nodes[i]));
    if (!d) throw InvariantViolation("centralizer of a lattice node is missing from the lattice");
    lat.dual[i] = *d;
  }
  lat.top = lat.index_of(ElemSet::full(n));
  lat.bottom = lat.index_of(c.center());
  return lat;
}

inline void check_node(const CentLattice& l, std::size_t i) {
  if (i >= l.size()) throw PreconditionError("index " + std::to_string(i) + " is not a lattice node");
}

/// H ∧ K = H ∩ K.
inline std::size_t meet(const CentLattice& l, std::size_t h, std::size_t k) {
  check_node(l, h);
  check_node(l, k);
  auto m = l.find(l.nodes[h] & l.nodes[k]);
  if (!m) throw InvariantViolation("lattice is not closed under intersection");
  return *m;
}

/// H ∨ K = C_G(C_G(H) ∩ C_G(K)).
inline std::size_t join(const CentLattice& l, std::size_t h, std::size_t k) {
  check_node(l, h);
  check_node(l, k);
  return l.dual[meet(l, l.dual[h], l.dual[k])];
}

inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const CentLattice& l) {
  return hasse_edges(l.order);
}

/// The element centers Z(g), g ∈ G, under containment. Z(G) is the minimum.
struct CenterPoset {
  std::vector<Subgroup> nodes;            ///< canonical order
  FinitePoset order;                      ///< containment
  std::size_t min = 0;                    ///< Z(G)
  std::vector<std::size_t> class_index;   ///< node -> index into Centralizers::classes()
  std::vector<std::size_t> class_size;    ///< |Z*(g)| for the node's class

  std::size_t size() const noexcept { return nodes.size(); }
};

inline CenterPoset center_poset(const Centralizers& c) {
  // Distinct classes have distinct element centers, so nodes and classes
  // correspond one to one.
  std::vector<ElemSet> nodes;
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> cls;
  for (std::size_t k = 0; k < c.classes().size(); ++k) {
    const auto& e = c.classes()[k].ecenter;
    if (!cls.emplace(e, k).second) throw InvariantViolation("two centralizer classes share an element center");
    nodes.push_back(e);
  }
  detail::sort_canonically(nodes);
  CenterPoset p;
  p.nodes = std::move(nodes);
  p.order = FinitePoset::from(p.nodes.size(),
                              [&](std::size_t i, std::size_t j) { return p.nodes[i].is_subset_of(p.nodes[j]); });
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    const std::size_t k = cls.at(p.nodes[i]);
    p.class_index.push_back(k);
    p.class_size.push_back(c.classes()[k].members.size());
    if (p.nodes[i] == c.center()) p.min = i;
  }
  return p;
}

inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const CenterPoset& p) {
  return hasse_edges(p.order);
}

/// A pair (x, y) of non-central class representatives with C_G(x) ⊊ C_G(y),
/// or nullopt if G is an F-group.
inline std::optional<std::pair<ElemId, ElemId>> f_group_witness(const Centralizers& c) {
  const auto& cls = c.classes();
  std::optional<std::pair<ElemId, ElemId>> by_cent, by_center;
  for (std::size_t a = 0; a < cls.size(); ++a) {
    if (a == c.central_class()) continue;
    for (std::size_t b = 0; b < cls.size(); ++b) {
      if (b == a || b == c.central_class()) continue;
      if (!by_cent && cls[a].cent.is_subset_of(cls[b].cent))
        by_cent = std::pair{cls[a].representative, cls[b].representative};
      // Duality reverses the chain: C(x) ⊂ C(y) iff Z(y) ⊂ Z(x).
      if (!by_center && cls[b].ecenter.is_subset_of(cls[a].ecenter))
        by_center = std::pair{cls[a].representative, cls[b].representative};
    }
  }
  if (by_cent.has_value() != by_center.has_value())
    throw InvariantViolation("F-group test disagrees between centralizers and element centers");
  return by_cent;
}

/// True iff the proper element centralizers form an antichain.
inline bool is_f_group(const Centralizers& c) { return !f_group_witness(c).has_value(); }

/// Every subgroup of G, in canonical order. Exponential in general; intended
/// for small groups (the closure diagram).
inline std::vector<Subgroup> all_subgroups(const Group& g, std::size_t max_order = 64) {
  if (g.order() > max_order)
    throw PreconditionError("subgroup enumeration limited to order " + std::to_string(max_order));
  std::vector<ElemSet> subs{subgroup_generated_by(g, g.empty_set())};
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> seen{{subs[0], 0}};
  for (std::size_t i = 0; i < subs.size(); ++i)
    for (ElemId x = 0; x < g.order(); ++x) {
      if (subs[i].contains(x)) continue;
      ElemSet gens = subs[i];
      gens.insert(x);
      ElemSet h = subgroup_generated_by(g, gens);
      if (seen.try_emplace(h, subs.size()).second) subs.push_back(std::move(h));
    }
  detail::sort_canonically(subs);
  return subs;
}

/// Readable name for a subgroup: "G", "1", or "<x,y,...>" with generators
/// chosen greedily in ascending id order.
inline std::string subgroup_name(const Group& g, const ElemSet& h) {
  if (h.size() == g.order()) return "G";
  if (h.size() <= 1) return "1";
  ElemSet gens(g.order());
  ElemSet span = subgroup_generated_by(g, gens);
  std::string out = "<";
  bool first = true;
  h.for_each([&](ElemId x) {
    if (span.contains(x)) return;
    gens.insert(x);
    span = subgroup_generated_by(g, gens);
    out += (first ? "" : ",") + g.label(x);
    first = false;
  });
  return out + ">";
}

}  // namespace centra
