#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "centra/centralizer.hpp"

namespace centra {

enum class GraphKind { commuting, transversal, centralizer };

inline const char* to_string(GraphKind k) {
  switch (k) {
    case GraphKind::commuting: return "commuting";
    case GraphKind::transversal: return "transversal";
    case GraphKind::centralizer: return "centralizer";
  }
  return "?";
}

/// A simple undirected graph on group data. For the commuting and
/// transversal graphs a vertex is an element id; for the centralizer graph it
/// is the smallest representative of a ~-class, standing for Z(g) (and C_G(g)).
struct GroupGraph {
  GraphKind kind = GraphKind::commuting;
  std::vector<ElemId> vertices;  ///< ascending
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< vertex indices, i < j, sorted
  std::vector<std::vector<std::size_t>> adjacency;

  std::size_t size() const noexcept { return vertices.size(); }
  std::size_t degree(std::size_t i) const { return adjacency.at(i).size(); }
  bool adjacent(std::size_t i, std::size_t j) const {
    const auto& a = adjacency.at(i);
    return std::binary_search(a.begin(), a.end(), j);
  }
};

namespace detail {

template <class Adjacent>
GroupGraph make_graph(GraphKind kind, std::vector<ElemId> vertices, std::vector<std::string> labels, Adjacent&& adj) {
  GroupGraph out;
  out.kind = kind;
  out.vertices = std::move(vertices);
  out.labels = std::move(labels);
  out.adjacency.resize(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < out.vertices.size(); ++j)
      if (adj(i, j)) {
        out.edges.emplace_back(i, j);
        out.adjacency[i].push_back(j);
        out.adjacency[j].push_back(i);
      }
  for (auto& a : out.adjacency) std::sort(a.begin(), a.end());
  return out;
}

inline std::vector<std::string> element_labels(const Group& g, const std::vector<ElemId>& v) {
  std::vector<std::string> out;
  out.reserve(v.size());
  for (ElemId x : v) out.push_back(g.label(x));
  return out;
}

}  // namespace detail

/// Vertices G \ Z(G); distinct x, y adjacent iff xy = yx.
inline GroupGraph commuting_graph(const Centralizers& c) {
  if (c.center().size() == c.order()) throw PreconditionError("commuting graph: group is abelian (no vertices)");
  std::vector<ElemId> v;
  for (ElemId x = 0; x < c.order(); ++x)
    if (!c.is_central(x)) v.push_back(x);
  const Group& g = c.group();
  auto labels = detail::element_labels(g, v);
  return detail::make_graph(GraphKind::commuting, v, std::move(labels),
                            [&](std::size_t i, std::size_t j) { return g.commute(v[i], v[j]); });
}

/// The smallest id of each coset xZ(G).
inline ElemSet default_center_transversal(const Centralizers& c) {
  ElemSet t(c.order()), covered(c.order());
  const auto z = c.center().members();
  for (ElemId x = 0; x < c.order(); ++x) {
    if (covered.contains(x)) continue;
    t.insert(x);
    for (ElemId w : z) covered.insert(c.group().mul(x, w));
  }
  return t;
}

inline bool is_center_transversal(const Centralizers& c, const ElemSet& t) {
  const auto z = c.center().members();
  if (t.size() * z.size() != c.order()) return false;
  ElemSet covered(c.order());
  bool ok = true;
  t.for_each([&](ElemId x) {
    for (ElemId w : z) {
      const ElemId y = c.group().mul(x, w);
      if (covered.contains(y)) ok = false;
      covered.insert(y);
    }
  });
  return ok;
}

/// Subgraph of the commuting graph induced by the non-central members of a
/// transversal T of Z(G) in G.
inline GroupGraph transversal_graph(const Centralizers& c, const ElemSet& t) {
  if (c.center().size() == c.order()) throw PreconditionError("transversal graph: group is abelian (no vertices)");
  if (!is_center_transversal(c, t)) throw PreconditionError("transversal graph: T is not a transversal for Z(G)");
  std::vector<ElemId> v;
  t.for_each([&](ElemId x) {
    if (!c.is_central(x)) v.push_back(x);
  });
  const Group& g = c.group();
  auto labels = detail::element_labels(g, v);
  return detail::make_graph(GraphKind::transversal, v, std::move(labels),
                            [&](std::size_t i, std::size_t j) { return g.commute(v[i], v[j]); });
}

inline GroupGraph transversal_graph(const Centralizers& c) { return transversal_graph(c, default_center_transversal(c)); }

/// Vertices are the non-central element centers Z(g); distinct Z(g), Z(h)
/// adjacent iff Z(h) ⊆ C_G(g). Throws InvariantViolation if the one-sided
/// relation is not symmetric.
inline GroupGraph centralizer_graph(const Centralizers& c) {
  if (c.classes().size() == 1) throw PreconditionError("centralizer graph: group is abelian (no vertices)");
  std::vector<const CentClass*> cls;
  std::vector<ElemId> v;
  std::vector<std::string> labels;
  for (const auto& k : c.classes()) {
    if (c.is_central(k.representative)) continue;
    cls.push_back(&k);
    v.push_back(k.representative);
    labels.push_back("Z(" + c.group().label(k.representative) + ")");
  }
  return detail::make_graph(GraphKind::centralizer, v, std::move(labels), [&](std::size_t i, std::size_t j) {
    const bool forward = cls[j]->ecenter.is_subset_of(cls[i]->cent);
    const bool backward = cls[i]->ecenter.is_subset_of(cls[j]->cent);
    if (forward != backward)
      throw InvariantViolation("centralizer graph adjacency is not symmetric at (" +
                               c.group().label(cls[i]->representative) + ", " +
                               c.group().label(cls[j]->representative) + ")");
    return forward;
  });
}

/// Compares the centralizer graph with the quotient of the commuting graph
/// under ~ (two distinct classes adjacent iff some cross pair commutes). Both
/// edge sets are computed independently, keyed by class representative.
inline bool quotient_consistency(const Centralizers& c) {
  const GroupGraph comm = commuting_graph(c);
  std::set<std::pair<ElemId, ElemId>> quotient;
  for (auto [i, j] : comm.edges) {
    ElemId a = c.classes()[c.class_of(comm.vertices[i])].representative;
    ElemId b = c.classes()[c.class_of(comm.vertices[j])].representative;
    if (a == b) continue;
    quotient.emplace(std::min(a, b), std::max(a, b));
  }
  const GroupGraph cg = centralizer_graph(c);
  std::set<std::pair<ElemId, ElemId>> direct;
  for (auto [i, j] : cg.edges) direct.emplace(cg.vertices[i], cg.vertices[j]);
  return quotient == direct;
}

struct DegreeMismatch {
  ElemId vertex;
  std::size_t degree;
  std::size_t expected;
};

/// Vertices whose degree differs from |C_G(x)| - |Z(G)| - 1 (commuting graph)
/// or |C_G(x) : Z(G)| - 2 (transversal graph). Empty means the formula holds.
inline std::vector<DegreeMismatch> degree_formula_mismatches(const Centralizers& c, const GroupGraph& graph) {
  std::vector<DegreeMismatch> out;
  const std::size_t z = c.center().size();
  for (std::size_t i = 0; i < graph.size(); ++i) {
    const std::size_t cx = c.of_element(graph.vertices[i]).size();
    std::size_t expected = 0;
    switch (graph.kind) {
      case GraphKind::commuting: expected = cx - z - 1; break;
      case GraphKind::transversal: expected = cx / z - 2; break;
      case GraphKind::centralizer: throw PreconditionError("no closed degree formula for the centralizer graph");
    }
    if (graph.degree(i) != expected) out.push_back({graph.vertices[i], graph.degree(i), expected});
  }
  return out;
}

}  // namespace centra
