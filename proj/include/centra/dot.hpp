#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "centra/graphs.hpp"
#include "centra/lattice.hpp"
#include "centra/moebius.hpp"

namespace centra {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

/// One `{ rank=same; ... }` line per subgroup order shared by two or more nodes.
inline void rank_hints(std::ostream& out, const std::vector<Subgroup>& nodes) {
  std::map<std::size_t, std::vector<std::size_t>> by_order;
  for (std::size_t i = 0; i < nodes.size(); ++i) by_order[nodes[i].size()].push_back(i);
  for (const auto& [order, ids] : by_order) {
    if (ids.size() < 2) continue;
    out << "  { rank=same;";
    for (std::size_t i : ids) out << " n" << i << ';';
    out << " }\n";
  }
}

}  // namespace detail

/// Undirected DOT for a group graph. Vertex i is named "v<i>".
inline std::string export_dot(const GroupGraph& g) {
  std::ostringstream out;
  out << "graph " << to_string(g.kind) << " {\n";
  out << "  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < g.size(); ++i) out << "  v" << i << " [label=" << detail::dot_quote(g.labels[i]) << "];\n";
  for (auto [a, b] : g.edges) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

/// Hasse diagram of the centralizer lattice, bottom to top. Node i is "n<i>".
inline std::string export_dot(const Group& g, const CentLattice& l) {
  std::ostringstream out;
  out << "digraph lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < l.size(); ++i)
    out << "  n" << i << " [label=" << detail::dot_quote(subgroup_name(g, l.nodes[i])) << "];\n";
  detail::rank_hints(out, l.nodes);
  for (auto [a, b] : hasse_edges(l)) out << "  n" << a << " -> n" << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

/// Hasse diagram of the element-center poset, optionally labelled with
/// Möbius values.
inline std::string export_dot(const Group& g, const CenterPoset& p, const MoebiusTable* mu = nullptr) {
  std::ostringstream out;
  out << "digraph center_poset {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    std::string label = i == p.min ? "Z(G)" : subgroup_name(g, p.nodes[i]);
    if (mu) label += "\nmu=" + std::to_string((*mu)[i]);
    out << "  n" << i << " [label=" << detail::dot_quote(label) << "];\n";
  }
  detail::rank_hints(out, p.nodes);
  for (auto [a, b] : hasse_edges(p)) out << "  n" << a << " -> n" << b << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

/// Every subgroup of a small group with its containment Hasse diagram;
/// centralizers are bold and every other subgroup carries a dashed arrow to
/// its closure C_G(C_G(H)).
inline std::string closure_diagram_dot(const Centralizers& c) {
  const Group& g = c.group();
  const auto subs = all_subgroups(g);
  const auto poset = FinitePoset::from(subs.size(), [&](std::size_t i, std::size_t j) { return subs[i].is_subset_of(subs[j]); });
  std::ostringstream out;
  out << "digraph closure {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=plaintext];\n";
  std::vector<std::optional<std::size_t>> target(subs.size());
  for (std::size_t i = 0; i < subs.size(); ++i) {
    const ElemSet cl = c.closure(subs[i]);
    const bool fixed = cl == subs[i];
    for (std::size_t j = 0; j < subs.size() && !fixed; ++j)
      if (subs[j] == cl) target[i] = j;
    out << "  n" << i << " [label=" << detail::dot_quote(subgroup_name(g, subs[i]))
        << (fixed ? ", fontname=\"Helvetica-Bold\"" : "") << "];\n";
  }
  detail::rank_hints(out, subs);
  for (auto [a, b] : hasse_edges(poset)) out << "  n" << a << " -> n" << b << " [dir=none];\n";
  for (std::size_t i = 0; i < subs.size(); ++i)
    if (target[i]) out << "  n" << i << " -> n" << *target[i] << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

/// CSV with header `vertex,degree,residue_mod_p`; the residue column is empty
/// when no prime is given.
inline std::string degrees_csv(const GroupGraph& g, std::optional<std::size_t> p = {}) {
  std::ostringstream out;
  out << "vertex,degree,residue_mod_p\n";
  for (std::size_t i = 0; i < g.size(); ++i) {
    out << detail::csv_field(g.labels[i]) << ',' << g.degree(i) << ',';
    if (p) out << residue(static_cast<long long>(g.degree(i)), *p);
    out << '\n';
  }
  return out.str();
}

}  // namespace centra
