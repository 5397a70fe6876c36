#pragma once

// Command implementations behind the `centra` executable. Kept in the
// library so tests can drive them without spawning processes.

#include <fstream>
#include <iostream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "centra/dot.hpp"
#include "centra/group_spec.hpp"
#include "centra/verify.hpp"

namespace centra::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct GroupSpec {
  enum class Kind { builtin, gens, table, product };
  Kind kind = Kind::builtin;
  std::string value;

  std::string describe() const {
    switch (kind) {
      case Kind::builtin: return "builtin:" + value;
      case Kind::gens: return "gens:" + value;
      case Kind::table: return "table:" + value;
      case Kind::product: return "product:" + value;
    }
    return value;
  }
};

inline Group load_group(const GroupSpec& spec) {
  const std::size_t bound = max_order_from_env();
  switch (spec.kind) {
    case GroupSpec::Kind::builtin: return load_builtin(spec.value, bound);
    case GroupSpec::Kind::gens: return load_generator_file(spec.value, bound);
    case GroupSpec::Kind::table: return load_table_file(spec.value, bound);
    case GroupSpec::Kind::product: return load_product(spec.value, bound);
  }
  throw ParseError("unknown group spec");
}

namespace detail {

inline nlohmann::json congruence_json(const Congruence& c) {
  return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"lhs_mod", c.lhs_mod}, {"rhs_mod", c.rhs_mod}, {"pass", c.pass}};
}

inline nlohmann::json graph_json(const GroupGraph& g, std::optional<std::size_t> p) {
  nlohmann::json degrees = nlohmann::json::array();
  nlohmann::json residues = p ? nlohmann::json::array() : nlohmann::json(nullptr);
  for (std::size_t i = 0; i < g.size(); ++i) {
    degrees.push_back(g.degree(i));
    if (p) residues.push_back(residue(static_cast<long long>(g.degree(i)), *p));
  }
  return {{"vertices", g.size()}, {"edges", g.edges.size()}, {"degrees", degrees}, {"residues_mod_p", residues}};
}

}  // namespace detail

/// Full analysis of one group as JSON. Sets `pass` to whether every
/// applicable check holds.
inline nlohmann::json analysis_report(const std::string& source, const Group& g, const VerifyOptions& opts, bool& pass) {
  using nlohmann::json;
  const Centralizers c(g);
  const auto base = prime_power_base(g.order());
  const auto witness = f_group_witness(c);
  const bool abelian = c.classes().size() == 1;

  json report;
  report["schema_version"] = kSchemaVersion;
  json grp = {{"source", source},
              {"order", g.order()},
              {"center_order", c.center().size()},
              {"is_abelian", abelian},
              {"is_p_group", base.has_value()},
              {"p", base ? json(*base) : json(nullptr)},
              {"is_f_group", !witness.has_value()}};
  grp["f_group_witness"] =
      witness ? json{{"smaller", g.label(witness->first)}, {"larger", g.label(witness->second)}} : json(nullptr);
  report["group"] = grp;

  const CentLattice lat = build_lattice(c);
  json node_orders = json::array(), node_names = json::array();
  for (const auto& n : lat.nodes) {
    node_orders.push_back(n.size());
    node_names.push_back(subgroup_name(g, n));
  }
  report["lattice"] = {{"nodes", lat.size()},
                       {"hasse_edges", hasse_edges(lat).size()},
                       {"node_orders", node_orders},
                       {"node_names", node_names}};

  json sizes = json::array(), reps = json::array();
  for (const auto& k : c.classes()) {
    sizes.push_back(k.members.size());
    reps.push_back(g.label(k.representative));
  }
  report["partition"] = {{"classes", c.classes().size()}, {"class_sizes", sizes}, {"representatives", reps}};

  const CenterPoset poset = center_poset(c);
  const MoebiusTable mu = moebius(poset);
  std::map<long long, std::size_t> multiset;
  long long nonmin_sum = 0;
  json mu_values = json::array();
  for (std::size_t i = 0; i < poset.size(); ++i) {
    mu_values.push_back(mu[i]);
    ++multiset[mu[i]];
    if (i != poset.min) nonmin_sum += mu[i];
  }
  json ms = json::object();
  for (auto [v, n] : multiset) ms[std::to_string(v)] = n;
  json cp = {{"nodes", poset.size()},
             {"hasse_edges", hasse_edges(poset).size()},
             {"mu", mu_values},
             {"mu_multiset", ms},
             {"nonminimal_mu_sum", nonmin_sum}};
  cp["class_size_congruence"] = nullptr;
  cp["mob_sums"] = nullptr;
  cp["f_group_counts"] = nullptr;
  if (base) {
    const auto cs = check_class_size_congruence(c, base);
    json rows = json::array();
    for (const auto& r : cs.rows)
      rows.push_back({{"representative", g.label(r.representative)},
                      {"class_size", r.class_size},
                      {"ratio", r.ratio},
                      {"mu", r.mu},
                      {"check", detail::congruence_json(r.check)}});
    cp["class_size_congruence"] = {{"p", cs.p}, {"pass", cs.pass}, {"rows", rows}};
    if (!abelian) {
      const auto sums = check_mob_sums(c, base);
      json srows = json::array();
      for (const auto& r : sums.rows)
        srows.push_back({{"node", r.node}, {"part", r.part}, {"check", detail::congruence_json(r.check)}});
      cp["mob_sums"] = {{"p", sums.p}, {"pass", sums.pass}, {"rows", srows}};
      if (!witness) {
        const auto fc = check_f_group_counts(c, base);
        json frows = json::array();
        for (const auto& r : fc.rows)
          frows.push_back({{"representative", g.label(r.representative)},
                           {"part", r.part},
                           {"check", detail::congruence_json(r.check)}});
        cp["f_group_counts"] = {{"p", fc.p},
                                {"pass", fc.pass},
                                {"center_count", fc.center_count},
                                {"center_count_check", detail::congruence_json(fc.center_count_check)},
                                {"rows", frows}};
      }
    }
  }
  report["center_poset"] = cp;

  json notices = json::array();
  if (abelian) {
    report["graphs"] = nullptr;
    notices.push_back("abelian group: graph constructions skipped");
  } else {
    report["graphs"] = {{"commuting", detail::graph_json(commuting_graph(c), base)},
                        {"transversal", detail::graph_json(transversal_graph(c), base)},
                        {"centralizer", detail::graph_json(centralizer_graph(c), base)},
                        {"quotient_consistent", quotient_consistency(c)}};
  }
  report["notices"] = notices;

  const auto checks = verify(c, Suite::all, opts);
  json cj = json::array();
  for (const auto& r : checks)
    cj.push_back({{"suite", r.suite},
                  {"name", r.name},
                  {"status", r.skipped ? "skipped" : (r.pass ? "pass" : "fail")},
                  {"witness", r.witness}});
  report["checks"] = cj;
  pass = all_pass(checks);
  report["pass"] = pass;
  return report;
}

inline std::string render_text(const nlohmann::json& r) {
  std::ostringstream out;
  const auto& g = r["group"];
  out << "group " << g["source"].get<std::string>() << ": order " << g["order"] << ", |Z(G)| = " << g["center_order"];
  if (g["is_p_group"].get<bool>()) out << ", " << g["p"] << "-group";
  out << (g["is_abelian"].get<bool>() ? ", abelian" : ", nonabelian");
  out << (g["is_f_group"].get<bool>() ? ", F-group" : ", not an F-group");
  if (!g["f_group_witness"].is_null())
    out << " (C(" << g["f_group_witness"]["smaller"].get<std::string>() << ") < C("
        << g["f_group_witness"]["larger"].get<std::string>() << "))";
  out << "\n";
  out << "centralizer lattice: " << r["lattice"]["nodes"] << " nodes, " << r["lattice"]["hasse_edges"]
      << " covering edges\n";
  out << "centralizer classes: " << r["partition"]["classes"] << " sizes " << r["partition"]["class_sizes"].dump() << "\n";
  const auto& cp = r["center_poset"];
  out << "element-center poset: " << cp["nodes"] << " nodes, mu multiset " << cp["mu_multiset"].dump()
      << ", non-minimal sum " << cp["nonminimal_mu_sum"] << "\n";
  if (r["graphs"].is_null()) {
    for (const auto& n : r["notices"]) out << "notice: " << n.get<std::string>() << "\n";
  } else {
    for (const char* k : {"commuting", "transversal", "centralizer"})
      out << k << " graph: " << r["graphs"][k]["vertices"] << " vertices, " << r["graphs"][k]["edges"] << " edges\n";
  }
  std::size_t failed = 0;
  for (const auto& c : r["checks"]) {
    if (c["status"] == "fail") {
      ++failed;
      out << "FAIL " << c["suite"].get<std::string>() << "/" << c["name"].get<std::string>() << ": "
          << c["witness"].get<std::string>() << "\n";
    }
  }
  out << "checks: " << r["checks"].size() << " run, " << failed << " failed\n";
  return out.str();
}

/// Maps library exceptions to exit codes, printing the message to `err`.
template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIo;
  } catch (const InvariantViolation& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory (group too large to tabulate)\n";
    return kUsage;
  }
}

inline int cmd_analyze(const GroupSpec& spec, const std::string& format, std::ostream& out, std::ostream& err,
                       const VerifyOptions& opts = {}) {
  return guarded(err, [&] {
    if (format != "json" && format != "text") throw ParseError("unknown format '" + format + "'");
    const Group g = load_group(spec);
    bool pass = false;
    const auto report = analysis_report(spec.describe(), g, opts, pass);
    if (format == "json") out << report.dump(2) << "\n";
    else out << render_text(report);
    return pass ? kOk : kCheckFailed;
  });
}

inline int cmd_verify(const GroupSpec& spec, const std::string& suite, const VerifyOptions& opts, std::ostream& out,
                      std::ostream& err) {
  return guarded(err, [&] {
    const auto s = parse_suite(suite);
    if (!s) throw ParseError("unknown suite '" + suite + "'");
    const Group g = load_group(spec);
    const Centralizers c(g);
    VerifyOptions o = opts;
    if (g.order() == 2187) o.expect_order2187 = true;
    const auto results = verify(c, *s, o);
    std::size_t failed = 0, skipped = 0;
    for (const auto& r : results) {
      const char* tag = r.skipped ? "SKIP" : (r.pass ? "PASS" : "FAIL");
      out << tag << ' ' << r.suite << '/' << r.name;
      if (!r.witness.empty()) out << (r.skipped ? " (" : " : ") << r.witness << (r.skipped ? ")" : "");
      out << '\n';
      failed += r.pass ? 0 : 1;
      skipped += r.skipped ? 1 : 0;
    }
    out << results.size() << " properties, " << failed << " failed, " << skipped << " skipped\n";
    return failed == 0 ? kOk : kCheckFailed;
  });
}

inline const std::vector<std::string>& emit_artifacts() {
  static const std::vector<std::string> names{"lattice-dot",  "poset-dot",        "commuting-dot", "transversal-dot",
                                              "centgraph-dot", "closure-dot", "degrees-csv",   "cayley-table"};
  return names;
}

/// Renders one artifact as text.
inline std::string render_artifact(const Group& g, const std::string& artifact) {
  const Centralizers c(g);
  if (artifact == "lattice-dot") return export_dot(g, build_lattice(c));
  if (artifact == "poset-dot") {
    const CenterPoset p = center_poset(c);
    const MoebiusTable mu = moebius(p);
    return export_dot(g, p, &mu);
  }
  if (artifact == "commuting-dot") return export_dot(commuting_graph(c));
  if (artifact == "transversal-dot") return export_dot(transversal_graph(c));
  if (artifact == "centgraph-dot") return export_dot(centralizer_graph(c));
  if (artifact == "closure-dot") return closure_diagram_dot(c);
  if (artifact == "degrees-csv") return degrees_csv(commuting_graph(c), prime_power_base(g.order()));
  if (artifact == "cayley-table") {
    std::ostringstream out;
    write_cayley_table(out, g);
    return out.str();
  }
  throw ParseError("unknown artifact '" + artifact + "'");
}

inline int cmd_emit(const GroupSpec& spec, const std::string& artifact, const std::string& path, std::ostream& err) {
  return guarded(err, [&] {
    const Group g = load_group(spec);
    const std::string text = render_artifact(g, artifact);
    if (path == "-") {
      std::cout << text;
      return kOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << text;
    if (!out.flush()) throw IoError("write to '" + path + "' failed");
    return kOk;
  });
}

}  // namespace centra::cli
