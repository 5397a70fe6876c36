#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "centra/graphs.hpp"
#include "centra/lattice.hpp"
#include "centra/moebius.hpp"

namespace centra {

/// Outcome of one machine-checked property.
struct CheckResult {
  std::string suite;
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::string witness;  ///< concrete counterexample when !pass, skip reason when skipped
};

struct VerifyOptions {
  std::size_t exhaustive_max_order = 8;   ///< all subsets (and pairs) below this order
  std::size_t powerset_max_order = 12;    ///< powerset oracle for the lattice
  std::size_t random_trials = 2000;       ///< random subsets above exhaustive_max_order
  std::size_t u_star_exhaustive_order = 64;
  std::uint64_t seed = 0x00c3'7a1a'2024ULL;
  std::optional<std::size_t> prime;       ///< inferred from |G| when empty
  bool expect_order2187 = false;          ///< also check the order-2187 Möbius facts
};

enum class Suite { algebra, lattice, partition, moebius, graphs, all };

inline std::optional<Suite> parse_suite(std::string_view s) {
  if (s == "algebra") return Suite::algebra;
  if (s == "lattice") return Suite::lattice;
  if (s == "partition") return Suite::partition;
  if (s == "moebius") return Suite::moebius;
  if (s == "graphs") return Suite::graphs;
  if (s == "all") return Suite::all;
  return std::nullopt;
}

namespace detail {

inline std::string set_text(const Group& g, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](ElemId x) {
    out += (first ? "" : ",") + g.label(x);
    first = false;
  });
  return out + "}";
}

inline ElemSet subset_from_mask(std::size_t n, std::uint64_t mask) {
  ElemSet s(n);
  for (std::size_t i = 0; i < n; ++i)
    if ((mask >> i) & 1u) s.insert(static_cast<ElemId>(i));
  return s;
}

/// Random subset: mostly a handful of elements (so centralizers stay
/// interesting), sometimes a dense Bernoulli sample.
inline ElemSet random_subset(std::size_t n, std::mt19937_64& rng) {
  ElemSet s(n);
  std::uniform_int_distribution<std::size_t> elem(0, n - 1);
  if (std::uniform_int_distribution<int>(0, 9)(rng) < 7) {
    const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    for (std::size_t i = 0; i < k; ++i) s.insert(static_cast<ElemId>(elem(rng)));
  } else {
    std::bernoulli_distribution keep(std::uniform_int_distribution<int>(0, 1)(rng) ? 0.5 : 0.1);
    for (std::size_t i = 0; i < n; ++i)
      if (keep(rng)) s.insert(static_cast<ElemId>(i));
  }
  return s;
}

/// Runs `pred` on every subset (order <= limit) or on `trials` random ones;
/// returns the first failing witness.
inline std::optional<std::string> for_subsets(const Group& g, const VerifyOptions& o, std::mt19937_64& rng,
                                              const std::function<std::optional<std::string>(const ElemSet&)>& pred) {
  const std::size_t n = g.order();
  if (n <= o.exhaustive_max_order) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m)
      if (auto w = pred(subset_from_mask(n, m))) return w;
    return std::nullopt;
  }
  for (std::size_t t = 0; t < o.random_trials; ++t)
    if (auto w = pred(random_subset(n, rng))) return w;
  return std::nullopt;
}

/// Same over pairs of subsets.
inline std::optional<std::string> for_subset_pairs(
    const Group& g, const VerifyOptions& o, std::mt19937_64& rng,
    const std::function<std::optional<std::string>(const ElemSet&, const ElemSet&)>& pred) {
  const std::size_t n = g.order();
  if (n <= o.exhaustive_max_order) {
    const std::uint64_t total = std::uint64_t{1} << n;
    std::vector<ElemSet> all;
    all.reserve(total);
    for (std::uint64_t m = 0; m < total; ++m) all.push_back(subset_from_mask(n, m));
    for (const auto& s : all)
      for (const auto& t : all)
        if (auto w = pred(s, t)) return w;
    return std::nullopt;
  }
  for (std::size_t i = 0; i < o.random_trials; ++i) {
    ElemSet s = random_subset(n, rng);
    // Half the pairs are nested so monotonicity-style checks see S ⊆ T often.
    ElemSet t = std::uniform_int_distribution<int>(0, 1)(rng) ? (s | random_subset(n, rng)) : random_subset(n, rng);
    if (auto w = pred(s, t)) return w;
  }
  return std::nullopt;
}

class Recorder {
 public:
  Recorder(std::vector<CheckResult>& out, std::string suite) : out_(out), suite_(std::move(suite)) {}

  void add(std::string name, std::optional<std::string> failure) {
    out_.push_back({suite_, std::move(name), !failure.has_value(), false, failure.value_or("")});
  }

  void skip(std::string name, std::string why) { out_.push_back({suite_, std::move(name), true, true, std::move(why)}); }

 private:
  std::vector<CheckResult>& out_;
  std::string suite_;
};

}  // namespace detail

inline void verify_algebra(const Centralizers& c, const VerifyOptions& o, std::vector<CheckResult>& out) {
  const Group& g = c.group();
  detail::Recorder rec(out, "algebra");
  std::mt19937_64 rng(o.seed);
  auto text = [&](const ElemSet& s) { return detail::set_text(g, s); };

  {
    std::string detail;
    auto law = first_failing_law(g.order(), g.table(), &detail);
    rec.add("group_laws", law ? std::optional<std::string>(*law + " " + detail) : std::nullopt);
  }
  rec.add("center_matches_direct_search",
          center(g) == c.center() ? std::nullopt : std::optional<std::string>("Z(G) differs between routes"));

  rec.add("generated_subgroup_is_closure_operator", detail::for_subset_pairs(g, o, rng, [&](const ElemSet& s, const ElemSet& t) -> std::optional<std::string> {
    const ElemSet gs = subgroup_generated_by(g, s);
    if (!s.is_subset_of(gs)) return "not extensive at S=" + text(s);
    if (subgroup_generated_by(g, gs) != gs) return "not idempotent at S=" + text(s);
    if (s.is_subset_of(t) && !gs.is_subset_of(subgroup_generated_by(g, t)))
      return "not monotone at S=" + text(s) + " T=" + text(t);
    return std::nullopt;
  }));

  rec.add("centralizer_is_subgroup", detail::for_subsets(g, o, rng, [&](const ElemSet& s) -> std::optional<std::string> {
    if (!is_subgroup(g, c.centralizer(s))) return "C_G(S) not a subgroup at S=" + text(s);
    return std::nullopt;
  }));

  rec.add("antitone", detail::for_subset_pairs(g, o, rng, [&](const ElemSet& s, const ElemSet& t) -> std::optional<std::string> {
    if (s.is_subset_of(t) && !c.centralizer(t).is_subset_of(c.centralizer(s)))
      return "S=" + text(s) + " T=" + text(t);
    return std::nullopt;
  }));

  rec.add("intersection_law", detail::for_subset_pairs(g, o, rng, [&](const ElemSet& s, const ElemSet& t) -> std::optional<std::string> {
    if (c.centralizer(s | t) != (c.centralizer(s) & c.centralizer(t))) return "S=" + text(s) + " T=" + text(t);
    return std::nullopt;
  }));

  rec.add("generated_subgroup_law", detail::for_subsets(g, o, rng, [&](const ElemSet& s) -> std::optional<std::string> {
    if (c.centralizer(s) != c.centralizer(subgroup_generated_by(g, s))) return "S=" + text(s);
    return std::nullopt;
  }));

  rec.add("triple_centralizer", detail::for_subsets(g, o, rng, [&](const ElemSet& s) -> std::optional<std::string> {
    const ElemSet cs = c.centralizer(s);
    if (c.centralizer(c.centralizer(cs)) != cs) return "S=" + text(s);
    return std::nullopt;
  }));

  rec.add("galois_connection", detail::for_subset_pairs(g, o, rng, [&](const ElemSet& s, const ElemSet& t) -> std::optional<std::string> {
    if (t.is_subset_of(c.centralizer(s)) != s.is_subset_of(c.centralizer(t))) return "S=" + text(s) + " T=" + text(t);
    return std::nullopt;
  }));

  rec.add("closure_axioms", detail::for_subset_pairs(g, o, rng, [&](const ElemSet& s, const ElemSet& t) -> std::optional<std::string> {
    const ElemSet cs = c.closure(s);
    if (!s.is_subset_of(cs)) return "not extensive at S=" + text(s);
    if (c.closure(cs) != cs) return "not idempotent at S=" + text(s);
    if (s.is_subset_of(t) && !cs.is_subset_of(c.closure(t))) return "not monotone at S=" + text(s) + " T=" + text(t);
    return std::nullopt;
  }));

  rec.add("abelian_closure_iff", detail::for_subsets(g, o, rng, [&](const ElemSet& s) -> std::optional<std::string> {
    auto [gen, cl] = is_closed_abelian_iff(c, s);
    if (gen != cl) return "S=" + text(s);
    return std::nullopt;
  }));
}

inline void verify_lattice(const Centralizers& c, const VerifyOptions& o, std::vector<CheckResult>& out) {
  const Group& g = c.group();
  detail::Recorder rec(out, "lattice");
  std::mt19937_64 rng(o.seed ^ 0x1a77ULL);
  const CentLattice lat = build_lattice(c);
  const std::size_t m = lat.size();
  auto node = [&](std::size_t i) { return "node " + std::to_string(i) + " " + subgroup_name(g, lat.nodes[i]); };

  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < m && !w; ++i)
      if (c.closure(lat.nodes[i]) != lat.nodes[i]) w = node(i);
    rec.add("nodes_are_closed", w);
  }
  {
    std::optional<std::string> w;
    if (lat.nodes[lat.top] != g.all()) w = "top is not G";
    if (lat.nodes[lat.bottom] != c.center()) w = "bottom is not Z(G)";
    rec.add("top_and_bottom", w);
  }
  {
    std::optional<std::string> w;
    std::vector<int> hit(m, 0);
    for (std::size_t i = 0; i < m; ++i) ++hit[lat.dual[i]];
    for (std::size_t i = 0; i < m && !w; ++i) {
      if (hit[i] != 1) w = "duality not a bijection at " + node(i);
      else if (lat.dual[lat.dual[i]] != i) w = "dual∘dual != id at " + node(i);
    }
    for (std::size_t i = 0; i < m && !w; ++i)
      for (std::size_t j = 0; j < m && !w; ++j)
        if (lat.order.leq(i, j) != lat.order.leq(lat.dual[j], lat.dual[i])) w = node(i) + " vs " + node(j);
    rec.add("duality_order_reversing_involution", w);
  }
  {
    std::optional<std::string> w;
    for (std::size_t i = 0; i < m && !w; ++i)
      for (std::size_t j = 0; j < m && !w; ++j) {
        if (!lat.find(lat.nodes[i] & lat.nodes[j])) w = "meet missing for " + node(i) + ", " + node(j);
        const std::size_t jn = join(lat, i, j);
        ElemSet upper = g.all();
        for (std::size_t k = 0; k < m; ++k)
          if (lat.order.leq(i, k) && lat.order.leq(j, k)) upper &= lat.nodes[k];
        if (upper != lat.nodes[jn]) w = "join is not the least upper bound for " + node(i) + ", " + node(j);
        const ElemSet& a = lat.nodes[lat.dual[i]];
        const ElemSet& b = lat.nodes[lat.dual[j]];
        if (c.centralizer(a & b) != lat.nodes[jn]) w = "join differs from C_G(A ∩ B) for " + node(i) + ", " + node(j);
      }
    rec.add("meet_join_closed_and_join_representation", w);
  }
  {
    std::optional<std::string> w;
    auto triple = [&](std::size_t a, std::size_t b, std::size_t d) -> std::optional<std::string> {
      const std::string where = " at (" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(d) + ")";
      if (meet(lat, a, a) != a || join(lat, a, a) != a) return "idempotence" + where;
      if (meet(lat, a, b) != meet(lat, b, a) || join(lat, a, b) != join(lat, b, a)) return "commutativity" + where;
      if (meet(lat, meet(lat, a, b), d) != meet(lat, a, meet(lat, b, d))) return "meet associativity" + where;
      if (join(lat, join(lat, a, b), d) != join(lat, a, join(lat, b, d))) return "join associativity" + where;
      if (meet(lat, a, join(lat, a, b)) != a || join(lat, a, meet(lat, a, b)) != a) return "absorption" + where;
      return std::nullopt;
    };
    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
    for (std::size_t t = 0; t < o.random_trials && !w; ++t) w = triple(pick(rng), pick(rng), pick(rng));
    rec.add("lattice_laws", w);
  }
  {
    std::optional<std::string> w;
    const ElemSet x = class_transversal(c);
    auto ustar = [&](std::size_t i) { return u_star(c, lat.nodes[i], x); };
    auto pair = [&](std::size_t i, std::size_t j) {
      if (ustar(join(lat, i, j)) != (ustar(i) & ustar(j))) w = node(i) + " ∨ " + node(j);
    };
    if (g.order() <= o.u_star_exhaustive_order) {
      for (std::size_t i = 0; i < m && !w; ++i)
        for (std::size_t j = 0; j < m && !w; ++j) pair(i, j);
    } else {
      std::uniform_int_distribution<std::size_t> pick(0, m - 1);
      for (std::size_t t = 0; t < o.random_trials && !w; ++t) pair(pick(rng), pick(rng));
    }
    rec.add("u_star_intersection_law", w);
  }
  if (g.order() <= o.powerset_max_order) {
    std::unordered_set<ElemSet, ElemSetHash> defined;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
      defined.insert(c.centralizer(detail::subset_from_mask(g.order(), mask)));
    std::optional<std::string> w;
    if (defined.size() != m) w = std::to_string(defined.size()) + " centralizers by powerset vs " + std::to_string(m) + " nodes";
    for (const auto& s : defined)
      if (!w && !lat.find(s)) w = "powerset centralizer " + detail::set_text(g, s) + " missing";
    rec.add("powerset_agreement", w);
  } else {
    rec.skip("powerset_agreement", "order above " + std::to_string(o.powerset_max_order));
  }
  {
    std::optional<std::string> w;
    try {
      (void)is_f_group(c);
    } catch (const InvariantViolation& e) {
      w = e.what();
    }
    rec.add("f_group_dual_characterisations_agree", w);
  }
}

inline void verify_partition(const Centralizers& c, const VerifyOptions&, std::vector<CheckResult>& out) {
  const Group& g = c.group();
  detail::Recorder rec(out, "partition");
  const auto& cls = c.classes();
  {
    std::optional<std::string> w;
    ElemSet seen(g.order());
    for (const auto& k : cls) {
      if (seen.intersects(k.members)) w = "classes overlap at " + g.label(k.representative);
      seen |= k.members;
    }
    if (!w && seen != g.all()) w = "classes do not cover G";
    if (!w && cls[c.central_class()].members != c.center()) w = "class of the identity is not Z(G)";
    rec.add("classes_partition_G", w);
  }
  {
    std::optional<std::string> w;
    for (const auto& k : cls) {
      const std::string at = " for class of " + g.label(k.representative);
      k.members.for_each([&](ElemId x) {
        if (!w && c.of_element(x) != k.cent) w = "member with different centralizer" + at;
      });
      if (w) break;
      if (!k.members.is_subset_of(k.ecenter)) w = "Z*(g) not inside Z(g)" + at;
      else if (k.ecenter != (k.cent & c.centralizer(k.cent))) w = "Z(g) differs from Z(C_G(g))" + at;
      else if (!is_abelian_set(g, k.ecenter)) w = "Z(g) not abelian" + at;
      if (w) break;
    }
    rec.add("class_invariants", w);
  }
  {
    std::optional<std::string> w;
    const auto z = c.center().members();
    for (const auto& k : cls) {
      if (k.members.size() % z.size() != 0) w = "size not divisible by |Z(G)| for " + g.label(k.representative);
      k.members.for_each([&](ElemId x) {
        for (ElemId y : z)
          if (!w && !k.members.contains(g.mul(x, y))) w = "not a union of Z(G)-cosets at " + g.label(x);
      });
      if (w) break;
    }
    rec.add("coset_structure", w);
  }
  {
    std::optional<std::string> w;
    const CentLattice lat = build_lattice(c);
    for (std::size_t i = 0; i < lat.size() && !w; ++i) {
      const ElemSet& h = lat.nodes[i];
      ElemSet acc(g.order());
      for (const auto& k : cls) {
        if (!k.ecenter.is_subset_of(h)) continue;
        if (acc.intersects(k.members)) w = "overlapping union at node " + std::to_string(i);
        acc |= k.members;
      }
      if (!w && acc != h) w = "node " + std::to_string(i) + " " + subgroup_name(g, h) + " is not the union of its Z*-classes";
    }
    rec.add("partition_by_element_centers", w);
  }
}

/// Fixed Möbius facts for the order-2187 3-group: 100
/// non-minimal nodes, three 3's, four −1's, all other non-minimal values 0,
/// non-minimal sum 5.
inline std::optional<std::string> order2187_mismatch(const CenterPoset& p, const MoebiusTable& mu) {
  long long sum = 0;
  std::size_t threes = 0, minus_ones = 0, zeros = 0, other = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == p.min) continue;
    sum += mu[i];
    switch (mu[i]) {
      case 3: ++threes; break;
      case -1: ++minus_ones; break;
      case 0: ++zeros; break;
      default: ++other;
    }
  }
  const std::size_t nonmin = p.size() - 1;
  if (nonmin == 100 && threes == 3 && minus_ones == 4 && zeros == 93 && other == 0 && sum == 5) return std::nullopt;
  return "non-minimal nodes=" + std::to_string(nonmin) + " (3:" + std::to_string(threes) + ", -1:" +
         std::to_string(minus_ones) + ", 0:" + std::to_string(zeros) + ", other:" + std::to_string(other) +
         ") sum=" + std::to_string(sum);
}

inline void verify_moebius(const Centralizers& c, const VerifyOptions& o, std::vector<CheckResult>& out) {
  const Group& g = c.group();
  detail::Recorder rec(out, "moebius");
  const CenterPoset poset = center_poset(c);
  const MoebiusTable mu = moebius(poset);
  {
    std::optional<std::string> w;
    if (mu[poset.min] != 1) w = "mu(Z(G)) != 1";
    for (std::size_t x = 0; x < poset.size() && !w; ++x) {
      if (x == poset.min) continue;
      long long s = 0;
      for (std::size_t y = 0; y < poset.size(); ++y)
        if (poset.nodes[y].is_proper_subset_of(poset.nodes[x])) s += mu[y];
      if (mu[x] != -s) w = "recursion fails at node " + std::to_string(x);
    }
    rec.add("moebius_recursion", w);
  }
  const bool nonabelian = c.classes().size() > 1;
  const bool f_group = is_f_group(c);
  if (f_group) {
    std::optional<std::string> w;
    for (std::size_t x = 0; x < poset.size() && !w; ++x)
      if (x != poset.min && mu[x] != -1) w = "mu = " + std::to_string(mu[x]) + " at node " + std::to_string(x);
    rec.add("f_group_mu_minus_one", w);
  } else {
    rec.skip("f_group_mu_minus_one", "not an F-group");
  }

  if (!prime_power_base(g.order())) {
    for (const char* n : {"class_size_congruence", "mob_sums", "f_group_counts"}) rec.skip(n, "not a p-group");
  } else {
    std::optional<std::size_t> p;
    try {
      p = resolve_prime(g, o.prime);
    } catch (const PreconditionError& e) {
      rec.add("prime", std::string(e.what()));
    }
    if (p) {
      const auto cs = check_class_size_congruence(c, p);
      std::optional<std::string> w;
      for (const auto& row : cs.rows)
        if (!w && !row.check.pass)
          w = "class of " + g.label(row.representative) + ": " + std::to_string(row.ratio) + " vs mu " + std::to_string(row.mu);
      rec.add("class_size_congruence", w);
      if (nonabelian) {
        const auto ms = check_mob_sums(c, p);
        std::optional<std::string> w2;
        for (const auto& row : ms.rows)
          if (!w2 && !row.check.pass)
            w2 = "part " + std::to_string(row.part) + " at lattice node " + std::to_string(row.node) + ": sum " +
                 std::to_string(row.check.lhs);
        rec.add("mob_sums", w2);
      } else {
        rec.skip("mob_sums", "abelian group");
      }
      if (nonabelian && f_group) {
        const auto fc = check_f_group_counts(c, p);
        std::optional<std::string> w3;
        if (!fc.center_count_check.pass) w3 = "|Z(G)-centers| = " + std::to_string(fc.center_count);
        for (const auto& row : fc.rows)
          if (!w3 && !row.check.pass)
            w3 = "part " + std::to_string(row.part) + " at " + g.label(row.representative) + ": count " +
                 std::to_string(row.check.lhs);
        rec.add("f_group_counts", w3);
      } else {
        rec.skip("f_group_counts", nonabelian ? "not an F-group" : "abelian group");
      }
    }
  }
  if (o.expect_order2187) rec.add("order2187_mu_facts", order2187_mismatch(poset, mu));
}

inline void verify_graphs(const Centralizers& c, const VerifyOptions&, std::vector<CheckResult>& out) {
  const Group& g = c.group();
  detail::Recorder rec(out, "graphs");
  if (c.classes().size() == 1) {
    for (const char* n : {"commuting_degree_formula", "transversal_degree_formula", "centralizer_graph_symmetric",
                          "quotient_consistency"})
      rec.skip(n, "abelian group");
    return;
  }
  auto mismatch_text = [&](const std::vector<DegreeMismatch>& v) -> std::optional<std::string> {
    if (v.empty()) return std::nullopt;
    return g.label(v[0].vertex) + ": degree " + std::to_string(v[0].degree) + ", expected " + std::to_string(v[0].expected);
  };
  const GroupGraph comm = commuting_graph(c);
  const GroupGraph trans = transversal_graph(c);
  rec.add("commuting_degree_formula", mismatch_text(degree_formula_mismatches(c, comm)));
  rec.add("transversal_degree_formula", mismatch_text(degree_formula_mismatches(c, trans)));

  std::optional<GroupGraph> cent;
  try {
    cent = centralizer_graph(c);
    rec.add("centralizer_graph_symmetric", std::nullopt);
  } catch (const InvariantViolation& e) {
    rec.add("centralizer_graph_symmetric", std::string(e.what()));
  }
  rec.add("quotient_consistency", quotient_consistency(c) ? std::nullopt : std::optional<std::string>("edge sets differ"));

  const auto base = prime_power_base(g.order());
  auto residue_check = [&](const GroupGraph& gr, long long want, std::size_t p) -> std::optional<std::string> {
    for (std::size_t i = 0; i < gr.size(); ++i)
      if (residue(static_cast<long long>(gr.degree(i)), p) != residue(want, p))
        return gr.labels[i] + ": degree " + std::to_string(gr.degree(i));
    return std::nullopt;
  };
  const auto zp = prime_power_base(c.center().size());
  if (zp) rec.add("commuting_degrees_minus_one_mod_p", residue_check(comm, -1, *zp));
  else rec.skip("commuting_degrees_minus_one_mod_p", "Z(G) is not a nontrivial p-group");
  const auto qp = prime_power_base(g.order() / c.center().size());
  if (qp) rec.add("transversal_degrees_minus_two_mod_p", residue_check(trans, -2, *qp));
  else rec.skip("transversal_degrees_minus_two_mod_p", "G/Z(G) is not a nontrivial p-group");
  if (base && cent && is_f_group(c)) rec.add("f_group_centralizer_degrees_zero_mod_p", residue_check(*cent, 0, *base));
  else rec.skip("f_group_centralizer_degrees_zero_mod_p", "not an F-group p-group");
}

inline std::vector<CheckResult> verify(const Centralizers& c, Suite suite, const VerifyOptions& o = {}) {
  std::vector<CheckResult> out;
  if (suite == Suite::algebra || suite == Suite::all) verify_algebra(c, o, out);
  if (suite == Suite::lattice || suite == Suite::all) verify_lattice(c, o, out);
  if (suite == Suite::partition || suite == Suite::all) verify_partition(c, o, out);
  if (suite == Suite::moebius || suite == Suite::all) verify_moebius(c, o, out);
  if (suite == Suite::graphs || suite == Suite::all) verify_graphs(c, o, out);
  return out;
}

inline bool all_pass(const std::vector<CheckResult>& v) {
  for (const auto& r : v)
    if (!r.pass) return false;
  return true;
}

}  // namespace centra
