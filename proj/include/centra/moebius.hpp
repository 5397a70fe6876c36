#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "centra/lattice.hpp"

namespace centra {

/// Möbius values on a CenterPoset, indexed like its nodes.
struct MoebiusTable {
  std::vector<long long> mu;

  long long operator[](std::size_t node) const { return mu.at(node); }
  std::size_t size() const noexcept { return mu.size(); }
};

inline MoebiusTable moebius(const CenterPoset& p) {
  auto bottom = p.order.minimum();
  if (!bottom || *bottom != p.min) throw PreconditionError("moebius: poset minimum is not Z(G)");
  return MoebiusTable{moebius_values(p.order)};
}

/// Non-negative residue of `v` modulo `p`.
inline long long residue(long long v, std::size_t p) {
  const auto m = static_cast<long long>(p);
  return ((v % m) + m) % m;
}

/// One congruence lhs ≡ rhs (mod p), reported with raw values and residues.
struct Congruence {
  long long lhs = 0;
  long long rhs = 0;
  long long lhs_mod = 0;
  long long rhs_mod = 0;
  bool pass = false;
};

inline Congruence congruence(long long lhs, long long rhs, std::size_t p) {
  Congruence c{lhs, rhs, residue(lhs, p), residue(rhs, p), false};
  c.pass = c.lhs_mod == c.rhs_mod;
  return c;
}

/// Resolves the prime for mod-p checks: inferred from |G| when `p` is empty,
/// validated otherwise. Throws PreconditionError unless G is a p-group.
inline std::size_t resolve_prime(const Group& g, std::optional<std::size_t> p) {
  const auto base = prime_power_base(g.order());
  if (!base) throw PreconditionError("group of order " + std::to_string(g.order()) + " is not a p-group");
  if (p && *p != *base)
    throw PreconditionError("order " + std::to_string(g.order()) + " is not a power of " + std::to_string(*p));
  return *base;
}

struct ClassCongruenceRow {
  ElemId representative;
  std::size_t class_size;
  std::size_t ratio;  ///< |Z*(g)| / |Z(G)|
  long long mu;       ///< mu(Z(g))
  Congruence check;
};

struct ClassCongruenceReport {
  std::size_t p = 0;
  std::size_t center_order = 0;
  std::vector<ClassCongruenceRow> rows;
  bool pass = true;
};

/// |Z*(g)| / |Z(G)| ≡ mu(Z(g)) (mod p) for every class.
inline ClassCongruenceReport check_class_size_congruence(const Centralizers& c, std::optional<std::size_t> p = {}) {
  ClassCongruenceReport r;
  r.p = resolve_prime(c.group(), p);
  r.center_order = c.center().size();
  const CenterPoset poset = center_poset(c);
  const MoebiusTable mu = moebius(poset);
  for (std::size_t node = 0; node < poset.size(); ++node) {
    const auto& k = c.classes()[poset.class_index[node]];
    const std::size_t size = k.members.size();
    if (size % r.center_order != 0)
      throw InvariantViolation("class of " + c.group().label(k.representative) + " has size " + std::to_string(size) +
                               " not divisible by |Z(G)| = " + std::to_string(r.center_order));
    ClassCongruenceRow row{k.representative, size, size / r.center_order, mu[node], {}};
    row.check = congruence(static_cast<long long>(row.ratio), row.mu, r.p);
    r.pass = r.pass && row.check.pass;
    r.rows.push_back(row);
  }
  std::sort(r.rows.begin(), r.rows.end(),
            [](const auto& a, const auto& b) { return a.representative < b.representative; });
  return r;
}

struct MobSumRow {
  std::size_t node;  ///< lattice node index
  int part;          ///< 1: sum over element centers inside H; 2: over proper element centralizers above H
  Congruence check;  ///< sum ≡ -1
};

struct MobSumReport {
  std::size_t p = 0;
  std::vector<MobSumRow> rows;
  bool pass = true;
};

inline void require_nonabelian(const Centralizers& c, const char* what) {
  if (c.classes().size() == 1) throw PreconditionError(std::string(what) + ": group is abelian");
}

/// For every lattice node H ⊋ Z(G): Σ mu(Z) over non-central element centers
/// Z ⊆ H is ≡ -1; for every H ⊊ G: Σ mu(Z(C)) over proper element
/// centralizers C ⊇ H is ≡ -1.
inline MobSumReport check_mob_sums(const Centralizers& c, std::optional<std::size_t> p = {}) {
  require_nonabelian(c, "check_mob_sums");
  MobSumReport r;
  r.p = resolve_prime(c.group(), p);
  const CentLattice lat = build_lattice(c);
  const CenterPoset poset = center_poset(c);
  const MoebiusTable mu = moebius(poset);
  for (std::size_t h = 0; h < lat.size(); ++h) {
    const auto& H = lat.nodes[h];
    if (h != lat.bottom) {
      long long sum = 0;
      for (std::size_t z = 0; z < poset.size(); ++z)
        if (z != poset.min && poset.nodes[z].is_subset_of(H)) sum += mu[z];
      MobSumRow row{h, 1, congruence(sum, -1, r.p)};
      r.pass = r.pass && row.check.pass;
      r.rows.push_back(row);
    }
    if (h != lat.top) {
      long long sum = 0;
      for (std::size_t z = 0; z < poset.size(); ++z) {
        if (z == poset.min) continue;
        const auto& cent = c.classes()[poset.class_index[z]].cent;
        if (H.is_subset_of(cent)) sum += mu[z];
      }
      MobSumRow row{h, 2, congruence(sum, -1, r.p)};
      r.pass = r.pass && row.check.pass;
      r.rows.push_back(row);
    }
  }
  return r;
}

struct FGroupCountRow {
  ElemId representative;  ///< class whose C_G(g) (part 1) or Z(g) (part 2) is counted against
  int part;
  Congruence check;  ///< count ≡ 1
};

struct FGroupCountReport {
  std::size_t p = 0;
  std::size_t center_count = 0;  ///< |𝒵(G)|
  Congruence center_count_check;
  std::vector<FGroupCountRow> rows;
  bool pass = true;
};

/// Counting statements for nonabelian F-groups that are p-groups.
inline FGroupCountReport check_f_group_counts(const Centralizers& c, std::optional<std::size_t> p = {}) {
  require_nonabelian(c, "check_f_group_counts");
  FGroupCountReport r;
  r.p = resolve_prime(c.group(), p);
  if (!is_f_group(c)) throw PreconditionError("check_f_group_counts: group is not an F-group");
  std::vector<const CentClass*> proper;
  for (const auto& k : c.classes())
    if (&k != &c.classes()[c.central_class()]) proper.push_back(&k);
  r.center_count = proper.size();
  r.center_count_check = congruence(static_cast<long long>(r.center_count), 1, r.p);
  r.pass = r.center_count_check.pass;
  for (const auto* h : proper) {
    long long inside = 0, above = 0;
    for (const auto* k : proper) {
      if (k->ecenter.is_subset_of(h->cent)) ++inside;
      if (h->ecenter.is_subset_of(k->cent)) ++above;
    }
    FGroupCountRow one{h->representative, 1, congruence(inside, 1, r.p)};
    FGroupCountRow two{h->representative, 2, congruence(above, 1, r.p)};
    r.pass = r.pass && one.check.pass && two.check.pass;
    r.rows.push_back(one);
    r.rows.push_back(two);
  }
  return r;
}

}  // namespace centra
