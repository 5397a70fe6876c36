#pragma once

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "centra/elem_set.hpp"
#include "centra/group.hpp"

namespace centra {

/// Subgroups are stored as element sets; functions documented as returning
/// a subgroup guarantee closure under multiplication and inverses.
using Subgroup = ElemSet;

/// One class of the relation x ~ y iff C_G(x) = C_G(y).
struct CentClass {
  ElemId representative;  ///< smallest id in the class
  ElemSet members;        ///< Z*(g)
  Subgroup cent;          ///< C_G(g)
  Subgroup ecenter;       ///< Z(g) = C_G(C_G(g))
};

/// Per-group cache of element centralizers and the ~-partition.
///
/// Built once; read-only afterwards and safe to share across threads. Holds a
/// reference to the group, which must outlive it.
class Centralizers {
 public:
  explicit Centralizers(const Group& g) : group_(&g), elem_(g.order(), ElemSet(g.order())) {
    const std::size_t n = g.order();
    for (ElemId x = 0; x < n; ++x) {
      elem_[x].insert(x);
      for (ElemId y = x + 1; y < n; ++y)
        if (g.commute(x, y)) {
          elem_[x].insert(y);
          elem_[y].insert(x);
        }
    }
    center_ = ElemSet::full(n);
    for (const auto& c : elem_) center_ &= c;

    std::unordered_map<ElemSet, std::size_t, ElemSetHash> by_cent;
    class_of_.resize(n);
    for (ElemId x = 0; x < n; ++x) {
      auto [it, fresh] = by_cent.try_emplace(elem_[x], classes_.size());
      if (fresh) classes_.push_back(CentClass{x, ElemSet(n), elem_[x], ElemSet(n)});
      classes_[it->second].members.insert(x);
      class_of_[x] = it->second;
    }
    for (auto& c : classes_) c.ecenter = centralizer(c.cent);
  }

  const Group& group() const noexcept { return *group_; }
  std::size_t order() const noexcept { return group_->order(); }

  /// C_G(g) for a single element.
  const Subgroup& of_element(ElemId g) const { return elem_.at(g); }

  /// Z(G).
  const Subgroup& center() const noexcept { return center_; }

  /// C_G(S) = ∩_{s∈S} C_G(s); C_G(∅) = G.
  Subgroup centralizer(const ElemSet& s) const {
    ElemSet out = ElemSet::full(order());
    s.for_each([&](ElemId x) { out &= elem_[x]; });
    return out;
  }

  /// C_G(C_G(S)).
  Subgroup closure(const ElemSet& s) const { return centralizer(centralizer(s)); }

  /// Z(g) = C_G(C_G(g)).
  const Subgroup& element_center(ElemId g) const { return classes_.at(class_of_.at(g)).ecenter; }

  /// The ~-classes, ordered by smallest member.
  const std::vector<CentClass>& classes() const noexcept { return classes_; }
  std::size_t class_of(ElemId g) const { return class_of_.at(g); }

  /// Index of the class containing the identity (its members are Z(G)).
  std::size_t central_class() const { return class_of_.at(Group::identity); }

  bool is_central(ElemId g) const { return center_.contains(g); }

 private:
  const Group* group_;
  std::vector<ElemSet> elem_;
  ElemSet center_;
  std::vector<CentClass> classes_;
  std::vector<std::size_t> class_of_;
};

inline Subgroup centralizer(const Centralizers& c, const ElemSet& s) { return c.centralizer(s); }

inline Subgroup closure(const Centralizers& c, const ElemSet& s) { return c.closure(s); }

inline Subgroup element_center(const Centralizers& c, ElemId g) { return c.element_center(g); }

inline const std::vector<CentClass>& z_star_partition(const Centralizers& c) { return c.classes(); }

/// The union of every T with C_G(T) = C_G(S). For finite groups this is the
/// closure C_G(C_G(S)); fibers themselves are never enumerated.
inline ElemSet fiber_supremum(const Centralizers& c, const ElemSet& s) { return c.closure(s); }

/// Default transversal of the ~-partition: the smallest id of each class.
inline ElemSet class_transversal(const Centralizers& c) {
  ElemSet x(c.order());
  for (const auto& k : c.classes()) x.insert(k.representative);
  return x;
}

/// U*_H = {x ∈ X : H ⊆ C_G(x)} for a centralizer H and a transversal X of
/// the ~-classes. The result satisfies C_G(U*_H) = H.
inline ElemSet u_star(const Centralizers& c, const Subgroup& h, const ElemSet& x) {
  if (c.closure(h) != h) throw PreconditionError("u_star: H is not a centralizer (C_G(C_G(H)) != H)");
  std::vector<int> hits(c.classes().size(), 0);
  x.for_each([&](ElemId e) { ++hits[c.class_of(e)]; });
  for (int k : hits)
    if (k != 1) throw PreconditionError("u_star: X is not a transversal of the centralizer classes");
  ElemSet out(c.order());
  x.for_each([&](ElemId e) {
    if (h.is_subset_of(c.of_element(e))) out.insert(e);
  });
  if (c.centralizer(out) != h) throw InvariantViolation("u_star: C_G(U*_H) differs from H");
  return out;
}

/// (<S> abelian, C_G(C_G(S)) abelian). The two always agree.
inline std::pair<bool, bool> is_closed_abelian_iff(const Centralizers& c, const ElemSet& s) {
  const Group& g = c.group();
  return {is_abelian_set(g, subgroup_generated_by(g, s)), is_abelian_set(g, c.closure(s))};
}

}  // namespace centra
