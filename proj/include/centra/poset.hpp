#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "centra/error.hpp"

namespace centra {

/// A finite partial order on {0, ..., size-1} given by its full (reflexive)
/// relation matrix.
class FinitePoset {
 public:
  FinitePoset() = default;
  explicit FinitePoset(std::size_t n) : n_(n), rel_(n * n, 0) {
    for (std::size_t i = 0; i < n; ++i) set(i, i);
  }

  /// Builds from a predicate `leq(i, j)`.
  template <class Leq>
  static FinitePoset from(std::size_t n, Leq&& leq) {
    FinitePoset p(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq(i, j)) p.set(i, j);
    return p;
  }

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t i, std::size_t j) const { return rel_[i * n_ + j] != 0; }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  void set(std::size_t i, std::size_t j) { rel_[i * n_ + j] = 1; }

  /// The element below every other one, if it exists.
  std::optional<std::size_t> minimum() const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool below_all = true;
      for (std::size_t j = 0; j < n_ && below_all; ++j) below_all = leq(i, j);
      if (below_all) return i;
    }
    return std::nullopt;
  }

  /// A linear extension: every i with i < j precedes j.
  std::vector<std::size_t> topological_order() const {
    std::vector<std::size_t> below(n_, 0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (less(j, i)) ++below[i];
    std::vector<std::size_t> order(n_);
    for (std::size_t i = 0; i < n_; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below[a] < below[b]; });
    return order;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> rel_;
};

/// Covering pairs (x, y): x < y with no z strictly between, sorted by (x, y).
inline std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!p.less(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) covered = !(p.less(x, z) && p.less(z, y));
      if (covered) out.emplace_back(x, y);
    }
  return out;
}

/// Möbius values from the bottom element: mu(0̂) = 1 and
/// mu(x) = -Σ_{y<x} mu(y). Exact integer arithmetic.
inline std::vector<long long> moebius_values(const FinitePoset& p) {
  const auto bottom = p.minimum();
  if (!bottom) throw PreconditionError("moebius: poset has no unique minimal element");
  std::vector<long long> mu(p.size(), 0);
  for (std::size_t x : p.topological_order()) {
    if (x == *bottom) {
      mu[x] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.less(y, x)) s += mu[y];
    mu[x] = -s;
  }
  return mu;
}

}  // namespace centra
