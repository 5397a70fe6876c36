#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "centra/group.hpp"

namespace centra {

namespace detail {

inline std::string power_word(const std::string& letter, std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return letter;
  return letter + "^" + std::to_string(k);
}

}  // namespace detail

/// Cyclic group <a> of order n; element a^i has id i.
inline Group cyclic_group(std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic: order must be at least 1");
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<ElemId>((i + j) % n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : detail::power_word("a", i));
  return Group(n, std::move(table), std::move(labels));
}

/// Dihedral group of the given (even) order 2m, presented as
/// <a, b | a^m, b^2, bab = a^-1>. Element a^i b^j has id j·m + i and label
/// "a^ib" style words, so D8 reads 1, a, a^2, a^3, b, ab, a^2b, a^3b.
inline Group dihedral_group(std::size_t order) {
  if (order < 2 || order % 2 != 0) throw PreconditionError("dihedral: order must be even and at least 2");
  const std::size_t m = order / 2;
  std::vector<ElemId> table(order * order);
  for (std::size_t x = 0; x < order; ++x)
    for (std::size_t y = 0; y < order; ++y) {
      const std::size_t i = x % m, j = x / m, k = y % m, l = y / m;
      // a^i b^j a^k b^l = a^(i ± k) b^(j+l)
      const std::size_t e = j == 0 ? (i + k) % m : (i + m - k) % m;
      table[x * order + y] = static_cast<ElemId>(((j + l) % 2) * m + e);
    }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    const std::size_t i = x % m, j = x / m;
    std::string w = detail::power_word("a", i) + (j ? "b" : "");
    labels.push_back(w.empty() ? "1" : w);
  }
  return Group(order, std::move(table), std::move(labels));
}

/// Quaternion group {±1, ±i, ±j, ±k}; ids in that order.
inline Group quaternion_group() {
  // unit u in {1,i,j,k} as 0..3, sign s in {+,-} as 0/1; id = 2u + s
  static constexpr int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign_mul[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<ElemId> table(64);
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2) ^ (y % 2) ^ sign_mul[u][v];
      table[static_cast<std::size_t>(x * 8 + y)] = static_cast<ElemId>(2 * unit_mul[u][v] + s);
    }
  return Group(8, std::move(table), {"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

/// Symmetric group on n points generated by (1,2) and (1,2,...,n).
inline Group symmetric_group(std::size_t n) {
  if (n == 0) throw PreconditionError("symmetric: degree must be at least 1");
  std::vector<Permutation> gens;
  if (n >= 2) {
    gens.push_back(parse_cycle_notation("(1,2)", n));
    std::string cycle = "(";
    for (std::size_t i = 1; i <= n; ++i) cycle += (i > 1 ? "," : "") + std::to_string(i);
    gens.push_back(parse_cycle_notation(cycle + ")", n));
  }
  return group_from_generators(n, gens);
}

/// Upper unitriangular 3x3 matrices over Z/p. The matrix with entries
/// (x, y, z) above the diagonal has id x + p·y + p²·z and label "[x,y,z]".
inline Group heisenberg_group(std::size_t p) {
  if (!is_prime(p)) throw PreconditionError("heisenberg: parameter must be prime");
  const std::size_t n = p * p * p;
  std::vector<ElemId> table(n * n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) {
      const std::size_t x1 = u % p, y1 = (u / p) % p, z1 = u / (p * p);
      const std::size_t x2 = v % p, y2 = (v / p) % p, z2 = v / (p * p);
      const std::size_t x = (x1 + x2) % p, y = (y1 + y2) % p, z = (z1 + z2 + x1 * y2) % p;
      table[u * n + v] = static_cast<ElemId>(x + p * y + p * p * z);
    }
  std::vector<std::string> labels;
  for (std::size_t u = 0; u < n; ++u)
    labels.push_back(u == 0 ? "1"
                            : "[" + std::to_string(u % p) + "," + std::to_string((u / p) % p) + "," +
                                  std::to_string(u / (p * p)) + "]");
  return Group(n, std::move(table), std::move(labels));
}

/// Built-in family lookup: "cyclic" n, "dihedral" 2n, "quaternion8",
/// "symmetric" n, "heisenberg" p.
inline Group builtin_group(std::string_view family, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count)
      throw PreconditionError(std::string(family) + ": expected " + std::to_string(count) + " parameter(s)");
  };
  if (family == "cyclic") {
    need(1);
    return cyclic_group(params[0]);
  }
  if (family == "dihedral") {
    need(1);
    return dihedral_group(params[0]);
  }
  if (family == "quaternion8") {
    if (!params.empty() && !(params.size() == 1 && params[0] == 8))
      throw PreconditionError("quaternion8 takes no parameters");
    return quaternion_group();
  }
  if (family == "symmetric") {
    need(1);
    return symmetric_group(params[0]);
  }
  if (family == "heisenberg") {
    need(1);
    return heisenberg_group(params[0]);
  }
  throw PreconditionError("unknown group family '" + std::string(family) + "'");
}

}  // namespace centra
