#pragma once

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "centra/builtins.hpp"

namespace centra {

/// Order bound from CENTRA_MAX_ORDER, or the default.
inline std::size_t max_order_from_env() {
  const char* v = std::getenv("CENTRA_MAX_ORDER");
  if (!v || !*v) return kDefaultMaxOrder;
  std::size_t out = 0;
  const std::string_view s(v);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size() || out == 0)
    throw ParseError("CENTRA_MAX_ORDER must be a positive integer");
  return out;
}

/// "family" or "family:n", e.g. "dihedral:8", "quaternion8", "heisenberg:3".
inline Group load_builtin(std::string_view spec, std::size_t max_order = kDefaultMaxOrder) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<std::size_t> params;
  if (colon != std::string_view::npos) {
    const std::string_view arg = spec.substr(colon + 1);
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (arg.empty() || ec != std::errc() || ptr != arg.data() + arg.size())
      throw ParseError("builtin spec '" + std::string(spec) + "': parameter must be a non-negative integer");
    params.push_back(value);
  }
  Group g = builtin_group(family, params);
  if (g.order() > max_order) throw OrderBoundError("builtin group exceeds order bound");
  return g;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return in;
}

inline Group load_table_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder) {
  auto in = open_input(path);
  return read_cayley_table(in, max_order);
}

inline Group load_generator_file(const std::string& path, std::size_t max_order = kDefaultMaxOrder) {
  auto in = open_input(path);
  return read_generators(in, max_order);
}

/// One factor of a product: "gens:<path>", "table:<path>" or a builtin spec.
inline Group load_factor(std::string_view spec, std::size_t max_order = kDefaultMaxOrder) {
  if (spec.starts_with("gens:")) return load_generator_file(std::string(spec.substr(5)), max_order);
  if (spec.starts_with("table:")) return load_table_file(std::string(spec.substr(6)), max_order);
  return load_builtin(spec, max_order);
}

/// "<factor>,<factor>"; split at the first comma.
inline Group load_product(std::string_view spec, std::size_t max_order = kDefaultMaxOrder) {
  const auto comma = spec.find(',');
  if (comma == std::string_view::npos || comma == 0 || comma + 1 == spec.size())
    throw ParseError("product spec '" + std::string(spec) + "' must be '<spec>,<spec>'");
  return direct_product(load_factor(spec.substr(0, comma), max_order), load_factor(spec.substr(comma + 1), max_order),
                        max_order);
}

}  // namespace centra
