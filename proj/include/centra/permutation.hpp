#pragma once

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "centra/error.hpp"

namespace centra {

/// A permutation of the points {0, ..., degree-1}.
///
/// Products follow the right-action convention: `p * q` applies `p` first and
/// then `q`, so `(p * q)(x) == q(p(x))`. Cycle notation is 1-based.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 1) : images_(degree) {
    for (std::size_t i = 0; i < degree; ++i) images_[i] = static_cast<std::uint32_t>(i);
  }

  /// Throws ParseError unless `images` is a bijection on {0, ..., size-1}.
  explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    if (images_.empty()) throw ParseError("permutation of degree 0");
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
      if (x >= images_.size() || hit[x]) throw ParseError("image list is not a bijection");
      hit[x] = true;
    }
  }

  std::size_t degree() const noexcept { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_.at(point); }
  const std::vector<std::uint32_t>& images() const noexcept { return images_; }

  bool is_identity() const noexcept {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  friend Permutation operator*(const Permutation& p, const Permutation& q) {
    if (p.degree() != q.degree()) throw PreconditionError("permutation degree mismatch");
    Permutation r(p.degree());
    for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = q.images_[p.images_[i]];
    return r;
  }

  Permutation inverse() const {
    Permutation r(degree());
    for (std::size_t i = 0; i < degree(); ++i) r.images_[images_[i]] = static_cast<std::uint32_t>(i);
    return r;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;

  /// Disjoint-cycle form with 1-based points, fixed points omitted, "()" for
  /// the identity. Cycles start at their smallest point and are listed in
  /// order of that point.
  std::string to_cycle_string() const {
    std::string out;
    std::vector<bool> seen(degree(), false);
    for (std::uint32_t start = 0; start < degree(); ++start) {
      if (seen[start] || images_[start] == start) continue;
      out += '(';
      std::uint32_t x = start;
      bool first = true;
      do {
        if (!first) out += ',';
        first = false;
        out += std::to_string(x + 1);
        seen[x] = true;
        x = images_[x];
      } while (x != start);
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

 private:
  std::vector<std::uint32_t> images_;
};

/// Parses a product of disjoint cycles such as "(1,2)(3,4)" over 1-based
/// points up to `degree`. "()" is the identity. Leading and trailing
/// whitespace is ignored; any other whitespace is a syntax error.
inline Permutation parse_cycle_notation(std::string_view text, std::size_t degree) {
  if (degree == 0) throw ParseError("permutation degree must be positive");
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  if (text == "()") return Permutation(std::move(images));
  if (text.empty()) throw ParseError("empty cycle notation");

  std::vector<bool> used(degree, false);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) {
    throw ParseError("cycle notation '" + std::string(text) + "': " + what + " at offset " + std::to_string(pos));
  };

  while (pos < text.size()) {
    if (text[pos] != '(') fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a point");
      std::size_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::size_t>(text[pos] - '0');
        if (value > degree) fail("point out of range 1.." + std::to_string(degree));
        ++pos;
      }
      if (value == 0) fail("point out of range 1.." + std::to_string(degree));
      const auto point = static_cast<std::uint32_t>(value - 1);
      if (used[point]) fail("repeated point " + std::to_string(value));
      used[point] = true;
      cycle.push_back(point);
      if (pos >= text.size()) fail("unterminated cycle");
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      fail("unexpected character");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) images[cycle[i]] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation(std::move(images));
}

}  // namespace centra
