#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "centra/elem_set.hpp"
#include "centra/error.hpp"
#include "centra/permutation.hpp"

namespace centra {

/// Orders up to this bound get an exhaustive associativity check; larger
/// tables are checked on kAssociativitySamples random triples.
inline constexpr std::size_t kExhaustiveAssociativityOrder = 512;
inline constexpr std::size_t kAssociativitySamples = 100'000;
inline constexpr std::size_t kDefaultMaxOrder = 1'000'000;

/// Returns the name of the first group law `table` violates, or nullopt.
/// `table` is row-major: table[g * n + h] == g·h, and id 0 must be the identity.
inline std::optional<std::string> first_failing_law(std::size_t n, std::span<const ElemId> table,
                                                    std::string* detail = nullptr) {
  auto note = [&](const std::string& d) {
    if (detail) *detail = d;
  };
  if (n == 0 || table.size() != n * n) {
    note("expected " + std::to_string(n) + "x" + std::to_string(n) + " entries");
    return "shape";
  }
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] >= n) {
      note("entry " + std::to_string(table[i]) + " at row " + std::to_string(i / n));
      return "range";
    }
  for (std::size_t g = 0; g < n; ++g)
    if (table[g] != g || table[g * n] != g) {
      note("element " + std::to_string(g));
      return "identity";
    }
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t g = 0; g < n; ++g) {
    ++round;
    for (std::size_t h = 0; h < n; ++h) {
      auto& s = stamp[table[g * n + h]];
      if (s == round) {
        note("row " + std::to_string(g));
        return "latin";
      }
      s = round;
    }
    ++round;
    for (std::size_t h = 0; h < n; ++h) {
      auto& s = stamp[table[h * n + g]];
      if (s == round) {
        note("column " + std::to_string(g));
        return "latin";
      }
      s = round;
    }
  }
  for (std::size_t g = 0; g < n; ++g) {
    std::size_t right = 0;
    while (table[g * n + right] != 0) ++right;
    if (table[right * n + g] != 0) {
      note("element " + std::to_string(g));
      return "inverse";
    }
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]];
  };
  auto fail_assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    note("(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")");
    return std::optional<std::string>("associativity");
  };
  if (n <= kExhaustiveAssociativityOrder) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return fail_assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed'ce47'7a11ULL);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < kAssociativitySamples; ++i) {
      const std::size_t a = pick(rng), b = pick(rng), c = pick(rng);
      if (!assoc(a, b, c)) return fail_assoc(a, b, c);
    }
  }
  return std::nullopt;
}

/// A finite group given by its full multiplication table. Immutable after
/// construction; every constructor path validates the group laws.
class Group {
 public:
  static constexpr ElemId identity = 0;

  /// Throws GroupLawError naming the first failing law.
  Group(std::size_t order, std::vector<ElemId> table, std::vector<std::string> labels = {})
      : order_(order), table_(std::move(table)), labels_(std::move(labels)) {
    std::string detail;
    if (auto law = first_failing_law(order_, table_, &detail)) throw GroupLawError(*law, detail);
    if (labels_.empty()) {
      labels_.reserve(order_);
      for (std::size_t g = 0; g < order_; ++g) labels_.push_back(g == 0 ? "1" : "g" + std::to_string(g));
    }
    if (labels_.size() != order_) throw GroupLawError("labels", "label count differs from order");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_)
      if (!seen.insert(l).second) throw GroupLawError("labels", "duplicate label '" + l + "'");
    inverse_.resize(order_);
    for (std::size_t g = 0; g < order_; ++g) {
      std::size_t h = 0;
      while (mul(static_cast<ElemId>(g), static_cast<ElemId>(h)) != identity) ++h;
      inverse_[g] = static_cast<ElemId>(h);
    }
  }

  std::size_t order() const noexcept { return order_; }
  ElemId mul(ElemId g, ElemId h) const noexcept { return table_[static_cast<std::size_t>(g) * order_ + h]; }
  ElemId inv(ElemId g) const noexcept { return inverse_[g]; }
  bool commute(ElemId g, ElemId h) const noexcept { return mul(g, h) == mul(h, g); }
  std::span<const ElemId> row(ElemId g) const noexcept {
    return std::span<const ElemId>(table_).subspan(static_cast<std::size_t>(g) * order_, order_);
  }
  std::span<const ElemId> table() const noexcept { return table_; }
  const std::string& label(ElemId g) const { return labels_.at(g); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  std::optional<ElemId> find_label(std::string_view l) const {
    for (std::size_t g = 0; g < order_; ++g)
      if (labels_[g] == l) return static_cast<ElemId>(g);
    return std::nullopt;
  }

  /// Element id for a label; throws PreconditionError if absent.
  ElemId at(std::string_view l) const {
    if (auto g = find_label(l)) return *g;
    throw PreconditionError("no element labelled '" + std::string(l) + "'");
  }

  ElemSet all() const { return ElemSet::full(order_); }
  ElemSet empty_set() const { return ElemSet(order_); }

  /// Builds a set from element labels.
  ElemSet set_of(std::initializer_list<std::string_view> ls) const {
    ElemSet s(order_);
    for (auto l : ls) s.insert(at(l));
    return s;
  }

  std::size_t element_order(ElemId g) const {
    std::size_t k = 1;
    for (ElemId x = g; x != identity; x = mul(x, g)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (ElemId g = 0; g < order_; ++g)
      for (ElemId h = g + 1; h < order_; ++h)
        if (!commute(g, h)) return false;
    return true;
  }

 private:
  std::size_t order_;
  std::vector<ElemId> table_;
  std::vector<std::string> labels_;
  std::vector<ElemId> inverse_;
};

/// Smallest subgroup containing `s`; <∅> is the trivial subgroup.
inline ElemSet subgroup_generated_by(const Group& g, const ElemSet& s) {
  const auto gens = s.members();
  ElemSet seen(g.order());
  seen.insert(Group::identity);
  std::vector<ElemId> queue{Group::identity};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const ElemId x = queue[head];
    for (ElemId t : gens) {
      const ElemId y = g.mul(x, t);
      if (!seen.contains(y)) {
        seen.insert(y);
        queue.push_back(y);
      }
    }
  }
  return seen;
}

inline bool is_subgroup(const Group& g, const ElemSet& s) {
  if (!s.contains(Group::identity)) return false;
  const auto m = s.members();
  for (ElemId x : m) {
    if (!s.contains(g.inv(x))) return false;
    for (ElemId y : m)
      if (!s.contains(g.mul(x, y))) return false;
  }
  return true;
}

inline bool is_abelian_set(const Group& g, const ElemSet& s) {
  const auto m = s.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!g.commute(m[i], m[j])) return false;
  return true;
}

/// Z(G) by direct search: elements commuting with every element.
inline ElemSet center(const Group& g) {
  ElemSet z(g.order());
  for (ElemId x = 0; x < g.order(); ++x) {
    bool central = true;
    for (ElemId y = 0; y < g.order() && central; ++y) central = g.commute(x, y);
    if (central) z.insert(x);
  }
  return z;
}

/// If `n` is p^k with k >= 1, returns p.
inline std::optional<std::size_t> prime_power_base(std::size_t n) {
  if (n < 2) return std::nullopt;
  std::size_t p = 2;
  while (p * p <= n && n % p != 0) ++p;
  if (n % p != 0) p = n;
  while (n % p == 0) n /= p;
  if (n != 1) return std::nullopt;
  return p;
}

inline bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Closure of permutation generators of a common degree, numbered in
/// breadth-first discovery order from the identity (element 0), multiplying
/// on the right by generators in the order given. Labels are cycle notation.
inline Group group_from_generators(std::size_t degree, std::span<const Permutation> gens,
                                   std::size_t max_order = kDefaultMaxOrder) {
  if (degree == 0) throw PreconditionError("permutation degree must be positive");
  for (const auto& s : gens)
    if (s.degree() != degree)
      throw PreconditionError("generator degree " + std::to_string(s.degree()) + " differs from " +
                              std::to_string(degree));

  struct VecHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const noexcept {
      std::size_t h = v.size();
      for (auto x : v) h = h * 1000003u ^ x;
      return h;
    }
  };
  std::unordered_map<std::vector<std::uint32_t>, ElemId, VecHash> index;
  std::vector<Permutation> elems{Permutation(degree)};
  index.emplace(elems[0].images(), 0);
  const std::size_t k = gens.size();
  std::vector<ElemId> right;  // right[x * k + s] == x * gens[s]
  std::vector<ElemId> parent{0};
  std::vector<std::size_t> via{0};

  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t s = 0; s < k; ++s) {
      Permutation y = elems[head] * gens[s];
      auto [it, inserted] = index.try_emplace(y.images(), static_cast<ElemId>(elems.size()));
      if (inserted) {
        if (elems.size() >= max_order)
          throw OrderBoundError("generated group exceeds order bound " + std::to_string(max_order));
        elems.push_back(std::move(y));
        parent.push_back(static_cast<ElemId>(head));
        via.push_back(s);
      }
      right.push_back(it->second);
    }
  }

  const std::size_t n = elems.size();
  std::vector<ElemId> table(n * n);
  for (std::size_t g = 0; g < n; ++g) {
    table[g * n] = static_cast<ElemId>(g);
    for (std::size_t h = 1; h < n; ++h) table[g * n + h] = right[table[g * n + parent[h]] * k + via[h]];
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(e.to_cycle_string());
  return Group(n, std::move(table), std::move(labels));
}

/// G × H with componentwise multiplication; (g, h) has id g·|H| + h.
inline Group direct_product(const Group& g, const Group& h, std::size_t max_order = kDefaultMaxOrder) {
  const std::size_t a = g.order(), b = h.order();
  if (a * b > max_order)
    throw OrderBoundError("direct product order " + std::to_string(a * b) + " exceeds bound " +
                          std::to_string(max_order));
  const std::size_t n = a * b;
  std::vector<ElemId> table(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto gx = static_cast<ElemId>(x / b), hx = static_cast<ElemId>(x % b);
      const auto gy = static_cast<ElemId>(y / b), hy = static_cast<ElemId>(y % b);
      table[x * n + y] = static_cast<ElemId>(g.mul(gx, gy) * b + h.mul(hx, hy));
    }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t x = 0; x < n; ++x)
    labels.push_back("(" + g.label(static_cast<ElemId>(x / b)) + "," + h.label(static_cast<ElemId>(x % b)) + ")");
  return Group(n, std::move(table), std::move(labels));
}

/// Reads the Cayley-table text format: the order n, then n rows of n
/// 0-based ids, then optional "label <id> <string>" lines.
inline Group read_cayley_table(std::istream& in, std::size_t max_order = kDefaultMaxOrder) {
  std::size_t n = 0;
  if (!(in >> n) || n == 0) throw ParseError("cayley table: missing or invalid order on line 1");
  if (n > max_order) throw OrderBoundError("cayley table order " + std::to_string(n) + " exceeds bound");
  std::vector<ElemId> table(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    long long v = 0;
    if (!(in >> v)) throw ParseError("cayley table: expected " + std::to_string(n * n) + " entries, got " +
                                     std::to_string(i));
    if (v < 0 || static_cast<std::size_t>(v) >= n)
      throw GroupLawError("range", "entry " + std::to_string(v) + " at row " + std::to_string(i / n));
    table[i] = static_cast<ElemId>(v);
  }
  std::vector<std::string> labels;
  std::string word;
  while (in >> word) {
    if (word != "label") throw ParseError("cayley table: unexpected token '" + word + "'");
    std::size_t id = 0;
    std::string text;
    if (!(in >> id >> text) || id >= n) throw ParseError("cayley table: malformed label line");
    if (labels.empty()) {
      labels.resize(n);
      for (std::size_t g = 0; g < n; ++g) labels[g] = g == 0 ? "1" : "g" + std::to_string(g);
    }
    labels[id] = text;
  }
  return Group(n, std::move(table), std::move(labels));
}

inline Group parse_cayley_table(const std::string& text, std::size_t max_order = kDefaultMaxOrder) {
  std::istringstream in(text);
  return read_cayley_table(in, max_order);
}

/// Writes `g` in the format read_cayley_table accepts.
inline void write_cayley_table(std::ostream& out, const Group& g, bool with_labels = true) {
  const std::size_t n = g.order();
  out << n << '\n';
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId y = 0; y < n; ++y) out << (y ? " " : "") << g.mul(x, y);
    out << '\n';
  }
  if (with_labels)
    for (ElemId x = 0; x < n; ++x) out << "label " << x << ' ' << g.label(x) << '\n';
}

/// Reads the generator format: "perm <degree>" then one cycle-notation
/// permutation per non-blank line.
inline Group read_generators(std::istream& in, std::size_t max_order = kDefaultMaxOrder) {
  std::string line;
  std::size_t degree = 0;
  while (std::getline(in, line)) {
    std::istringstream header(line);
    std::string word;
    if (!(header >> word)) continue;
    if (word != "perm" || !(header >> degree) || degree == 0)
      throw ParseError("generator file: first line must be 'perm <degree>'");
    break;
  }
  if (degree == 0) throw ParseError("generator file: missing 'perm <degree>' header");
  std::vector<Permutation> gens;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(parse_cycle_notation(line, degree));
  }
  return group_from_generators(degree, gens, max_order);
}

}  // namespace centra
