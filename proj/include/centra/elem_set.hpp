#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace centra {

/// Dense element id. Id 0 is always the identity of the ambient group.
using ElemId = std::uint32_t;

/// A subset of the elements {0, ..., universe-1} of a finite group, stored as
/// a bit vector. Intersections are the hot path of every centralizer
/// computation, so they are word-parallel.
class ElemSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElemSet() = default;
  explicit ElemSet(std::size_t universe)
      : universe_(universe), words_((universe + kWordBits - 1) / kWordBits, 0) {}

  ElemSet(std::size_t universe, std::initializer_list<ElemId> ids) : ElemSet(universe) {
    for (ElemId id : ids) insert(id);
  }

  ElemSet(std::size_t universe, std::span<const ElemId> ids) : ElemSet(universe) {
    for (ElemId id : ids) insert(id);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
    s.trim();
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(ElemId id) const noexcept {
    return id < universe_ && ((words_[id / kWordBits] >> (id % kWordBits)) & 1u);
  }

  void insert(ElemId id) {
    check(id);
    words_[id / kWordBits] |= Word{1} << (id % kWordBits);
  }

  void erase(ElemId id) {
    check(id);
    words_[id / kWordBits] &= ~(Word{1} << (id % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  /// Smallest member, if any.
  std::optional<ElemId> first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0)
        return static_cast<ElemId>(i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i])));
    return std::nullopt;
  }

  /// Calls `f(id)` for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      Word w = words_[i];
      while (w != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<ElemId>(i * kWordBits + bit));
        w &= w - 1;
      }
    }
  }

  /// Canonical ascending member list.
  std::vector<ElemId> members() const {
    std::vector<ElemId> out;
    out.reserve(size());
    for_each([&](ElemId id) { out.push_back(id); });
    return out;
  }

  bool is_subset_of(const ElemSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~other.words_[i]) != 0) return false;
    return true;
  }

  bool is_proper_subset_of(const ElemSet& other) const { return is_subset_of(other) && *this != other; }

  bool intersects(const ElemSet& other) const {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & other.words_[i]) != 0) return true;
    return false;
  }

  ElemSet& operator&=(const ElemSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  ElemSet& operator|=(const ElemSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  ElemSet& operator-=(const ElemSet& other) {
    same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
  }

  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  friend bool operator==(const ElemSet& a, const ElemSet& b) noexcept {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  std::span<const Word> words() const noexcept { return words_; }

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (Word w : words_) h ^= std::hash<Word>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void check(ElemId id) const {
    if (id >= universe_) throw std::out_of_range("element id outside the universe");
  }

  void same_universe(const ElemSet& other) const {
    if (other.universe_ != universe_) throw std::invalid_argument("element sets over different groups");
  }

  void trim() {
    if (const std::size_t rem = universe_ % kWordBits; rem != 0 && !words_.empty())
      words_.back() &= (Word{1} << rem) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

/// Canonical node order used for lattices and posets: by size, then by the
/// ascending member list compared lexicographically.
inline bool canonical_less(const ElemSet& a, const ElemSet& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

}  // namespace centra
