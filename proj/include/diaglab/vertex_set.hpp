#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "diaglab/errors.hpp"

namespace diaglab {

/// Set of vertex indices over a fixed universe [0, universe), stored as a bit
/// array. All set algebra is word-parallel; sets from different universes do
/// not mix.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) : universe_(universe) {
    if (universe < 0) throw InvalidInput("VertexSet: negative universe");
    words_.assign(static_cast<std::size_t>((universe + 63) / 64), 0);
  }

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) add(v);
  }

  static VertexSet from_indices(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  int universe() const { return universe_; }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool contains(int v) const {
    check_index(v);
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }

  void add(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63);
  }

  void remove(int v) {
    check_index(v);
    words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }

  /// Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  /// Smallest member, or -1 when empty.
  int min_member() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  VertexSet& operator^=(const VertexSet& o) {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

  /// Lexicographic order over the ascending member lists, with a proper
  /// prefix ordered first. Below the lowest differing index the sets agree;
  /// the owner of that index is smaller unless the other side has already run
  /// out of members.
  bool lex_less(const VertexSet& o) const {
    check_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t d = words_[i] ^ o.words_[i];
      if (!d) continue;
      std::uint64_t low = d & (~d + 1);
      std::uint64_t above = ~(low | (low - 1));
      bool mine = (words_[i] & low) != 0;
      if (mine) {
        if (o.words_[i] & above) return true;
        for (std::size_t j = i + 1; j < words_.size(); ++j)
          if (o.words_[j]) return true;
        return false;  // the other set is a proper prefix
      }
      if (words_[i] & above) return false;
      for (std::size_t j = i + 1; j < words_.size(); ++j)
        if (words_[j]) return false;
      return true;  // this set is a proper prefix
    }
    return false;
  }

  /// The whole set as one machine word; only valid for universes up to 64.
  std::uint64_t as_mask64() const {
    if (universe_ > 64) throw InvalidInput("VertexSet: universe exceeds 64 bits");
    return words_.empty() ? 0 : words_[0];
  }

  static VertexSet from_mask64(int universe, std::uint64_t mask) {
    if (universe > 64) throw InvalidInput("VertexSet: universe exceeds 64 bits");
    VertexSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

 private:
  void check_index(int v) const {
    if (v < 0 || v >= universe_) throw InvalidInput("vertex index out of range");
  }
  void check_universe(const VertexSet& o) const {
    if (universe_ != o.universe_) throw InvalidInput("VertexSet universe mismatch");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace diaglab
