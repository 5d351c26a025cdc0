#pragma once

// Internal bit-mask machinery for the exhaustive searches. Everything here
// assumes at most 64 vertices and is not part of the public surface.

#include <bit>
#include <cstdint>
#include <vector>

#include "diaglab/fault_model.hpp"
#include "diaglab/graph.hpp"

namespace diaglab::detail {

struct MaskGraph {
  int n = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> nbr;
  bool transitive = false;

  static MaskGraph from(const Graph& g) {
    if (g.vertex_count() > 64)
      throw InvalidInput("exhaustive search is limited to graphs with at most 64 vertices");
    MaskGraph m;
    m.n = g.vertex_count();
    m.full = m.n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m.n) - 1;
    m.nbr.assign(static_cast<std::size_t>(m.n), 0);
    for (int v = 0; v < m.n; ++v)
      for (int w : g.neighbor_list(v)) m.nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;
    m.transitive = g.vertex_transitive();
    return m;
  }

  std::uint64_t neighborhood(std::uint64_t s) const {
    std::uint64_t out = 0;
    std::uint64_t rest = s;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      out |= nbr[static_cast<std::size_t>(v)];
    }
    return out & ~s;
  }

  bool extra_faulty(std::uint64_t f, int g) const {
    std::uint64_t alive = full & ~f;
    while (alive) {
      std::uint64_t comp = alive & (~alive + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t rest = frontier;
        while (rest) {
          int v = std::countr_zero(rest);
          rest &= rest - 1;
          next |= nbr[static_cast<std::size_t>(v)];
        }
        next &= alive & ~comp;
        comp |= next;
        frontier = next;
      }
      if (std::popcount(comp) < g + 1) return false;
      alive &= ~comp;
    }
    return true;
  }

  bool is_cut(std::uint64_t f) const {
    std::uint64_t alive = full & ~f;
    if (!alive) return false;
    std::uint64_t comp = alive & (~alive + 1);
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t rest = frontier;
      while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        next |= nbr[static_cast<std::size_t>(v)];
      }
      next &= alive & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp != alive;
  }

  bool good_neighbor_faulty(std::uint64_t f, int g) const {
    std::uint64_t rest = full & ~f;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (std::popcount(nbr[static_cast<std::size_t>(v)] & ~f) < g) return false;
    }
    return true;
  }

  bool conditional_faulty(std::uint64_t f) const {
    for (int v = 0; v < n; ++v)
      if ((nbr[static_cast<std::size_t>(v)] & ~f) == 0) return false;
    return true;
  }

  bool faulty(std::uint64_t f, const FaultModelSpec& m) const {
    switch (m.kind) {
      case FaultModelKind::Unrestricted: return true;
      case FaultModelKind::Conditional: return conditional_faulty(f);
      case FaultModelKind::GoodNeighbor: return good_neighbor_faulty(f, m.g);
      case FaultModelKind::Extra: return extra_faulty(f, m.g);
    }
    return false;
  }

  bool pmc_indistinguishable(std::uint64_t f1, std::uint64_t f2) const {
    std::uint64_t delta = f1 ^ f2;
    return (neighborhood(delta) & ~(f1 | f2)) == 0;
  }

  bool mm_indistinguishable(std::uint64_t f1, std::uint64_t f2) const {
    std::uint64_t survivors = full & ~(f1 | f2);
    std::uint64_t delta = f1 ^ f2;
    std::uint64_t only1 = f1 & ~f2;
    std::uint64_t only2 = f2 & ~f1;
    std::uint64_t rest = survivors;
    while (rest) {
      int w = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint64_t nw = nbr[static_cast<std::size_t>(w)];
      if ((nw & survivors) && (nw & delta)) return false;
      if (std::popcount(nw & only1) >= 2) return false;
      if (std::popcount(nw & only2) >= 2) return false;
    }
    return true;
  }
};

/// Lexicographic order on sets as ascending index lists, proper prefix first.
inline bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  std::uint64_t d = a ^ b;
  if (!d) return false;
  std::uint64_t low = d & (~d + 1);
  std::uint64_t above = ~(low | (low - 1));
  if (a & low) return (b & above) != 0;
  return (a & above) == 0;
}

/// All size-`size` subsets of [lo, n) as masks, in lexicographic index order.
template <typename F>
void for_each_mask_combination(int lo, int n, int size, F&& visit) {
  if (size < 0 || size > n - lo) return;
  if (size == 0) {
    visit(std::uint64_t{0});
    return;
  }
  std::vector<int> c(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    std::uint64_t m = 0;
    for (int v : c) m |= std::uint64_t{1} << v;
    visit(m);
    int i = size - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace diaglab::detail
