#include "diaglab/fault_model.hpp"

#include <algorithm>

#include "mask_engine.hpp"

namespace diaglab {

std::string fault_model_kind_name(FaultModelKind k) {
  switch (k) {
    case FaultModelKind::Unrestricted: return "unrestricted";
    case FaultModelKind::Conditional: return "conditional";
    case FaultModelKind::GoodNeighbor: return "g-good-neighbor";
    case FaultModelKind::Extra: return "g-extra";
  }
  return "unrestricted";
}

FaultModelKind fault_model_kind_from_name(std::string_view name) {
  if (name == "unrestricted") return FaultModelKind::Unrestricted;
  if (name == "conditional") return FaultModelKind::Conditional;
  if (name == "g-good-neighbor" || name == "g_good_neighbor" || name == "good-neighbor")
    return FaultModelKind::GoodNeighbor;
  if (name == "g-extra" || name == "g_extra" || name == "extra") return FaultModelKind::Extra;
  throw InvalidInput("unknown fault model kind: " + std::string(name));
}

void FaultModelSpec::validate() const {
  if (g < 0) throw InvalidInput("fault model parameter g must be non-negative");
  if (g > 0 && kind != FaultModelKind::GoodNeighbor && kind != FaultModelKind::Extra)
    throw InvalidInput("g > 0 is only meaningful for the good-neighbor and extra models");
}

std::string FaultModelSpec::name() const {
  if (kind == FaultModelKind::GoodNeighbor || kind == FaultModelKind::Extra)
    return std::to_string(g) + "-" +
           (kind == FaultModelKind::GoodNeighbor ? std::string("good-neighbor")
                                                 : std::string("extra"));
  return fault_model_kind_name(kind);
}

bool is_faulty_set(const Graph& g, const VertexSet& f, const FaultModelSpec& m) {
  m.validate();
  if (f.universe() != g.vertex_count())
    throw InvalidInput("is_faulty_set: set universe does not match graph");
  switch (m.kind) {
    case FaultModelKind::Unrestricted:
      return true;
    case FaultModelKind::Conditional: {
      for (int v = 0; v < g.vertex_count(); ++v)
        if (g.neighbor_set(v).is_subset_of(f)) return false;
      return true;
    }
    case FaultModelKind::GoodNeighbor: {
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (f.contains(v)) continue;
        if ((g.neighbor_set(v) - f).size() < m.g) return false;
      }
      return true;
    }
    case FaultModelKind::Extra: {
      for (const auto& comp : components(g, f))
        if (comp.size() < m.g + 1) return false;
      return true;
    }
  }
  return false;
}

bool is_m_cut(const Graph& g, const VertexSet& f, const FaultModelSpec& m) {
  return is_faulty_set(g, f, m) && is_vertex_cut(g, f);
}

int default_connectivity_cap(const Graph& g, const FaultModelSpec& m) {
  const auto& info = g.info();
  switch (info.family) {
    case Family::Hypercube:
      // closed-form extra connectivity plus slack
      return (m.g + 1) * (2 * (info.n - 1) - m.g) / 2 + 1 + 2;
    case Family::NkStar:
      return info.n + m.g * info.k;
    case Family::Arrangement:
      return info.k * (info.n - info.k) + 4;
    case Family::Custom:
      return g.vertex_count() - 1;
  }
  return g.vertex_count() - 1;
}

namespace {

bool is_complete(const Graph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != g.vertex_count() - 1) return false;
  return true;
}

/// Visits all size-`size` index subsets of [lo, n) in lexicographic order.
/// Stops early when the visitor returns true.
template <typename F>
bool for_each_combination(int lo, int n, int size, F&& visit) {
  if (size > n - lo) return false;
  std::vector<int> c(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) c[static_cast<std::size_t>(i)] = lo + i;
  while (true) {
    if (visit(c)) return true;
    int i = size - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - size + i) --i;
    if (i < 0) return false;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < size; ++j)
      c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

ConnectivityResult m_connectivity(const Graph& g, const FaultModelSpec& m,
                                  std::optional<int> cap_opt) {
  m.validate();
  if (components(g, g.empty_set()).size() != 1)
    throw InvalidInput("m_connectivity requires a connected graph");
  if (is_complete(g)) throw NoCutExists("complete graph has no vertex cut");

  const int n = g.vertex_count();
  const int cap = std::min(cap_opt.value_or(default_connectivity_cap(g, m)), n - 1);
  // anchoring: on vertex-transitive graphs vertex 0 can be assumed to survive
  const int lo = g.vertex_transitive() ? 1 : 0;

  ConnectivityResult result;
  result.cap = cap;

  if (n <= 64) {
    detail::MaskGraph mg = detail::MaskGraph::from(g);
    for (int size = 1; size <= cap; ++size) {
      std::uint64_t found = 0;
      bool hit = false;
      detail::for_each_mask_combination(lo, n, size, [&](std::uint64_t f) {
        if (!hit && mg.is_cut(f) && mg.faulty(f, m)) {
          found = f;
          hit = true;
        }
      });
      if (hit) {
        result.kappa = size;
        result.witness_cut = VertexSet::from_mask64(n, found);
        result.exhaustive = true;
        return result;
      }
    }
    result.exhaustive = false;
    return result;
  }

  for (int size = 1; size <= cap; ++size) {
    VertexSet found(n);
    bool hit = for_each_combination(lo, n, size, [&](const std::vector<int>& idx) {
      VertexSet f = VertexSet::from_indices(n, idx);
      if (is_m_cut(g, f, m)) {
        found = f;
        return true;
      }
      return false;
    });
    if (hit) {
      result.kappa = size;
      result.witness_cut = found;
      result.exhaustive = true;
      return result;
    }
  }
  result.exhaustive = false;
  return result;
}

SuperConnectedResult super_connected_check(const Graph& g, int m, int q) {
  if (m >= g.vertex_count()) throw InvalidInput("super_connected_check requires m < |V|");
  if (m < 0 || q < 0) throw InvalidInput("super_connected_check requires m, q >= 0");
  const int n = g.vertex_count();
  SuperConnectedResult out;
  for (int size = 1; size <= m; ++size) {
    VertexSet found(n);
    bool hit = for_each_combination(0, n, size, [&](const std::vector<int>& idx) {
      VertexSet f = VertexSet::from_indices(n, idx);
      auto comps = components(g, f);
      if (comps.size() <= 1) return false;
      int largest = 0, largest_count = 0, total = 0;
      for (const auto& c : comps) {
        int sz = c.size();
        total += sz;
        if (sz > largest) {
          largest = sz;
          largest_count = 1;
        } else if (sz == largest) {
          ++largest_count;
        }
      }
      if (largest_count == 1 && total - largest <= q) return false;
      found = f;
      return true;
    });
    if (hit) {
      out.holds = false;
      out.violating = found;
      return out;
    }
  }
  out.holds = true;
  return out;
}

}  // namespace diaglab
