#pragma once

// Test-only reference implementations, kept deliberately dumb and independent
// of the engine's delta organization and symmetry anchoring: plain pair
// enumeration over all subsets up to the cap.

#include <functional>
#include <vector>

#include "diaglab/diagnosability.hpp"

namespace diaglab::test {

inline void subsets_up_to(int n, int cap, const std::function<void(const VertexSet&)>& visit) {
  std::function<void(int, VertexSet&)> rec = [&](int next, VertexSet& cur) {
    visit(cur);
    if (cur.size() >= cap) return;
    for (int v = next; v < n; ++v) {
      cur.add(v);
      rec(v + 1, cur);
      cur.remove(v);
    }
  };
  VertexSet cur(n);
  rec(0, cur);
}

inline long naive_diagnosability(const Graph& g, const FaultModelSpec& m, DiagnosticModel d,
                                 int cap) {
  std::vector<VertexSet> faulty;
  subsets_up_to(g.vertex_count(), cap, [&](const VertexSet& f) {
    if (is_faulty_set(g, f, m)) faulty.push_back(f);
  });
  long best = cap + 1;
  for (const auto& f1 : faulty) {
    for (const auto& f2 : faulty) {
      if (f1 == f2) continue;
      long level = std::max(f1.size(), f2.size());
      if (level >= best) continue;
      bool dist = d == DiagnosticModel::PMC
                      ? pmc_distinguishable(g, f1, f2).distinguishable
                      : mmstar_distinguishable(g, f1, f2).distinguishable;
      if (!dist) best = level;
    }
  }
  return best - 1;  // == cap when no indistinguishable pair exists
}

}  // namespace diaglab::test
