#include "diaglab/witness.hpp"

#include <algorithm>
#include <numeric>

#include "diaglab/fault_model.hpp"
#include "diaglab/topology.hpp"

namespace diaglab {

std::string arrangement_shape_name(ArrangementShape s) {
  switch (s) {
    case ArrangementShape::P3: return "p3";
    case ArrangementShape::C3: return "c3";
    case ArrangementShape::C4: return "c4";
    case ArrangementShape::P4: return "p4";
  }
  return "p3";
}

ArrangementShape arrangement_shape_from_name(std::string_view name) {
  if (name == "p3" || name == "P3") return ArrangementShape::P3;
  if (name == "c3" || name == "C3") return ArrangementShape::C3;
  if (name == "c4" || name == "C4") return ArrangementShape::C4;
  if (name == "p4" || name == "P4") return ArrangementShape::P4;
  throw InvalidInput("unknown arrangement witness shape: " + std::string(name));
}

namespace {

WitnessPair finish(Graph graph, VertexSet seed, long predicted, std::string tag, int g) {
  WitnessPair w{std::move(graph), std::move(seed), VertexSet{}, VertexSet{}, predicted,
                std::move(tag), g};
  w.boundary = open_neighborhood(w.graph, w.seed);
  w.closed = w.boundary | w.seed;
  w.boundary_matches_prediction = w.boundary.size() == predicted;

  auto comps = components(w.graph, w.boundary);
  w.two_component_split =
      comps.size() == 2 && std::any_of(comps.begin(), comps.end(),
                                       [&](const VertexSet& c) { return c == w.seed; });
  w.extra_faulty = std::all_of(comps.begin(), comps.end(),
                               [&](const VertexSet& c) { return c.size() >= g + 1; });
  w.remainder_nonempty = w.closed.size() < w.graph.vertex_count();

  if (!w.fully_validated())
    throw VerificationFailed("witness construction " + w.family_tag +
                             " failed validation: " +
                             (w.boundary_matches_prediction ? "" : "boundary size mismatch; ") +
                             (w.two_component_split ? "" : "survival graph is not Y plus one component; ") +
                             (w.extra_faulty ? "" : "a component is smaller than g+1; ") +
                             (w.remainder_nonempty ? "" : "N^c(Y) covers every vertex"));
  return w;
}

}  // namespace

WitnessPair hypercube_star_witness(int n, int g) {
  if (n < 4 || g < 0 || g > n - 3)
    throw RangeError("hypercube star witness requires n >= 4 and 0 <= g <= n-3");
  Graph q = hypercube(n);
  VertexSet seed(q.vertex_count());
  seed.add(q.index_of(std::string(static_cast<std::size_t>(n), '0')));
  for (int i = 1; i <= g; ++i) {
    std::string s(static_cast<std::size_t>(n), '0');
    s[static_cast<std::size_t>(i)] = '1';
    seed.add(q.index_of(s));
  }
  long predicted = static_cast<long>(g + 1) * (2 * (n - 1) - g) / 2 + 1;
  return finish(std::move(q), std::move(seed), predicted, "hypercube-star", g);
}

WitnessPair nk_star_witness(int n, int k, int g) {
  if (n < 4 || k < 2 || k >= n || g < 1 || g > n - k)
    throw RangeError("nk-star witness requires n >= 4, 2 <= k < n, 1 <= g <= n-k");
  Graph s = nk_star(n, k);
  VertexSet seed(s.vertex_count());
  for (int j = 1; j <= g + 1; ++j) {
    std::vector<int> p{j};
    for (int sym = n - k + 2; sym <= n; ++sym) p.push_back(sym);
    seed.add(s.index_of(permutation_label(p)));
  }
  long predicted = n + static_cast<long>(g) * (k - 2) - 1;
  return finish(std::move(s), std::move(seed), predicted, "nk-star-block", g);
}

WitnessPair arrangement_witness(int n, int k, ArrangementShape shape) {
  const bool p4 = shape == ArrangementShape::P4;
  const bool cycle4 = shape == ArrangementShape::C4;
  if (cycle4 || p4) {
    if (n < 7 || k < 4 || k > (p4 ? n - 3 : n - 2))
      throw RangeError(p4 ? "p4 witness requires n >= 7 and 4 <= k <= n-3"
                          : "c4 witness requires n >= 7 and 4 <= k <= n-2");
  } else {
    if (k < 4 || k > n - 2) throw RangeError("p3/c3 witness requires 4 <= k <= n-2");
  }

  Graph a = arrangement(n, k);
  std::vector<int> base(static_cast<std::size_t>(k));
  std::iota(base.begin(), base.end(), 1);  // [1, 2, ..., k]

  auto vary = [&](std::initializer_list<std::pair<int, int>> subs) {
    auto p = base;
    for (auto [pos, sym] : subs) p[static_cast<std::size_t>(pos - 1)] = sym;
    return a.index_of(permutation_label(p));
  };

  VertexSet seed(a.vertex_count());
  long predicted = 0;
  int g = 0;
  switch (shape) {
    case ArrangementShape::P3:
      seed.add(vary({}));
      seed.add(vary({{2, k + 1}}));
      seed.add(vary({{1, k + 2}, {2, k + 1}}));
      predicted = static_cast<long>(3 * k - 2) * (n - k) - 3;
      g = 2;
      break;
    case ArrangementShape::C3:
      seed.add(vary({}));
      seed.add(vary({{1, k + 1}}));
      seed.add(vary({{1, k + 2}}));
      predicted = static_cast<long>(3 * k - 2) * (n - k) - 2;
      g = 2;
      break;
    case ArrangementShape::C4:
      seed.add(vary({}));
      seed.add(vary({{1, k + 1}}));
      seed.add(vary({{1, k + 1}, {2, k + 2}}));
      seed.add(vary({{2, k + 2}}));
      predicted = 4 * (static_cast<long>(k - 1) * (n - k) - 1);
      g = 3;
      break;
    case ArrangementShape::P4:
      seed.add(vary({}));
      seed.add(vary({{2, k + 1}}));
      seed.add(vary({{1, k + 2}, {2, k + 1}}));
      seed.add(vary({{1, k + 2}, {2, k + 1}, {3, k + 3}}));
      predicted = static_cast<long>(4 * k - 3) * (n - k) - 5;
      g = 3;
      break;
  }
  return finish(std::move(a), std::move(seed), predicted,
                "arrangement-" + arrangement_shape_name(shape), g);
}

std::pair<VertexSet, VertexSet> q4_indistinguishable_pair() {
  // Q_4 vertex index equals the numeric value of its bit string
  VertexSet f1(16), f2(16);
  for (int v : {0b0000, 0b0101, 0b0011, 0b1100, 0b1010, 0b1111}) f1.add(v);
  for (int v : {0b0110, 0b0101, 0b0011, 0b1100, 0b1010, 0b1001}) f2.add(v);
  return {f1, f2};
}

}  // namespace diaglab
