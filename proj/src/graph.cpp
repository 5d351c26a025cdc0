#include "diaglab/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace diaglab {

std::string family_name(Family f) {
  switch (f) {
    case Family::Hypercube: return "hypercube";
    case Family::NkStar: return "nk-star";
    case Family::Arrangement: return "arrangement";
    case Family::Custom: return "custom";
  }
  return "custom";
}

Family family_from_name(std::string_view name) {
  if (name == "hypercube") return Family::Hypercube;
  if (name == "nk-star" || name == "nk_star") return Family::NkStar;
  if (name == "arrangement") return Family::Arrangement;
  if (name == "custom") return Family::Custom;
  throw InvalidInput("unknown family: " + std::string(name));
}

Graph::Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges,
             TopologyInfo info)
    : labels_(std::move(labels)), info_(info) {
  const int n = vertex_count();
  index_.reserve(labels_.size());
  for (int v = 0; v < n; ++v) {
    auto [it, inserted] = index_.emplace(labels_[v], v);
    if (!inserted) throw InvalidInput("duplicate vertex label: " + labels_[v]);
  }
  adj_.assign(static_cast<std::size_t>(n), {});
  adj_sets_.assign(static_cast<std::size_t>(n), VertexSet(n));
  std::set<std::pair<int, int>> seen;
  for (auto [a, b] : edges) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw InvalidInput("edge endpoint out of range");
    if (a == b) throw InvalidInput("self-loop at vertex " + labels_[static_cast<std::size_t>(a)]);
    auto key = std::minmax(a, b);
    if (!seen.insert({key.first, key.second}).second)
      throw InvalidInput("duplicate edge");
    adj_[static_cast<std::size_t>(a)].push_back(b);
    adj_[static_cast<std::size_t>(b)].push_back(a);
    adj_sets_[static_cast<std::size_t>(a)].add(b);
    adj_sets_[static_cast<std::size_t>(b)].add(a);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  edge_count_ = static_cast<long>(seen.size());
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) throw InvalidInput("vertex index out of range");
}

const std::string& Graph::label(int v) const {
  check_vertex(v);
  return labels_[static_cast<std::size_t>(v)];
}

int Graph::index_of(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) throw InvalidInput("no vertex labeled " + std::string(label));
  return it->second;
}

bool Graph::has_label(std::string_view label) const {
  return index_.find(std::string(label)) != index_.end();
}

const std::vector<int>& Graph::neighbor_list(int v) const {
  check_vertex(v);
  return adj_[static_cast<std::size_t>(v)];
}

const VertexSet& Graph::neighbor_set(int v) const {
  check_vertex(v);
  return adj_sets_[static_cast<std::size_t>(v)];
}

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  return neighbor_set(u).contains(v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : neighbor_list(u))
      if (u < v) out.emplace_back(u, v);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet Graph::full_set() const {
  VertexSet s(vertex_count());
  for (int v = 0; v < vertex_count(); ++v) s.add(v);
  return s;
}

VertexSet Graph::set_of(const std::vector<std::string>& labels) const {
  VertexSet s(vertex_count());
  for (const auto& l : labels) s.add(index_of(l));
  return s;
}

namespace {
void check_set(const Graph& g, const VertexSet& s, const char* what) {
  if (s.universe() != g.vertex_count())
    throw InvalidInput(std::string(what) + ": set universe does not match graph");
}
}  // namespace

VertexSet open_neighborhood(const Graph& g, const VertexSet& s) {
  check_set(g, s, "open_neighborhood");
  VertexSet out(g.vertex_count());
  s.for_each([&](int v) { out |= g.neighbor_set(v); });
  out -= s;
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = open_neighborhood(g, s);
  out |= s;
  return out;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& f) {
  check_set(g, f, "components");
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  f.for_each([&](int v) { seen[static_cast<std::size_t>(v)] = 1; });
  std::vector<VertexSet> out;
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (seen[static_cast<std::size_t>(s)]) continue;
    VertexSet comp(n);
    comp.add(s);
    seen[static_cast<std::size_t>(s)] = 1;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : g.neighbor_list(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          comp.add(w);
          queue.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  // discovery from ascending start vertices already orders by smallest member
  return out;
}

std::optional<int> distance(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw InvalidInput("distance: vertex index out of range");
  if (u == v) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  dist[static_cast<std::size_t>(u)] = 0;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int w : g.neighbor_list(x)) {
      if (dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(x)] + 1;
        if (w == v) return dist[static_cast<std::size_t>(w)];
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

VertexSet common_neighbors(const Graph& g, int u, int v) {
  if (u == v) throw InvalidInput("common_neighbors: vertices must be distinct");
  return g.neighbor_set(u) & g.neighbor_set(v);
}

bool is_vertex_cut(const Graph& g, const VertexSet& f) {
  check_set(g, f, "is_vertex_cut");
  if (f.size() == g.vertex_count())
    throw InvalidInput("is_vertex_cut: F must leave at least one vertex");
  return components(g, f).size() >= 2;
}

}  // namespace diaglab
