#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "diaglab/vertex_set.hpp"

namespace diaglab {

enum class Family { Custom, Hypercube, NkStar, Arrangement };

std::string family_name(Family f);
Family family_from_name(std::string_view name);

/// Which generator produced a graph, with its parameters. The three generated
/// families are vertex-transitive; searches may exploit that.
struct TopologyInfo {
  Family family = Family::Custom;
  int n = 0;
  int k = 0;  // unused for hypercube
  bool vertex_transitive = false;
};

/// Immutable undirected graph over dense vertex indices 0..n-1 with a label
/// per vertex. Construction validates symmetry, no self-loops, no duplicate
/// edges and distinct labels; afterwards every operation is pure.
class Graph {
 public:
  Graph(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& edges,
        TopologyInfo info = {});

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  long edge_count() const { return edge_count_; }

  const std::string& label(int v) const;
  /// Index of a label; throws InvalidInput when absent.
  int index_of(std::string_view label) const;
  bool has_label(std::string_view label) const;

  const std::vector<int>& neighbor_list(int v) const;
  const VertexSet& neighbor_set(int v) const;
  int degree(int v) const { return static_cast<int>(neighbor_list(v).size()); }
  bool adjacent(int u, int v) const;

  const TopologyInfo& info() const { return info_; }
  bool vertex_transitive() const { return info_.vertex_transitive; }

  /// Edges once each, smaller index first, sorted lexicographically.
  std::vector<std::pair<int, int>> edges() const;

  VertexSet empty_set() const { return VertexSet(vertex_count()); }
  VertexSet full_set() const;
  VertexSet set_of(const std::vector<std::string>& labels) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_sets_;
  long edge_count_ = 0;
  TopologyInfo info_;
};

/// N(S): neighbors of S outside S.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);

/// N^c(S) = N(S) union S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

/// Connected components of G - F, sorted by smallest member index.
std::vector<VertexSet> components(const Graph& g, const VertexSet& f);

/// Shortest-path edge count, or nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// N(u) intersect N(v); u and v must be distinct.
VertexSet common_neighbors(const Graph& g, int u, int v);

/// True iff G - F has at least two components. F must be a proper subset of V.
bool is_vertex_cut(const Graph& g, const VertexSet& f);

}  // namespace diaglab
