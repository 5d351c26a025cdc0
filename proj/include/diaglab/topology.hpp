#pragma once

#include <map>
#include <utility>

#include "diaglab/graph.hpp"

namespace diaglab {

struct TopologySpec {
  Family family = Family::Hypercube;
  int n = 0;
  int k = 0;  // ignored for hypercube

  void validate() const;
};

Graph make_topology(const TopologySpec& spec);

/// Q_n: 2^n vertices labeled by n-bit strings, adjacency = Hamming distance 1.
Graph hypercube(int n);

/// S_{n,k}: k-permutations of 1..n. Edges swap the first symbol with the i-th
/// (i-edges, i in [2,k]) or replace the first symbol by an unused one (1-edges).
Graph nk_star(int n, int k);

/// A_{n,k}: k-permutations of 1..n, adjacent iff they differ in exactly one
/// position. k(n-k)-regular.
Graph arrangement(int n, int k);

/// Partition of a permutation-labeled graph by the last symbol: key i holds
/// H_i = vertices whose permutation ends in i. Requires k >= 2.
std::map<int, VertexSet> decompose_by_last_symbol(const Graph& g);

/// Split a hypercube by one string position: vertices whose label has '0'
/// there, and those with '1'. Each half induces Q_{n-1}.
std::pair<VertexSet, VertexSet> hypercube_bit_split(const Graph& g, int bit);

/// Label helpers shared by generators and witness constructions.
std::string permutation_label(const std::vector<int>& p);
std::vector<int> parse_permutation_label(const std::string& label);

}  // namespace diaglab
