#pragma once

#include <string>
#include <utility>

#include "diaglab/graph.hpp"

namespace diaglab {

enum class ArrangementShape { P3, C3, C4, P4 };

std::string arrangement_shape_name(ArrangementShape s);
ArrangementShape arrangement_shape_from_name(std::string_view name);

/// A seed set Y together with its open and closed neighborhoods in the host
/// graph, the closed-form prediction for |N(Y)| and the validation outcome:
/// G - N(Y) splits into exactly two components (Y and one large remainder),
/// both of size at least g+1, with vertices left outside N^c(Y).
struct WitnessPair {
  Graph graph;
  VertexSet seed;      // Y
  VertexSet boundary;  // N(Y)
  VertexSet closed;    // N^c(Y)
  long predicted_boundary_size = 0;
  std::string family_tag;
  int g = 0;  // extra-model parameter the construction targets
  bool boundary_matches_prediction = false;
  bool two_component_split = false;
  bool extra_faulty = false;
  bool remainder_nonempty = false;

  bool fully_validated() const {
    return boundary_matches_prediction && two_component_split && extra_faulty &&
           remainder_nonempty;
  }
};

/// Star seed in Q_n: the all-zeros string plus the g unit strings with a 1 in
/// positions 1..g. |N(Y)| = (g+1)(2(n-1)-g)/2 + 1 and
/// |N^c(Y)| = (g+1)(2n-g)/2 + 1. Requires n >= 4, 0 <= g <= n-3.
WitnessPair hypercube_star_witness(int n, int g);

/// Seed u_j = [j, n-k+2, ..., n] for j in 1..g+1 inside the last block of
/// S_{n,k}. |N(Y)| = n + g(k-2) - 1. Requires n >= 4, 2 <= k < n,
/// 1 <= g <= n-k.
WitnessPair nk_star_witness(int n, int k, int g);

/// Small seed subgraphs in the last block of A_{n,k}:
///   P3 (path u-v-w, endpoints at distance 2):   |N(Y)| = (3k-2)(n-k) - 3
///   C3 (triangle):                              |N(Y)| = (3k-2)(n-k) - 2
///   C4 (4-cycle):                               |N(Y)| = 4((k-1)(n-k) - 1)
///   P4 (path, endpoints at distance 3):         |N(Y)| = (4k-3)(n-k) - 5
/// P3/C3 need 4 <= k <= n-2; C4 needs n >= 7, 4 <= k <= n-2; P4 needs
/// n >= 7, 4 <= k <= n-3 (a fresh symbol k+3 keeps the endpoints symbol-disjoint).
WitnessPair arrangement_witness(int n, int k, ArrangementShape shape);

/// The explicit MM*-indistinguishable pair of 1-extra faulty sets in Q_4,
/// as vertex sets over the standard Q_4 indexing.
std::pair<VertexSet, VertexSet> q4_indistinguishable_pair();

}  // namespace diaglab
