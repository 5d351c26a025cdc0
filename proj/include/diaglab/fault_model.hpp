#pragma once

#include <optional>
#include <string>

#include "diaglab/graph.hpp"

namespace diaglab {

enum class FaultModelKind { Unrestricted, Conditional, GoodNeighbor, Extra };

std::string fault_model_kind_name(FaultModelKind k);
FaultModelKind fault_model_kind_from_name(std::string_view name);

/// A fault-tolerant model: which restriction faulty sets must satisfy, plus
/// the parameter g for the good-neighbor and extra models.
struct FaultModelSpec {
  FaultModelKind kind = FaultModelKind::Unrestricted;
  int g = 0;

  static FaultModelSpec unrestricted() { return {FaultModelKind::Unrestricted, 0}; }
  static FaultModelSpec conditional() { return {FaultModelKind::Conditional, 0}; }
  static FaultModelSpec good_neighbor(int g) { return {FaultModelKind::GoodNeighbor, g}; }
  static FaultModelSpec extra(int g) { return {FaultModelKind::Extra, g}; }

  void validate() const;
  std::string name() const;
};

/// Whether F is a faulty set consistent with M:
///   unrestricted   - always;
///   conditional    - every vertex, faulty or not, keeps a neighbor outside F;
///   good-neighbor  - every vertex outside F keeps >= g neighbors outside F;
///   extra          - every component of G - F has >= g+1 vertices.
/// F = V is vacuously good-neighbor and extra faulty, and never conditional.
bool is_faulty_set(const Graph& g, const VertexSet& f, const FaultModelSpec& m);

/// is_faulty_set and G - F disconnected.
bool is_m_cut(const Graph& g, const VertexSet& f, const FaultModelSpec& m);

struct ConnectivityResult {
  std::optional<int> kappa;           // set when a minimum M-cut was found
  std::optional<VertexSet> witness_cut;
  bool exhaustive = false;            // false when the cap was hit without a cut
  int cap = 0;
};

/// Size cap that makes the search terminate predictably: a little above the
/// closed-form connectivity for the generated families, |V|-1 otherwise.
int default_connectivity_cap(const Graph& g, const FaultModelSpec& m);

/// Minimum M-cut by ascending-cardinality subset search. On the generated
/// families (all vertex-transitive) subsets containing vertex 0 are skipped:
/// any minimum M-cut maps under an automorphism to one avoiding a chosen
/// vertex, so the minimum is preserved. Witness is the first cut found in
/// lexicographic order, making results reproducible.
ConnectivityResult m_connectivity(const Graph& g, const FaultModelSpec& m,
                                  std::optional<int> cap = std::nullopt);

struct SuperConnectedResult {
  bool holds = false;
  std::optional<VertexSet> violating;  // first F (by size, then lex) that breaks it
};

/// True iff removing any F with |F| <= m leaves the graph connected, or with a
/// unique largest component and at most q vertices outside it.
SuperConnectedResult super_connected_check(const Graph& g, int m, int q);

}  // namespace diaglab
