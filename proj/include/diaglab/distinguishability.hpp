#pragma once

#include <optional>
#include <string>
#include <variant>

#include "diaglab/graph.hpp"

namespace diaglab {

enum class DiagnosticModel { PMC, MMstar };

std::string diagnostic_model_name(DiagnosticModel d);
DiagnosticModel diagnostic_model_from_name(std::string_view name);

/// Edge witness for PMC: u outside both faulty sets tests v in their symmetric
/// difference.
struct PmcWitness {
  int tester;  // u, outside F1 union F2
  int tested;  // v, in F1 delta F2
};

/// Path witness (v, w, x) for MM*, with which of the three conditions it meets:
///   1: v, w survivors, x in F1 delta F2;
///   2: v, x in F1 minus F2, w survivor;
///   3: v, x in F2 minus F1, w survivor.
struct MmWitness {
  int v;
  int w;  // the comparator, adjacent to both v and x
  int x;
  int condition;
};

struct DistinguishabilityVerdict {
  bool distinguishable = false;
  DiagnosticModel model = DiagnosticModel::PMC;
  std::optional<PmcWitness> pmc_witness;
  std::optional<MmWitness> mm_witness;
};

/// PMC characterization: distinguishable iff some vertex outside F1 union F2
/// is adjacent to a vertex of F1 delta F2. Witness search is deterministic
/// (ascending tester, then ascending tested vertex).
DistinguishabilityVerdict pmc_distinguishable(const Graph& g, const VertexSet& f1,
                                              const VertexSet& f2);

/// MM* characterization via the three path conditions. Witness search is
/// deterministic: comparator w ascending, conditions checked in order 1, 2, 3,
/// neighbor choices ascending.
DistinguishabilityVerdict mmstar_distinguishable(const Graph& g, const VertexSet& f1,
                                                 const VertexSet& f2);

/// Re-check a returned witness against the graph and sets it came from.
bool witness_valid(const Graph& g, const VertexSet& f1, const VertexSet& f2,
                   const DistinguishabilityVerdict& verdict);

/// Independent route: iterates the diagnostic model's tests directly and looks
/// for a test whose outcome is forced to differ under F1 versus F2. PMC tests
/// are ordered pairs (u tests v) over each edge in both directions; MM* tests
/// are triples (w; u, v) for every vertex w and unordered pair of distinct
/// neighbors u, v. A fault-free tester forces the outcome; a faulty tester
/// leaves it unconstrained. No common syndrome exists iff some outcome is
/// forced both ways.
bool syndrome_oracle_distinguishable(const Graph& g, const VertexSet& f1, const VertexSet& f2,
                                     DiagnosticModel d);

}  // namespace diaglab
