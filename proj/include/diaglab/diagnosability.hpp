#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "diaglab/distinguishability.hpp"
#include "diaglab/fault_model.hpp"

namespace diaglab {

struct DiagnosabilityResult {
  long t = 0;
  /// True when an indistinguishable pair pinned t exactly; false when the
  /// search ran out at the cap without finding one (then t == cap is only a
  /// verified lower bound).
  bool exhaustive = false;
  int cap = 0;
  /// A smallest indistinguishable pair of M-faulty sets, max size t+1,
  /// normalized so the first set is the (size, lex)-smaller one. Tie-break
  /// among candidates: smallest max size, then smallest total size, then
  /// lexicographic. On the vertex-transitive families the pair is canonical
  /// within the anchored subspace (vertex 0 in the symmetric difference).
  std::optional<std::pair<VertexSet, VertexSet>> extremal_pair;
  FaultModelSpec model;
  DiagnosticModel diagnostic = DiagnosticModel::PMC;
};

/// Exhaustive M-diagnosability by ascending max-size level search, restricted
/// to graphs with at most 64 vertices.
///
/// PMC levels are searched over candidate symmetric differences: a pair is
/// PMC-indistinguishable exactly when N(F1 delta F2) lies inside F1 union F2,
/// so each level enumerates delta sets, forces N(delta) into the shared part
/// and completes it with free vertices within the size budget. MM* levels
/// enumerate pairs of pre-filtered faulty sets directly. On the generated
/// (vertex-transitive) families both searches anchor vertex 0 into the
/// symmetric difference; an automorphism maps any indistinguishable pair into
/// that subspace, so level existence is preserved.
///
/// Each level is completed before returning, so results do not depend on the
/// worker count. `on_level` is invoked with each level about to be searched.
DiagnosabilityResult brute_force_diagnosability(const Graph& g, const FaultModelSpec& m,
                                                DiagnosticModel d, int cap, int workers = 1,
                                                const std::function<void(int)>& on_level = {});

/// Cap that terminates predictably: a bit above the closed-form connectivity
/// plus g for the generated families.
int default_diagnosability_cap(const Graph& g, const FaultModelSpec& m);

enum class BoundKind { UpperWitness, LowerConnectivity };

struct BoundCertificate {
  BoundKind kind = BoundKind::UpperWitness;
  long value = 0;
  FaultModelSpec model;
  // upper-bound evidence
  std::optional<VertexSet> seed;      // Y
  std::optional<VertexSet> boundary;  // N(Y), verified M-faulty
  std::optional<VertexSet> closed;    // N^c(Y), re-verified M-faulty
  // lower-bound evidence
  std::optional<int> kappa;
  std::string detail;
};

/// t_M(G, D) <= |N^c(Y)| - 1 once N(Y) is verified M-faulty, N^c(Y) is
/// re-verified M-faulty and some vertex stays outside N^c(Y). Valid for the
/// good-neighbor and extra models under both diagnostic models.
BoundCertificate upper_bound_from_witness(const Graph& g, const VertexSet& y,
                                          const FaultModelSpec& m);

/// t_M(G, D) >= kappa + g from the exact M-connectivity, subject to the
/// cardinality condition |V| > 2(kappa + g). Refuses MM* with g = 1, where the
/// connectivity argument alone is insufficient without a no-isolated-vertex
/// argument.
BoundCertificate lower_bound_certificate(const Graph& g, const FaultModelSpec& m,
                                         DiagnosticModel d, int kappa);

struct RelationCheck {
  std::string name;
  bool pass = false;
  bool exhaustive = true;  // false when a contributing value was capped
  std::string detail;
};

struct RelationAuditReport {
  DiagnosticModel diagnostic = DiagnosticModel::PMC;
  int g_max = 0;
  int cap = 0;
  long t_unrestricted = 0;
  std::vector<long> t_good_neighbor;  // index g
  std::vector<long> t_extra;          // index g
  long t_conditional = 0;
  bool all_exhaustive = true;
  std::vector<RelationCheck> checks;

  bool all_pass() const;
};

/// Brute-forces t, t_g, t-bar_g for g in [0, g_max] and t_c, then checks the
/// ordering relations between them: unrestricted below every restricted value,
/// monotonicity in g, extra below good-neighbor, equality at g = 1, and the
/// conditional upper bounds. The g = 0 values must collapse to the
/// unrestricted one.
RelationAuditReport relation_audit(const Graph& g, DiagnosticModel d, int g_max, int size_cap,
                                   int workers = 1);

}  // namespace diaglab
