#pragma once

#include <string>

#include <json.hpp>

#include "diaglab/diagnosability.hpp"
#include "diaglab/fault_model.hpp"
#include "diaglab/formulas.hpp"
#include "diaglab/topology.hpp"
#include "diaglab/witness.hpp"

namespace diaglab {

using json = nlohmann::json;

/// Graph interchange document: {"family", "params", "labels", "edges"} with
/// every edge listed once, smaller index first, sorted lexicographically.
json graph_to_json(const Graph& g);

/// Rebuild a graph from the interchange format. For the generated families the
/// document is checked against a fresh generation from its params.
Graph graph_from_json(const json& doc);

json topology_spec_to_json(const TopologySpec& spec);
TopologySpec topology_spec_from_json(const json& doc);

json fault_model_to_json(const FaultModelSpec& m);
FaultModelSpec fault_model_from_json(const json& doc);

json vertex_set_to_labels(const Graph& g, const VertexSet& s);

json connectivity_result_to_json(const Graph& g, const ConnectivityResult& r);
json verdict_to_json(const Graph& g, const DistinguishabilityVerdict& v);
json diagnosability_result_to_json(const Graph& g, const DiagnosabilityResult& r);
json bound_certificate_to_json(const Graph& g, const BoundCertificate& c);
json witness_pair_to_json(const WitnessPair& w);
json relation_audit_to_json(const RelationAuditReport& r);
json super_connected_to_json(const Graph& g, const SuperConnectedResult& r);

/// Catalog dump: one object per formula entry with its id, quantity, family,
/// diagnostic scope, validity range and statement.
json formula_catalog_to_json();

}  // namespace diaglab
