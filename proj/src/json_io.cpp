#include "diaglab/json_io.hpp"

namespace diaglab {

json graph_to_json(const Graph& g) {
  json params = json::object();
  const auto& info = g.info();
  if (info.family != Family::Custom) {
    params["n"] = info.n;
    if (info.family != Family::Hypercube) params["k"] = info.k;
  }
  json labels = json::array();
  for (int v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  json edges = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({a, b}));
  return json{{"family", family_name(info.family)},
              {"params", params},
              {"labels", labels},
              {"edges", edges}};
}

Graph graph_from_json(const json& doc) {
  Family family = family_from_name(doc.at("family").get<std::string>());
  std::vector<std::string> labels = doc.at("labels").get<std::vector<std::string>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw InvalidInput("edge entries must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  if (family == Family::Custom) return Graph(std::move(labels), edges);

  TopologySpec spec;
  spec.family = family;
  spec.n = doc.at("params").at("n").get<int>();
  spec.k = family == Family::Hypercube ? 0 : doc.at("params").at("k").get<int>();
  Graph expected = make_topology(spec);
  Graph loaded(std::move(labels), edges, expected.info());
  if (loaded.vertex_count() != expected.vertex_count())
    throw InvalidInput("graph document does not match its declared family: vertex count");
  for (int v = 0; v < expected.vertex_count(); ++v)
    if (loaded.label(v) != expected.label(v))
      throw InvalidInput("graph document does not match its declared family: labels");
  if (loaded.edges() != expected.edges())
    throw InvalidInput("graph document does not match its declared family: edges");
  return loaded;
}

json topology_spec_to_json(const TopologySpec& spec) {
  json doc{{"family", family_name(spec.family)}, {"n", spec.n}};
  if (spec.family != Family::Hypercube) doc["k"] = spec.k;
  return doc;
}

TopologySpec topology_spec_from_json(const json& doc) {
  TopologySpec spec;
  spec.family = family_from_name(doc.at("family").get<std::string>());
  spec.n = doc.at("n").get<int>();
  if (spec.family != Family::Hypercube) spec.k = doc.at("k").get<int>();
  spec.validate();
  return spec;
}

json fault_model_to_json(const FaultModelSpec& m) {
  return json{{"kind", fault_model_kind_name(m.kind)}, {"g", m.g}};
}

FaultModelSpec fault_model_from_json(const json& doc) {
  FaultModelSpec m;
  m.kind = fault_model_kind_from_name(doc.at("kind").get<std::string>());
  m.g = doc.value("g", 0);
  m.validate();
  return m;
}

json vertex_set_to_labels(const Graph& g, const VertexSet& s) {
  json out = json::array();
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

json connectivity_result_to_json(const Graph& g, const ConnectivityResult& r) {
  json doc{{"exhaustive", r.exhaustive}, {"cap", r.cap}};
  doc["kappa"] = r.kappa ? json(*r.kappa) : json(nullptr);
  doc["witness"] = r.witness_cut ? vertex_set_to_labels(g, *r.witness_cut) : json(nullptr);
  return doc;
}

json verdict_to_json(const Graph& g, const DistinguishabilityVerdict& v) {
  json doc{{"distinguishable", v.distinguishable},
           {"model", diagnostic_model_name(v.model)},
           {"witness", nullptr}};
  if (v.pmc_witness)
    doc["witness"] = json{{"tester", g.label(v.pmc_witness->tester)},
                          {"tested", g.label(v.pmc_witness->tested)}};
  if (v.mm_witness)
    doc["witness"] = json{{"v", g.label(v.mm_witness->v)},
                          {"w", g.label(v.mm_witness->w)},
                          {"x", g.label(v.mm_witness->x)},
                          {"condition", v.mm_witness->condition}};
  return doc;
}

json diagnosability_result_to_json(const Graph& g, const DiagnosabilityResult& r) {
  json doc{{"t", r.t},
           {"exhaustive", r.exhaustive},
           {"cap", r.cap},
           {"model", fault_model_to_json(r.model)},
           {"diagnostic", diagnostic_model_name(r.diagnostic)},
           {"extremal_pair", nullptr}};
  if (r.extremal_pair)
    doc["extremal_pair"] = json{{"f1", vertex_set_to_labels(g, r.extremal_pair->first)},
                                {"f2", vertex_set_to_labels(g, r.extremal_pair->second)}};
  return doc;
}

json bound_certificate_to_json(const Graph& g, const BoundCertificate& c) {
  json doc{{"kind", c.kind == BoundKind::UpperWitness ? "upper_witness" : "lower_connectivity"},
           {"value", c.value},
           {"model", fault_model_to_json(c.model)},
           {"detail", c.detail}};
  if (c.seed) doc["seed"] = vertex_set_to_labels(g, *c.seed);
  if (c.boundary) doc["boundary"] = vertex_set_to_labels(g, *c.boundary);
  if (c.closed) doc["closed"] = vertex_set_to_labels(g, *c.closed);
  if (c.kappa) doc["kappa"] = *c.kappa;
  return doc;
}

json witness_pair_to_json(const WitnessPair& w) {
  return json{{"family_tag", w.family_tag},
              {"graph", topology_spec_to_json(
                            {w.graph.info().family, w.graph.info().n, w.graph.info().k})},
              {"g", w.g},
              {"seed", vertex_set_to_labels(w.graph, w.seed)},
              {"boundary", vertex_set_to_labels(w.graph, w.boundary)},
              {"predicted_boundary_size", w.predicted_boundary_size},
              {"measured_boundary_size", w.boundary.size()},
              {"closed_size", w.closed.size()},
              {"boundary_matches_prediction", w.boundary_matches_prediction},
              {"two_component_split", w.two_component_split},
              {"extra_faulty", w.extra_faulty},
              {"remainder_nonempty", w.remainder_nonempty}};
}

json relation_audit_to_json(const RelationAuditReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{{"name", c.name},
                          {"pass", c.pass},
                          {"exhaustive", c.exhaustive},
                          {"detail", c.detail}});
  return json{{"diagnostic", diagnostic_model_name(r.diagnostic)},
              {"g_max", r.g_max},
              {"cap", r.cap},
              {"t_unrestricted", r.t_unrestricted},
              {"t_good_neighbor", r.t_good_neighbor},
              {"t_extra", r.t_extra},
              {"t_conditional", r.t_conditional},
              {"all_exhaustive", r.all_exhaustive},
              {"all_pass", r.all_pass()},
              {"checks", checks}};
}

json super_connected_to_json(const Graph& g, const SuperConnectedResult& r) {
  json doc{{"holds", r.holds}};
  doc["violating"] = r.violating ? vertex_set_to_labels(g, *r.violating) : json(nullptr);
  return doc;
}

json formula_catalog_to_json() {
  json out = json::array();
  for (const auto& e : formula_catalog()) {
    json entry{{"id", e.id},
               {"quantity", quantity_name(e.quantity)},
               {"family", family_name(e.family)},
               {"diagnostic", e.diagnostic ? json(diagnostic_model_name(*e.diagnostic))
                                           : json("both")},
               {"range", e.range_text},
               {"citation", e.statement},
               {"interval", e.interval}};
    if (!e.notes.empty()) entry["notes"] = e.notes;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace diaglab
