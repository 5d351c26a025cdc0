#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diaglab/json_io.hpp"
#include "diaglab/verification.hpp"

namespace py = pybind11;
using namespace diaglab;

namespace {

VertexSet set_from_indices(const Graph& g, const std::vector<int>& members) {
  return VertexSet::from_indices(g.vertex_count(), members);
}

FaultModelSpec model_from(const std::string& kind, int g) {
  FaultModelSpec m{fault_model_kind_from_name(kind), g};
  m.validate();
  return m;
}

std::vector<std::vector<int>> components_py(const Graph& g, const std::vector<int>& f) {
  std::vector<std::vector<int>> out;
  for (const auto& c : components(g, set_from_indices(g, f))) out.push_back(c.members());
  return out;
}

std::string dump(const json& doc) { return doc.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "fault diagnosability toolkit for interconnection networks";

  py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<RangeError>(m, "FormulaRangeError", PyExc_ValueError);
  static py::exception<Error> base_error(m, "DiaglabError");
  py::register_exception<NoCutExists>(m, "NoCutExistsError");
  py::register_exception<NotApplicable>(m, "NotApplicableError");
  py::register_exception<NeedsIsolationArgument>(m, "NeedsIsolationArgumentError");
  py::register_exception<VerificationFailed>(m, "VerificationFailedError");

  py::class_<Graph>(m, "Graph")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def_property_readonly("family",
                             [](const Graph& g) { return family_name(g.info().family); })
      .def("labels",
           [](const Graph& g) {
             std::vector<std::string> out;
             for (int v = 0; v < g.vertex_count(); ++v) out.push_back(g.label(v));
             return out;
           })
      .def("label", &Graph::label)
      .def("index_of", [](const Graph& g, const std::string& l) { return g.index_of(l); })
      .def("neighbors", [](const Graph& g, int v) { return g.neighbor_list(v); })
      .def("degree", &Graph::degree)
      .def("edges", [](const Graph& g) { return g.edges(); })
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + family_name(g.info().family) + " |V|=" +
               std::to_string(g.vertex_count()) + " |E|=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("hypercube", &hypercube, py::arg("n"));
  m.def("nk_star", &nk_star, py::arg("n"), py::arg("k"));
  m.def("arrangement", &arrangement, py::arg("n"), py::arg("k"));

  m.def("open_neighborhood", [](const Graph& g, const std::vector<int>& s) {
    return open_neighborhood(g, set_from_indices(g, s)).members();
  });
  m.def("closed_neighborhood", [](const Graph& g, const std::vector<int>& s) {
    return closed_neighborhood(g, set_from_indices(g, s)).members();
  });
  m.def("components", &components_py);
  m.def("distance", [](const Graph& g, int u, int v) -> py::object {
    auto d = distance(g, u, v);
    return d ? py::cast(*d) : py::none();
  });
  m.def("common_neighbors", [](const Graph& g, int u, int v) {
    return common_neighbors(g, u, v).members();
  });
  m.def("is_vertex_cut", [](const Graph& g, const std::vector<int>& f) {
    return is_vertex_cut(g, set_from_indices(g, f));
  });
  m.def("decompose_by_last_symbol", [](const Graph& g) {
    std::map<int, std::vector<int>> out;
    for (const auto& [sym, block] : decompose_by_last_symbol(g)) out[sym] = block.members();
    return out;
  });
  m.def("hypercube_bit_split", [](const Graph& g, int bit) {
    auto [zeros, ones] = hypercube_bit_split(g, bit);
    return std::pair{zeros.members(), ones.members()};
  });

  m.def("is_faulty_set", [](const Graph& g, const std::vector<int>& f, const std::string& kind,
                            int gg) { return is_faulty_set(g, set_from_indices(g, f),
                                                           model_from(kind, gg)); },
        py::arg("graph"), py::arg("fault_set"), py::arg("kind"), py::arg("g") = 0);
  m.def("is_m_cut", [](const Graph& g, const std::vector<int>& f, const std::string& kind,
                       int gg) { return is_m_cut(g, set_from_indices(g, f),
                                                 model_from(kind, gg)); },
        py::arg("graph"), py::arg("fault_set"), py::arg("kind"), py::arg("g") = 0);
  m.def("m_connectivity_json", [](const Graph& g, const std::string& kind, int gg,
                                  std::optional<int> cap) {
          return dump(connectivity_result_to_json(g, m_connectivity(g, model_from(kind, gg),
                                                                    cap)));
        },
        py::arg("graph"), py::arg("kind"), py::arg("g") = 0,
        py::arg("cap") = std::optional<int>{});
  m.def("super_connected_check_json", [](const Graph& g, int mm_, int q) {
    return dump(super_connected_to_json(g, super_connected_check(g, mm_, q)));
  });

  m.def("pmc_distinguishable_json", [](const Graph& g, const std::vector<int>& f1,
                                       const std::vector<int>& f2) {
    return dump(verdict_to_json(
        g, pmc_distinguishable(g, set_from_indices(g, f1), set_from_indices(g, f2))));
  });
  m.def("mmstar_distinguishable_json", [](const Graph& g, const std::vector<int>& f1,
                                          const std::vector<int>& f2) {
    return dump(verdict_to_json(
        g, mmstar_distinguishable(g, set_from_indices(g, f1), set_from_indices(g, f2))));
  });
  m.def("syndrome_oracle_distinguishable",
        [](const Graph& g, const std::vector<int>& f1, const std::vector<int>& f2,
           const std::string& model) {
          return syndrome_oracle_distinguishable(g, set_from_indices(g, f1),
                                                 set_from_indices(g, f2),
                                                 diagnostic_model_from_name(model));
        });

  m.def("brute_force_diagnosability_json",
        [](const Graph& g, const std::string& kind, int gg, const std::string& model, int cap,
           int workers) {
          auto r = brute_force_diagnosability(g, model_from(kind, gg),
                                              diagnostic_model_from_name(model), cap, workers);
          return dump(diagnosability_result_to_json(g, r));
        },
        py::arg("graph"), py::arg("kind"), py::arg("g"), py::arg("model"), py::arg("cap"),
        py::arg("workers") = 1);
  m.def("default_diagnosability_cap", [](const Graph& g, const std::string& kind, int gg) {
    return default_diagnosability_cap(g, model_from(kind, gg));
  });

  m.def("hypercube_star_witness_json",
        [](int n, int g) { return dump(witness_pair_to_json(hypercube_star_witness(n, g))); });
  m.def("nk_star_witness_json", [](int n, int k, int g) {
    return dump(witness_pair_to_json(nk_star_witness(n, k, g)));
  });
  m.def("arrangement_witness_json", [](int n, int k, const std::string& shape) {
    return dump(witness_pair_to_json(
        arrangement_witness(n, k, arrangement_shape_from_name(shape))));
  });
  m.def("q4_indistinguishable_pair", [] {
    auto [f1, f2] = q4_indistinguishable_pair();
    return std::pair{f1.members(), f2.members()};
  });

  m.def("evaluate_formula", &evaluate_formula, py::arg("id"), py::arg("n"),
        py::arg("k") = std::optional<int>{}, py::arg("g") = std::optional<int>{});
  m.def("evaluate_formula_interval", &evaluate_formula_interval, py::arg("id"), py::arg("n"),
        py::arg("k") = std::optional<int>{}, py::arg("g") = std::optional<int>{});
  m.def("formula_catalog_json", [] { return dump(formula_catalog_to_json()); });

  m.def("graph_to_json", [](const Graph& g) { return dump(graph_to_json(g)); });
  m.def("graph_from_json", [](const std::string& text) {
    return graph_from_json(json::parse(text));
  });

  m.def("run_verification_json", [](const std::string& suite, std::uint64_t seed, int workers) {
    VerifyOptions options{seed, workers};
    auto results = suite == "all" ? run_all_suites(options)
                                  : run_suite(suite_from_name(suite), options);
    json out = json::array();
    for (const auto& r : results)
      out.push_back(json{{"name", r.name},
                         {"suite", suite_name(r.suite)},
                         {"criterion", r.criterion},
                         {"pass", r.pass},
                         {"detail", r.detail}});
    return dump(out);
  }, py::arg("suite") = "all", py::arg("seed") = 42, py::arg("workers") = 1);
}
