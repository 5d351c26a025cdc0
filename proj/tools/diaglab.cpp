#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "diaglab/json_io.hpp"
#include "diaglab/verification.hpp"

namespace {

using diaglab::json;

int env_workers() {
  if (const char* v = std::getenv("DIAGLAB_WORKERS")) {
    int w = std::atoi(v);
    if (w >= 1) return w;
  }
  return 1;
}

void emit(const json& doc, const std::string& out_path) {
  std::string text = doc.dump(2);
  text.push_back('\n');
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw diaglab::Error("cannot open output file " + out_path);
    f << text;
  }
}

diaglab::TopologySpec spec_from(const std::string& family, int n, int k) {
  diaglab::TopologySpec spec;
  spec.family = diaglab::family_from_name(family);
  spec.n = n;
  spec.k = k;
  spec.validate();
  return spec;
}

void print_verify_table(const std::vector<diaglab::CheckResult>& results) {
  char timing[32];
  for (const auto& r : results) {
    std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
    std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << suite_name(r.suite) << " | " << r.name
              << " (" << r.detail << ") [" << timing << "]\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fault diagnosability toolkit for interconnection networks"};
  app.require_subcommand(1);

  std::string family, out_path;
  int n = 0, k = 0;

  auto add_topology_flags = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "hypercube | nk-star | arrangement")->required();
    cmd->add_option("--n", n, "family parameter n")->required();
    cmd->add_option("--k", k, "family parameter k (nk-star and arrangement)");
    cmd->add_option("--out", out_path, "write the JSON document here instead of stdout");
  };

  auto* topology = app.add_subcommand("topology", "generate a topology as interchange JSON");
  add_topology_flags(topology);

  auto* diag = app.add_subcommand("diag", "brute-force M-diagnosability of a generated topology");
  add_topology_flags(diag);
  std::string fault = "unrestricted", model = "pmc";
  int g = 0, cap = 0, workers = env_workers();
  diag->add_option("--fault", fault, "unrestricted | conditional | g-good-neighbor | g-extra");
  diag->add_option("--g", g, "parameter g for the good-neighbor / extra models");
  diag->add_option("--model", model, "pmc | mmstar")->required();
  diag->add_option("--cap", cap, "search bound on faulty-set size (0 = automatic)");
  diag->add_option("--workers", workers, "parallel workers (default DIAGLAB_WORKERS or 1)");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  std::uint64_t seed = 42;
  int vworkers = env_workers();
  verify->add_option("--suite", suite, "formulas | relations | constructions | oracles | all");
  verify->add_option("--seed", seed, "seed for the randomized checks (default 42)");
  verify->add_option("--workers", vworkers, "parallel workers (default DIAGLAB_WORKERS or 1)");
  verify->add_option("--out", out_path, "write the JSON report here instead of stdout");

  auto* catalog = app.add_subcommand("catalog", "dump the closed-form formula catalog");
  catalog->add_option("--out", out_path, "write the JSON document here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (topology->parsed()) {
      emit(diaglab::graph_to_json(diaglab::make_topology(spec_from(family, n, k))), out_path);
      return 0;
    }

    if (diag->parsed()) {
      diaglab::Graph graph = diaglab::make_topology(spec_from(family, n, k));
      diaglab::FaultModelSpec m{diaglab::fault_model_kind_from_name(fault), g};
      m.validate();
      auto d = diaglab::diagnostic_model_from_name(model);
      if (cap <= 0) cap = diaglab::default_diagnosability_cap(graph, m);
      auto result = diaglab::brute_force_diagnosability(
          graph, m, d, cap, workers,
          [&](int level) { std::cerr << "searching max faulty-set size " << level << "\n"; });
      emit(diaglab::diagnosability_result_to_json(graph, result), out_path);
      return 0;
    }

    if (catalog->parsed()) {
      emit(diaglab::formula_catalog_to_json(), out_path);
      return 0;
    }

    // verify
    diaglab::VerifyOptions options{seed, vworkers};
    std::vector<diaglab::CheckResult> results =
        suite == "all" ? diaglab::run_all_suites(options)
                       : diaglab::run_suite(diaglab::suite_from_name(suite), options);
    print_verify_table(results);
    json checks = json::array();
    bool all_pass = true;
    for (const auto& r : results) {
      all_pass = all_pass && r.pass;
      checks.push_back(json{{"name", r.name},
                            {"suite", suite_name(r.suite)},
                            {"criterion", r.criterion},
                            {"pass", r.pass},
                            {"detail", r.detail}});
    }
    emit(json{{"suite", suite}, {"seed", seed}, {"all_pass", all_pass}, {"checks", checks}},
         out_path);
    return all_pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
