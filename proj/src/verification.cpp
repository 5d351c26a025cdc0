#include "diaglab/verification.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include "diaglab/diagnosability.hpp"
#include "diaglab/distinguishability.hpp"
#include "diaglab/fault_model.hpp"
#include "diaglab/formulas.hpp"
#include "diaglab/topology.hpp"
#include "diaglab/witness.hpp"

namespace diaglab {

std::string suite_name(Suite s) {
  switch (s) {
    case Suite::Formulas: return "formulas";
    case Suite::Relations: return "relations";
    case Suite::Constructions: return "constructions";
    case Suite::Oracles: return "oracles";
  }
  return "formulas";
}

Suite suite_from_name(std::string_view name) {
  if (name == "formulas") return Suite::Formulas;
  if (name == "relations") return Suite::Relations;
  if (name == "constructions") return Suite::Constructions;
  if (name == "oracles") return Suite::Oracles;
  throw InvalidInput("unknown suite: " + std::string(name) +
                     " (expected formulas|relations|constructions|oracles|all)");
}

namespace {

struct Collector {
  std::vector<CheckResult> results;

  void run(Suite suite, int criterion, const std::string& name,
           const std::function<std::pair<bool, std::string>()>& body) {
    auto start = std::chrono::steady_clock::now();
    CheckResult r;
    r.name = name;
    r.suite = suite;
    r.criterion = criterion;
    try {
      auto [pass, detail] = body();
      r.pass = pass;
      r.detail = detail;
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
};

std::string set_text(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](int v) {
    if (!first) out += ",";
    first = false;
    out += g.label(v);
  });
  return out + "}";
}

VertexSet random_subset(const Graph& g, std::mt19937_64& rng, int max_size) {
  std::uniform_int_distribution<int> size_dist(0, max_size);
  std::uniform_int_distribution<int> vertex_dist(0, g.vertex_count() - 1);
  VertexSet s(g.vertex_count());
  int want = size_dist(rng);
  while (s.size() < want) s.add(vertex_dist(rng));
  return s;
}

// ---- constructions ----

void check_constructions(Collector& c, const VerifyOptions&) {
  struct WitnessCase {
    std::string name;
    std::function<WitnessPair()> make;
    long boundary;
    long closed;  // -1 when not asserted
  };
  const std::vector<WitnessCase> cases = {
      {"hypercube star witness Q4 g=1", [] { return hypercube_star_witness(4, 1); }, 6, 8},
      {"arrangement p3 witness A(6,4)",
       [] { return arrangement_witness(6, 4, ArrangementShape::P3); }, 17, -1},
      {"arrangement p3 witness A(7,4)",
       [] { return arrangement_witness(7, 4, ArrangementShape::P3); }, 27, -1},
      {"arrangement c4 witness A(7,4)",
       [] { return arrangement_witness(7, 4, ArrangementShape::C4); }, 32, -1},
      {"nk-star witness S(5,3) g=1", [] { return nk_star_witness(5, 3, 1); }, 5, -1},
      {"nk-star witness S(5,3) g=2", [] { return nk_star_witness(5, 3, 2); }, 6, -1},
  };

  for (const auto& wc : cases) {
    c.run(Suite::Constructions, 4, wc.name + ": boundary size", [&] {
      WitnessPair w = wc.make();
      bool pass = w.boundary.size() == wc.boundary && w.boundary_matches_prediction;
      std::string detail = "|N(Y)| = " + std::to_string(w.boundary.size()) + ", expected " +
                           std::to_string(wc.boundary);
      if (wc.closed >= 0) {
        pass = pass && w.closed.size() == wc.closed;
        detail += "; |N^c(Y)| = " + std::to_string(w.closed.size()) + ", expected " +
                  std::to_string(wc.closed);
      }
      return std::pair{pass, detail};
    });
    c.run(Suite::Constructions, 5, wc.name + ": validity", [&] {
      WitnessPair w = wc.make();
      auto comps = components(w.graph, w.boundary);
      bool pass = w.two_component_split && w.extra_faulty && w.remainder_nonempty &&
                  comps.size() == 2;
      std::string detail = std::to_string(comps.size()) + " components, sizes";
      for (const auto& comp : comps) detail += " " + std::to_string(comp.size());
      detail += "; need two of size >= " + std::to_string(w.g + 1) +
                "; remainder nonempty: " + (w.remainder_nonempty ? "yes" : "no");
      return std::pair{pass, detail};
    });
  }

  c.run(Suite::Constructions, 6, "common-neighbor counts exhaustive (A42, A43, A52, A53)", [&] {
    std::ostringstream detail;
    bool pass = true;
    for (auto [n, k] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}}) {
      Graph a = arrangement(n, k);
      long counterexamples = 0;
      std::string first;
      for (int u = 0; u < a.vertex_count(); ++u) {
        for (int v = u + 1; v < a.vertex_count(); ++v) {
          auto d = distance(a, u, v);
          int common = common_neighbors(a, u, v).size();
          int expected = 0;
          if (*d == 1)
            expected = n - k - 1;
          else if (*d == 2)
            expected = n >= k + 2 ? 2 : 1;
          if (common != expected) {
            ++counterexamples;
            if (first.empty())
              first = "(" + a.label(u) + ", " + a.label(v) + "): d=" + std::to_string(*d) +
                      ", common=" + std::to_string(common) + ", stated=" +
                      std::to_string(expected);
          }
        }
      }
      detail << "A(" << n << "," << k << "): " << counterexamples << " counterexamples";
      if (!first.empty()) detail << " e.g. " << first;
      detail << "; ";
      pass = pass && counterexamples == 0;
    }
    if (!pass)
      detail << "empirical law: at d=2 the count is 2 only when the two differing positions "
                "share no symbol across the pair, else 1";
    return std::pair{pass, detail.str()};
  });

  c.run(Suite::Constructions, 0, "refined d=2 common-neighbor law exhaustive", [&] {
    for (auto [n, k] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}, {6, 4}}) {
      Graph a = arrangement(n, k);
      for (int u = 0; u < a.vertex_count(); ++u) {
        for (int v = u + 1; v < a.vertex_count(); ++v) {
          auto d = distance(a, u, v);
          int common = common_neighbors(a, u, v).size();
          int expected;
          if (*d == 1)
            expected = n - k - 1;
          else if (*d >= 3)
            expected = 0;
          else {
            auto pu = parse_permutation_label(a.label(u));
            auto pv = parse_permutation_label(a.label(v));
            std::vector<int> diff;
            for (int i = 0; i < k; ++i)
              if (pu[static_cast<std::size_t>(i)] != pv[static_cast<std::size_t>(i)])
                diff.push_back(i);
            if (diff.size() != 2) return std::pair{false, std::string("d=2 pair differing in ") +
                                                              std::to_string(diff.size()) +
                                                              " positions"};
            auto i = static_cast<std::size_t>(diff[0]), j = static_cast<std::size_t>(diff[1]);
            expected = (pv[i] != pu[j] ? 1 : 0) + (pv[j] != pu[i] ? 1 : 0);
          }
          if (common != expected)
            return std::pair{false, "violation at (" + a.label(u) + ", " + a.label(v) + ")"};
        }
      }
    }
    return std::pair{true, std::string("holds on A(4,2), A(4,3), A(5,2), A(5,3), A(6,2), A(6,4)")};
  });

  c.run(Suite::Constructions, 0, "c3 seed yields a larger boundary than p3 on A(6,4)", [&] {
    auto p3 = arrangement_witness(6, 4, ArrangementShape::P3);
    auto c3 = arrangement_witness(6, 4, ArrangementShape::C3);
    bool pass = c3.boundary.size() == 18 && p3.boundary.size() == 17 &&
                c3.boundary.size() > p3.boundary.size();
    return std::pair{pass, "c3: " + std::to_string(c3.boundary.size()) +
                               ", p3: " + std::to_string(p3.boundary.size())};
  });
}

// ---- oracles ----

void check_oracles(Collector& c, const VerifyOptions& options) {
  c.run(Suite::Oracles, 2, "explicit Q4 pair: 1-extra faulty and MM*-indistinguishable", [&] {
    Graph q4 = hypercube(4);
    auto [f1, f2] = q4_indistinguishable_pair();
    FaultModelSpec extra1 = FaultModelSpec::extra(1);
    bool faulty1 = is_faulty_set(q4, f1, extra1);
    bool faulty2 = is_faulty_set(q4, f2, extra1);
    bool decider = !mmstar_distinguishable(q4, f1, f2).distinguishable;
    bool oracle = !syndrome_oracle_distinguishable(q4, f1, f2, DiagnosticModel::MMstar);
    bool pass = faulty1 && faulty2 && decider && oracle && f1.size() == 6 && f2.size() == 6;
    return std::pair{pass, std::string("1-extra: ") + (faulty1 && faulty2 ? "both" : "NOT both") +
                               "; decider indistinguishable: " + (decider ? "yes" : "no") +
                               "; syndrome oracle indistinguishable: " + (oracle ? "yes" : "no")};
  });

  c.run(Suite::Oracles, 7, "decider == syndrome oracle on all Q3 pairs of size <= 3", [&] {
    Graph q3 = hypercube(3);
    std::vector<VertexSet> subsets;
    for (int mask = 0; mask < (1 << 8); ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) > 3) continue;
      subsets.push_back(VertexSet::from_mask64(8, static_cast<std::uint64_t>(mask)));
    }
    long pairs = 0;
    for (const auto& f1 : subsets) {
      for (const auto& f2 : subsets) {
        if (f1 == f2) continue;
        ++pairs;
        auto pv = pmc_distinguishable(q3, f1, f2);
        if (pv.distinguishable != syndrome_oracle_distinguishable(q3, f1, f2, DiagnosticModel::PMC))
          return std::pair{false, "PMC disagreement at " + set_text(q3, f1) + " vs " +
                                      set_text(q3, f2)};
        if (pv.distinguishable && !witness_valid(q3, f1, f2, pv))
          return std::pair{false, "invalid PMC witness at " + set_text(q3, f1)};
        auto mv = mmstar_distinguishable(q3, f1, f2);
        if (mv.distinguishable !=
            syndrome_oracle_distinguishable(q3, f1, f2, DiagnosticModel::MMstar))
          return std::pair{false, "MM* disagreement at " + set_text(q3, f1) + " vs " +
                                      set_text(q3, f2)};
        if (mv.distinguishable && !witness_valid(q3, f1, f2, mv))
          return std::pair{false, "invalid MM* witness at " + set_text(q3, f1)};
      }
    }
    return std::pair{true, std::to_string(pairs) + " ordered pairs, zero disagreements"};
  });

  for (const auto& [label, make] :
       {std::pair<std::string, std::function<Graph()>>{"S(4,2)", [] { return nk_star(4, 2); }},
        {"A(4,2)", [] { return arrangement(4, 2); }}}) {
    c.run(Suite::Oracles, 7, "decider == syndrome oracle on 1e5 random pairs in " + label, [&] {
      Graph g = make();
      std::mt19937_64 rng(options.seed ^ std::hash<std::string>{}(label));
      long done = 0, disagreements = 0;
      while (done < 100000) {
        VertexSet f1 = random_subset(g, rng, 5);
        VertexSet f2 = random_subset(g, rng, 5);
        if (f1 == f2) continue;
        ++done;
        auto pv = pmc_distinguishable(g, f1, f2);
        if (pv.distinguishable != syndrome_oracle_distinguishable(g, f1, f2, DiagnosticModel::PMC))
          ++disagreements;
        auto mv = mmstar_distinguishable(g, f1, f2);
        if (mv.distinguishable !=
            syndrome_oracle_distinguishable(g, f1, f2, DiagnosticModel::MMstar))
          ++disagreements;
        if ((pv.distinguishable && !witness_valid(g, f1, f2, pv)) ||
            (mv.distinguishable && !witness_valid(g, f1, f2, mv)))
          ++disagreements;
      }
      return std::pair{disagreements == 0, std::to_string(done) + " pairs, " +
                                               std::to_string(disagreements) + " disagreements"};
    });
  }
}

// ---- relations / engine ----

void check_relations(Collector& c, const VerifyOptions& options) {
  c.run(Suite::Relations, 1, "brute force t_bar_1(Q3, MM*) == 3", [&] {
    auto r = brute_force_diagnosability(hypercube(3), FaultModelSpec::extra(1),
                                        DiagnosticModel::MMstar, 8, options.workers);
    return std::pair{r.t == 3 && r.exhaustive,
                     "t = " + std::to_string(r.t) + (r.exhaustive ? " (exact)" : " (capped)")};
  });
  c.run(Suite::Relations, 1, "brute force t_bar_1(Q4, MM*) == 5", [&] {
    auto r = brute_force_diagnosability(hypercube(4), FaultModelSpec::extra(1),
                                        DiagnosticModel::MMstar, 8, options.workers);
    bool sizes = r.extremal_pair && r.extremal_pair->first.size() == 6 &&
                 r.extremal_pair->second.size() == 6;
    return std::pair{r.t == 5 && r.exhaustive && sizes,
                     "t = " + std::to_string(r.t) + ", extremal pair sizes " +
                         (r.extremal_pair
                              ? std::to_string(r.extremal_pair->first.size()) + "/" +
                                    std::to_string(r.extremal_pair->second.size())
                              : std::string("none"))};
  });

  struct KappaCase {
    std::string name;
    std::function<Graph()> make;
    FaultModelSpec model;
    std::string formula_id;
    std::optional<int> k;
    int g;
    int expected;
  };
  const std::vector<KappaCase> kappa_cases = {
      {"kappa_bar_1(Q4)", [] { return hypercube(4); }, FaultModelSpec::extra(1),
       "kappa_bar_g_hypercube", std::nullopt, 1, 6},
      {"kappa_1(S(4,2))", [] { return nk_star(4, 2); }, FaultModelSpec::good_neighbor(1),
       "kappa_g_nk_star", 2, 1, 3},
      {"kappa_1(A(4,2))", [] { return arrangement(4, 2); }, FaultModelSpec::good_neighbor(1),
       "kappa_1_arrangement", 2, 1, 4},
  };
  for (const auto& kc : kappa_cases) {
    c.run(Suite::Relations, 3, kc.name + " brute force matches the closed form", [&] {
      Graph g = kc.make();
      auto r = m_connectivity(g, kc.model);
      long formula = evaluate_formula(kc.formula_id, g.info().n, kc.k, kc.g);
      bool pass = r.kappa && *r.kappa == kc.expected && formula == kc.expected && r.exhaustive &&
                  r.witness_cut && is_m_cut(g, *r.witness_cut, kc.model);
      return std::pair{pass, "brute force " +
                                 (r.kappa ? std::to_string(*r.kappa) : std::string("none")) +
                                 ", formula " + std::to_string(formula) + ", expected " +
                                 std::to_string(kc.expected)};
    });
  }

  c.run(Suite::Relations, 8, "Q4 is super 5-vertex connected of order 1", [&] {
    auto r = super_connected_check(hypercube(4), 5, 1);
    return std::pair{r.holds, r.holds ? std::string("holds for every |F| <= 5")
                                      : "violated by " + set_text(hypercube(4), *r.violating)};
  });
  c.run(Suite::Relations, 8, "Q4 fails super 6-vertex connectedness of order 1 with a witness",
        [&] {
          Graph q4 = hypercube(4);
          auto r = super_connected_check(q4, 6, 1);
          if (r.holds || !r.violating) return std::pair{false, std::string("no violation found")};
          auto comps = components(q4, *r.violating);
          int largest = 0, total = 0;
          for (const auto& comp : comps) {
            largest = std::max(largest, comp.size());
            total += comp.size();
          }
          bool valid = comps.size() >= 2 && total - largest > 1 && r.violating->size() == 6;
          return std::pair{valid, "violating F = " + set_text(q4, *r.violating) + " leaves " +
                                      std::to_string(total - largest) +
                                      " vertices outside the largest component"};
        });

  for (const auto& [label, criterion, make] :
       {std::tuple<std::string, int, std::function<Graph()>>{"Q3", 9,
                                                             [] { return hypercube(3); }},
        {"S(4,2)", 9, [] { return nk_star(4, 2); }},
        {"A(4,2)", 0, [] { return arrangement(4, 2); }}}) {
    for (auto d : {DiagnosticModel::PMC, DiagnosticModel::MMstar}) {
      c.run(Suite::Relations, criterion,
            "relation audit on " + label + " under " + diagnostic_model_name(d), [&] {
              auto report = relation_audit(make(), d, 1, 6, options.workers);
              std::ostringstream detail;
              detail << "t=" << report.t_unrestricted << " t_1=" << report.t_good_neighbor[1]
                     << " t-bar_1=" << report.t_extra[1] << " t_c=" << report.t_conditional
                     << (report.all_exhaustive ? "" : " (capped)");
              for (const auto& chk : report.checks)
                if (!chk.pass) detail << "; FAIL " << chk.name << " (" << chk.detail << ")";
              return std::pair{report.all_pass() && report.all_exhaustive, detail.str()};
            });
    }
  }

  c.run(Suite::Relations, 0, "larger-instance connectivities match the closed forms", [&] {
    struct Case {
      std::string name;
      Graph g;
      FaultModelSpec m;
      std::string formula_id;
      std::optional<int> k;
      int gparam;
    };
    std::vector<Case> cases;
    cases.push_back({"kappa_bar_1(S(5,3))", nk_star(5, 3), FaultModelSpec::extra(1),
                     "kappa_bar_g_nk_star", 3, 1});
    cases.push_back({"kappa_bar_1(Q5)", hypercube(5), FaultModelSpec::extra(1),
                     "kappa_bar_g_hypercube", std::nullopt, 1});
    cases.push_back({"kappa_1(A(5,2))", arrangement(5, 2), FaultModelSpec::good_neighbor(1),
                     "kappa_1_arrangement", 2, 1});
    std::string detail;
    for (const auto& kc : cases) {
      auto r = m_connectivity(kc.g, kc.m);
      long formula = evaluate_formula(kc.formula_id, kc.g.info().n, kc.k, kc.gparam);
      if (!r.kappa || *r.kappa != formula || !is_m_cut(kc.g, *r.witness_cut, kc.m))
        return std::pair{false, kc.name + ": brute force " +
                                    (r.kappa ? std::to_string(*r.kappa) : std::string("none")) +
                                    " vs formula " + std::to_string(formula)};
      detail += kc.name + " = " + std::to_string(*r.kappa) + "; ";
    }
    return std::pair{true, detail};
  });

  c.run(Suite::Relations, 0, "extra diagnosability of A(5,2) and S(5,2) under PMC", [&] {
    auto a = brute_force_diagnosability(arrangement(5, 2), FaultModelSpec::extra(1),
                                        DiagnosticModel::PMC, 10, options.workers);
    long fa = evaluate_formula("t_bar_1_arrangement_pmc", 5, 2);
    auto s = brute_force_diagnosability(nk_star(5, 2), FaultModelSpec::extra(1),
                                        DiagnosticModel::PMC, 7, options.workers);
    long fs = evaluate_formula("t_bar_1_nk_star", 5, 2);
    bool pass = a.exhaustive && a.t == fa && s.exhaustive && s.t == fs;
    return std::pair{pass, "A(5,2): " + std::to_string(a.t) + " vs formula " +
                               std::to_string(fa) + "; S(5,2): " + std::to_string(s.t) +
                               " vs formula " + std::to_string(fs)};
  });

  c.run(Suite::Relations, 0, "S(4,3) PMC values at the k >= 3 range corner", [&] {
    Graph s43 = nk_star(4, 3);
    auto t1 = brute_force_diagnosability(s43, FaultModelSpec::good_neighbor(1),
                                         DiagnosticModel::PMC, 6, options.workers);
    auto tbar1 = brute_force_diagnosability(s43, FaultModelSpec::extra(1),
                                            DiagnosticModel::PMC, 6, options.workers);
    auto tc = brute_force_diagnosability(s43, FaultModelSpec::conditional(),
                                         DiagnosticModel::PMC, 7, options.workers);
    long formula = evaluate_formula("t_1_nk_star", 4, 3);
    // t_1 and t-bar_1 land on n+k-2; the conditional value escapes n+2k-5 here
    // (no conditional pair exists below the cap; see the catalog entry note)
    bool pass = t1.exhaustive && t1.t == formula && tbar1.exhaustive && tbar1.t == formula &&
                !tc.exhaustive && tc.t == 7;
    return std::pair{pass, "t_1 = " + std::to_string(t1.t) + ", t-bar_1 = " +
                               std::to_string(tbar1.t) + " (closed form " +
                               std::to_string(formula) + "); t_c > " + std::to_string(tc.t - 1) +
                               " though the n+2k-5 form says 5"};
  });

  c.run(Suite::Relations, 0, "MM* extra diagnosability of S(n,2) stops at n-1", [&] {
    // the closed form n+k-2 over-reaches at k = 2 under MM*: an isolated
    // survivor next to both private sides caps t at the unrestricted value
    auto s42 = brute_force_diagnosability(nk_star(4, 2), FaultModelSpec::extra(1),
                                          DiagnosticModel::MMstar, 5, options.workers);
    auto s52 = brute_force_diagnosability(nk_star(5, 2), FaultModelSpec::extra(1),
                                          DiagnosticModel::MMstar, 5, options.workers);
    bool pass = s42.exhaustive && s42.t == 3 && s52.exhaustive && s52.t == 4;
    return std::pair{pass, "S(4,2): " + std::to_string(s42.t) + " (closed form says 4); " +
                               "S(5,2): " + std::to_string(s52.t) + " (closed form says 5)"};
  });

  c.run(Suite::Relations, 0, "relation audit on Q4 with pinned values (both models)", [&] {
    auto pmc = relation_audit(hypercube(4), DiagnosticModel::PMC, 1, 8, options.workers);
    auto mm = relation_audit(hypercube(4), DiagnosticModel::MMstar, 1, 8, options.workers);
    bool pass = pmc.all_pass() && pmc.all_exhaustive && mm.all_pass() && mm.all_exhaustive &&
                pmc.t_unrestricted == 4 && pmc.t_good_neighbor[1] == 7 && pmc.t_extra[1] == 7 &&
                pmc.t_conditional == 7 && mm.t_unrestricted == 4 && mm.t_good_neighbor[1] == 5 &&
                mm.t_extra[1] == 5 && mm.t_conditional == 5;
    return std::pair{pass,
                     "pmc: t=" + std::to_string(pmc.t_unrestricted) + " t_1=" +
                         std::to_string(pmc.t_good_neighbor[1]) + " t_c=" +
                         std::to_string(pmc.t_conditional) + "; mmstar: t=" +
                         std::to_string(mm.t_unrestricted) + " t_1=" +
                         std::to_string(mm.t_good_neighbor[1]) + " t_c=" +
                         std::to_string(mm.t_conditional)};
  });

  c.run(Suite::Relations, 0, "lower certificate is tight where the witness is not (A(4,2))",
        [&] {
          Graph a42 = arrangement(4, 2);
          FaultModelSpec extra1 = FaultModelSpec::extra(1);
          auto kappa = m_connectivity(a42, extra1);
          auto lower =
              lower_bound_certificate(a42, extra1, DiagnosticModel::PMC, *kappa.kappa);
          VertexSet edge(a42.vertex_count());
          edge.add(0);
          edge.add(a42.neighbor_list(0).front());
          auto upper = upper_bound_from_witness(a42, edge, extra1);
          auto brute =
              brute_force_diagnosability(a42, extra1, DiagnosticModel::PMC, 7, options.workers);
          bool pass = lower.value == 5 && upper.value == 6 && brute.t == 5 && brute.exhaustive;
          return std::pair{pass, "lower " + std::to_string(lower.value) + ", upper " +
                                     std::to_string(upper.value) + ", brute force " +
                                     std::to_string(brute.t)};
        });

  c.run(Suite::Relations, 0, "certificate sandwich pins t_bar_1(Q4, PMC) = 7", [&] {
    Graph q4 = hypercube(4);
    FaultModelSpec extra1 = FaultModelSpec::extra(1);
    auto witness = hypercube_star_witness(4, 1);
    auto upper = upper_bound_from_witness(q4, witness.seed, extra1);
    auto kappa = m_connectivity(q4, extra1);
    auto lower = lower_bound_certificate(q4, extra1, DiagnosticModel::PMC, *kappa.kappa);
    auto brute =
        brute_force_diagnosability(q4, extra1, DiagnosticModel::PMC, 8, options.workers);
    bool pass = upper.value == 7 && lower.value == 7 && brute.t == 7 && brute.exhaustive;
    return std::pair{pass, "upper " + std::to_string(upper.value) + ", lower " +
                               std::to_string(lower.value) + ", brute force " +
                               std::to_string(brute.t)};
  });
}

// ---- formulas ----

void check_formulas(Collector& c, const VerifyOptions& options) {
  c.run(Suite::Formulas, 10, "extended hypercube connectivity agrees on the overlap", [&] {
    auto reports = hypercube_extended_overlap_reports(5, 12);
    long bad = 0;
    std::string first;
    for (const auto& r : reports)
      if (!r.pass) {
        ++bad;
        if (first.empty()) first = r.detail;
      }
    return std::pair{bad == 0, std::to_string(reports.size()) + " (n, g) points, " +
                                   std::to_string(bad) + " mismatches" +
                                   (first.empty() ? "" : "; first: " + first)};
  });

  c.run(Suite::Formulas, 10, "t-bar entries equal kappa-bar + g on shared ranges", [&] {
    long checked = 0;
    auto expect = [&](long a, long b) {
      ++checked;
      return a == b;
    };
    for (int n = 4; n <= 16; ++n)
      for (int g = 1; g <= n - 3; ++g)
        if (!expect(evaluate_formula("t_bar_g_hypercube_pmc", n, std::nullopt, g),
                    evaluate_formula("kappa_bar_g_hypercube", n, std::nullopt, g) + g))
          return std::pair{false, "hypercube pmc mismatch at n=" + std::to_string(n)};
    for (int n = 9; n <= 13; ++n)
      for (int g = 0; g <= 3 * n - 7; ++g)
        if (!expect(evaluate_formula("t_bar_g_hypercube_pmc_extended", n, std::nullopt, g),
                    evaluate_formula("kappa_bar_g_hypercube_extended", n, std::nullopt, g) + g))
          return std::pair{false, "extended hypercube mismatch at n=" + std::to_string(n)};
    for (int n = 4; n <= 12; ++n)
      for (int k = 3; k < n; ++k)
        for (int g = 1; g <= n - k; ++g) {
          if (!expect(evaluate_formula("t_bar_g_nk_star_pmc", n, k, g),
                      evaluate_formula("kappa_bar_g_nk_star", n, k, g) + g))
            return std::pair{false, std::string("nk-star pmc mismatch")};
          if (!expect(evaluate_formula("t_bar_g_nk_star_mmstar", n, k, g),
                      evaluate_formula("kappa_bar_g_nk_star", n, k, g) + g))
            return std::pair{false, std::string("nk-star mmstar mismatch")};
        }
    for (int n = 8; n <= 14; ++n)
      for (int k = 3; k <= n - 5; ++k)
        if (!expect(evaluate_formula("t_bar_2_arrangement", n, k),
                    evaluate_formula("kappa_bar_2_arrangement", n, k) + 2))
          return std::pair{false, std::string("arrangement g=2 mismatch")};
    for (int n = 7; n <= 14; ++n)
      for (int k = 4; k <= n - 3; ++k)
        if (!expect(evaluate_formula("t_bar_3_arrangement", n, k),
                    evaluate_formula("kappa_bar_3_arrangement", n, k) + 3))
          return std::pair{false, std::string("arrangement g=3 mismatch")};
    return std::pair{true, std::to_string(checked) + " identities hold"};
  });

  c.run(Suite::Formulas, 10, "intersection of extra faulty sets stays extra faulty", [&] {
    const std::vector<std::pair<std::string, std::function<Graph()>>> graphs = {
        {"Q3", [] { return hypercube(3); }},
        {"Q4", [] { return hypercube(4); }},
        {"S(4,2)", [] { return nk_star(4, 2); }},
        {"A(4,2)", [] { return arrangement(4, 2); }}};
    FaultModelSpec extra1 = FaultModelSpec::extra(1);
    for (const auto& [label, make] : graphs) {
      Graph g = make();
      std::mt19937_64 rng(options.seed ^ std::hash<std::string>{}(label));
      long done = 0;
      while (done < 1000) {
        VertexSet f1 = random_subset(g, rng, g.vertex_count() / 2);
        VertexSet f2 = random_subset(g, rng, g.vertex_count() / 2);
        if (!is_faulty_set(g, f1, extra1) || !is_faulty_set(g, f2, extra1)) continue;
        ++done;
        if (!is_faulty_set(g, f1 & f2, extra1))
          return std::pair{false, "closure violated in " + label + " by " + set_text(g, f1) +
                                      " and " + set_text(g, f2)};
      }
    }
    return std::pair{true, std::string("1000 faulty pairs per graph on Q3, Q4, S(4,2), A(4,2)")};
  });

  c.run(Suite::Formulas, 0, "catalog spot values", [&] {
    bool pass = evaluate_formula("t_bar_2_arrangement", 8, 3) == 34 &&
                evaluate_formula("kappa_bar_g_hypercube_extended", 9, std::nullopt, 18) == 61 &&
                evaluate_formula("t_bar_g_nk_star_pmc", 5, 3, 2) == 8 &&
                evaluate_formula("t_bar_g_hypercube_mmstar", 3, std::nullopt, 1) == 3 &&
                evaluate_formula("t_bar_g_hypercube_mmstar", 4, std::nullopt, 1) == 5;
    return std::pair{pass, std::string("five pinned catalog values")};
  });

  c.run(Suite::Formulas, 0, "extra diagnosability stays below good-neighbor at g=2", [&] {
    for (int n = 9; n <= 14; ++n)
      for (int k = 4; k <= n - 5; ++k)
        if (evaluate_formula("t_bar_2_arrangement", n, k) >=
            evaluate_formula("t_2_arrangement_mmstar", n, k))
          return std::pair{false, "not strict at n=" + std::to_string(n) +
                                      ", k=" + std::to_string(k)};
    return std::pair{true, std::string("strict on the shared range n in [9,14]")};
  });

  c.run(Suite::Formulas, 0, "range discipline", [&] {
    auto throws = [](auto&& fn) {
      try {
        fn();
        return false;
      } catch (const RangeError&) {
        return true;
      }
    };
    bool pass =
        throws([] { evaluate_formula("kappa_bar_g_hypercube", 3, std::nullopt, 1); }) &&
        throws([] { evaluate_formula("t_bar_2_arrangement", 7, 3); }) &&
        throws([] { evaluate_formula("kappa_g_nk_star", 5, 3, 4); }) &&
        throws([] { evaluate_formula("kappa_bar_g_hypercube_extended", 5, std::nullopt, 7); });
    return std::pair{pass, std::string("out-of-range evaluations raise range errors")};
  });
}

}  // namespace

std::vector<CheckResult> run_suite(Suite suite, const VerifyOptions& options) {
  Collector c;
  switch (suite) {
    case Suite::Formulas: check_formulas(c, options); break;
    case Suite::Relations: check_relations(c, options); break;
    case Suite::Constructions: check_constructions(c, options); break;
    case Suite::Oracles: check_oracles(c, options); break;
  }
  return std::move(c.results);
}

std::vector<CheckResult> run_all_suites(const VerifyOptions& options) {
  std::vector<CheckResult> all;
  for (Suite s : {Suite::Formulas, Suite::Relations, Suite::Constructions, Suite::Oracles}) {
    auto part = run_suite(s, options);
    all.insert(all.end(), part.begin(), part.end());
  }
  return all;
}

std::vector<CheckResult> run_acceptance(const VerifyOptions& options) {
  auto all = run_all_suites(options);
  std::vector<CheckResult> out;
  for (auto& r : all)
    if (r.criterion > 0) out.push_back(std::move(r));
  std::stable_sort(out.begin(), out.end(),
                   [](const CheckResult& a, const CheckResult& b) {
                     return a.criterion < b.criterion;
                   });
  return out;
}

}  // namespace diaglab
