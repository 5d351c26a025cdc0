#include "diaglab/diagnosability.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "mask_engine.hpp"

namespace diaglab {

namespace {

using detail::MaskGraph;

/// Candidate indistinguishable pair, ordered by total size then pair lexicon.
struct Candidate {
  std::uint64_t f1 = 0;  // normalized: the (size, lex)-smaller set
  std::uint64_t f2 = 0;
  bool present = false;

  static Candidate of(std::uint64_t a, std::uint64_t b) {
    int sa = std::popcount(a), sb = std::popcount(b);
    if (sb < sa || (sa == sb && detail::mask_lex_less(b, a))) std::swap(a, b);
    return {a, b, true};
  }

  bool better_than(const Candidate& o) const {
    if (!present) return false;
    if (!o.present) return true;
    int ta = std::popcount(f1) + std::popcount(f2);
    int tb = std::popcount(o.f1) + std::popcount(o.f2);
    if (ta != tb) return ta < tb;
    if (f1 != o.f1) return detail::mask_lex_less(f1, o.f1);
    if (f2 != o.f2) return detail::mask_lex_less(f2, o.f2);
    return false;
  }
};

void merge_best(Candidate& best, const Candidate& other) {
  if (other.better_than(best)) best = other;
}

std::vector<std::vector<std::uint64_t>> faulty_sets_by_size(const MaskGraph& mg,
                                                            const FaultModelSpec& m, int cap) {
  std::vector<std::vector<std::uint64_t>> out(static_cast<std::size_t>(cap) + 1);
  for (int size = 0; size <= cap; ++size) {
    detail::for_each_mask_combination(0, mg.n, size, [&](std::uint64_t f) {
      if (mg.faulty(f, m)) out[static_cast<std::size_t>(size)].push_back(f);
    });
  }
  return out;
}

/// Runs fn(worker_index) on `workers` threads; fn must only touch its own slot.
void run_workers(int workers, const std::function<void(int)>& fn) {
  if (workers <= 1) {
    fn(0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) pool.emplace_back(fn, w);
  for (auto& th : pool) th.join();
}

/// One PMC level: does an indistinguishable M-faulty pair with max size s
/// exist? A pair is PMC-indistinguishable iff N(delta) is contained in the
/// shared part, so enumerate delta, force I >= N(delta), pad with free
/// vertices inside the budget and split delta across the two sets.
Candidate pmc_level(const MaskGraph& mg, const FaultModelSpec& m, int s, int workers) {
  const int anchor_lo = mg.transitive ? 1 : 0;

  // materialize feasible deltas: ceil(|delta|/2) + |N(delta)| must fit
  std::vector<std::uint64_t> deltas;
  const int max_ds = std::min(mg.n, 2 * s);
  for (int ds = 1; ds <= max_ds; ++ds) {
    auto consider = [&](std::uint64_t delta) {
      int base = std::popcount(mg.neighborhood(delta));
      if ((ds + 1) / 2 + base <= s) deltas.push_back(delta);
    };
    if (mg.transitive) {
      // vertex 0 is anchored into delta
      detail::for_each_mask_combination(anchor_lo, mg.n, ds - 1,
                                        [&](std::uint64_t rest) { consider(rest | 1); });
    } else {
      detail::for_each_mask_combination(0, mg.n, ds, consider);
    }
  }

  std::vector<Candidate> best(static_cast<std::size_t>(std::max(workers, 1)));
  run_workers(workers, [&](int w) {
    Candidate local;
    for (std::size_t i = static_cast<std::size_t>(w); i < deltas.size();
         i += static_cast<std::size_t>(std::max(workers, 1))) {
      std::uint64_t delta = deltas[i];
      const int ds = std::popcount(delta);
      const std::uint64_t nd = mg.neighborhood(delta);
      const int base = std::popcount(nd);
      const std::uint64_t free = mg.full & ~delta & ~nd;
      const int budget = s - (ds + 1) / 2 - base;

      std::vector<int> dbits;
      std::uint64_t rest = delta;
      while (rest) {
        dbits.push_back(std::countr_zero(rest));
        rest &= rest - 1;
      }

      // free bits, ascending
      std::vector<int> fbits;
      rest = free;
      while (rest) {
        fbits.push_back(std::countr_zero(rest));
        rest &= rest - 1;
      }

      for (int esz = 0; esz <= budget && esz <= static_cast<int>(fbits.size()); ++esz) {
        detail::for_each_mask_combination(0, static_cast<int>(fbits.size()), esz,
                                          [&](std::uint64_t pick) {
          std::uint64_t extra = 0;
          std::uint64_t p = pick;
          while (p) {
            int b = std::countr_zero(p);
            p &= p - 1;
            extra |= std::uint64_t{1} << fbits[static_cast<std::size_t>(b)];
          }
          const std::uint64_t shared = nd | extra;
          const int shared_size = base + esz;
          // splits: lowest delta bit stays on the f2 side, pairs are unordered
          const std::uint64_t splits = std::uint64_t{1} << (ds - 1);
          for (std::uint64_t sp = 0; sp < splits; ++sp) {
            std::uint64_t d1 = 0;
            for (int j = 1; j < ds; ++j)
              if (sp >> (j - 1) & 1) d1 |= std::uint64_t{1} << dbits[static_cast<std::size_t>(j)];
            std::uint64_t d2 = delta & ~d1;
            if (std::max(std::popcount(d1), std::popcount(d2)) + shared_size > s) continue;
            std::uint64_t f1 = d1 | shared, f2 = d2 | shared;
            if (!mg.faulty(f1, m) || !mg.faulty(f2, m)) continue;
            merge_best(local, Candidate::of(f1, f2));
          }
        });
      }
    }
    best[static_cast<std::size_t>(w)] = local;
  });

  Candidate out;
  for (const auto& c : best) merge_best(out, c);
  return out;
}

/// One MM* level: scan pairs of pre-filtered faulty sets with |F1| = s,
/// |F2| <= s.
Candidate mm_level(const MaskGraph& mg, const std::vector<std::vector<std::uint64_t>>& faulty,
                   int s, int workers) {
  const auto& top = faulty[static_cast<std::size_t>(s)];
  std::vector<Candidate> best(static_cast<std::size_t>(std::max(workers, 1)));
  run_workers(workers, [&](int w) {
    Candidate local;
    for (std::size_t i = static_cast<std::size_t>(w); i < top.size();
         i += static_cast<std::size_t>(std::max(workers, 1))) {
      std::uint64_t f1 = top[i];
      for (int s2 = 0; s2 <= s; ++s2) {
        for (std::uint64_t f2 : faulty[static_cast<std::size_t>(s2)]) {
          if (f1 == f2) continue;
          if (s2 == s && f2 > f1) continue;  // unordered pairs once
          if (mg.transitive && !((f1 ^ f2) & 1)) continue;  // anchor 0 into delta
          if (mg.mm_indistinguishable(f1, f2)) merge_best(local, Candidate::of(f1, f2));
        }
      }
    }
    best[static_cast<std::size_t>(w)] = local;
  });
  Candidate out;
  for (const auto& c : best) merge_best(out, c);
  return out;
}

}  // namespace

int default_diagnosability_cap(const Graph& g, const FaultModelSpec& m) {
  return std::min(g.vertex_count(), default_connectivity_cap(g, m) + m.g + 2);
}

DiagnosabilityResult brute_force_diagnosability(const Graph& g, const FaultModelSpec& m,
                                                DiagnosticModel d, int cap, int workers,
                                                const std::function<void(int)>& on_level) {
  m.validate();
  if (cap < 1 || cap > g.vertex_count())
    throw InvalidInput("brute_force_diagnosability requires 1 <= cap <= |V|");
  if (workers < 1) throw InvalidInput("workers must be >= 1");
  if (components(g, g.empty_set()).size() != 1)
    throw InvalidInput("brute_force_diagnosability requires a connected graph");

  MaskGraph mg = MaskGraph::from(g);
  DiagnosabilityResult result;
  result.model = m;
  result.diagnostic = d;
  result.cap = cap;

  std::vector<std::vector<std::uint64_t>> faulty;
  if (d == DiagnosticModel::MMstar) faulty = faulty_sets_by_size(mg, m, cap);

  for (int s = 1; s <= cap; ++s) {
    if (on_level) on_level(s);
    Candidate c = d == DiagnosticModel::PMC ? pmc_level(mg, m, s, workers)
                                            : mm_level(mg, faulty, s, workers);
    if (c.present) {
      result.t = s - 1;
      result.exhaustive = true;
      VertexSet f1 = VertexSet::from_mask64(mg.n, c.f1);
      VertexSet f2 = VertexSet::from_mask64(mg.n, c.f2);
      // re-validate through the public predicates and both decision routes
      if (!is_faulty_set(g, f1, m) || !is_faulty_set(g, f2, m))
        throw Error("engine produced a pair violating the fault model");
      auto verdict = d == DiagnosticModel::PMC ? pmc_distinguishable(g, f1, f2)
                                               : mmstar_distinguishable(g, f1, f2);
      if (verdict.distinguishable || syndrome_oracle_distinguishable(g, f1, f2, d))
        throw Error("engine produced a distinguishable extremal pair");
      result.extremal_pair = {std::move(f1), std::move(f2)};
      return result;
    }
  }
  result.t = cap;
  result.exhaustive = false;
  return result;
}

BoundCertificate upper_bound_from_witness(const Graph& g, const VertexSet& y,
                                          const FaultModelSpec& m) {
  m.validate();
  if (m.kind != FaultModelKind::GoodNeighbor && m.kind != FaultModelKind::Extra)
    throw NotApplicable("the witness construction applies to the good-neighbor and extra models");
  if (y.empty()) throw InvalidInput("witness seed Y must be non-empty");
  if (y.size() >= g.vertex_count()) throw InvalidInput("witness seed Y must be a proper subset");

  VertexSet boundary = open_neighborhood(g, y);
  VertexSet closed = boundary | y;
  if (!is_faulty_set(g, boundary, m))
    throw VerificationFailed("N(Y) is not a " + m.name() + " faulty set");
  if (!is_faulty_set(g, closed, m))
    throw VerificationFailed("N^c(Y) is not a " + m.name() + " faulty set");
  if (closed.size() == g.vertex_count())
    throw VerificationFailed("N^c(Y) covers every vertex");

  BoundCertificate cert;
  cert.kind = BoundKind::UpperWitness;
  cert.model = m;
  cert.value = closed.size() - 1;
  cert.seed = y;
  cert.boundary = boundary;
  cert.closed = closed;
  cert.detail = "t <= |N^c(Y)| - 1 with |N^c(Y)| = " + std::to_string(closed.size());
  return cert;
}

BoundCertificate lower_bound_certificate(const Graph& g, const FaultModelSpec& m,
                                         DiagnosticModel d, int kappa) {
  m.validate();
  if (m.kind != FaultModelKind::GoodNeighbor && m.kind != FaultModelKind::Extra)
    throw InvalidInput("lower_bound_certificate requires the good-neighbor or extra model");
  if (m.g < 1) throw NotApplicable("the connectivity lower bound requires g >= 1");
  if (d == DiagnosticModel::MMstar && m.g == 1)
    throw NeedsIsolationArgument(
        "MM* with g = 1 needs a no-isolated-vertex argument beyond connectivity");
  if (g.vertex_count() <= 2 * (kappa + m.g))
    throw NotApplicable("cardinality check failed: |V| <= 2(kappa + g)");

  BoundCertificate cert;
  cert.kind = BoundKind::LowerConnectivity;
  cert.model = m;
  cert.kappa = kappa;
  cert.value = kappa + m.g;
  cert.detail = "|V| = " + std::to_string(g.vertex_count()) + " > " +
                std::to_string(2 * (kappa + m.g)) + " = 2(kappa + g)";
  return cert;
}

bool RelationAuditReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.pass; });
}

RelationAuditReport relation_audit(const Graph& g, DiagnosticModel d, int g_max, int size_cap,
                                   int workers) {
  if (g_max < 0) throw InvalidInput("relation_audit requires g_max >= 0");
  RelationAuditReport report;
  report.diagnostic = d;
  report.g_max = g_max;
  report.cap = size_cap;

  auto run = [&](const FaultModelSpec& m) {
    auto r = brute_force_diagnosability(g, m, d, size_cap, workers);
    report.all_exhaustive = report.all_exhaustive && r.exhaustive;
    return r.t;
  };

  report.t_unrestricted = run(FaultModelSpec::unrestricted());
  for (int gg = 0; gg <= g_max; ++gg) {
    report.t_good_neighbor.push_back(run(FaultModelSpec::good_neighbor(gg)));
    report.t_extra.push_back(run(FaultModelSpec::extra(gg)));
  }
  report.t_conditional = run(FaultModelSpec::conditional());

  auto add = [&](std::string name, bool pass, std::string detail) {
    report.checks.push_back({std::move(name), pass, report.all_exhaustive, std::move(detail)});
  };
  auto values = [](long a, long b) { return std::to_string(a) + " vs " + std::to_string(b); };

  for (int gg = 0; gg <= g_max; ++gg) {
    add("t <= t_" + std::to_string(gg),
        report.t_unrestricted <= report.t_good_neighbor[static_cast<std::size_t>(gg)],
        values(report.t_unrestricted, report.t_good_neighbor[static_cast<std::size_t>(gg)]));
    add("t <= t-bar_" + std::to_string(gg),
        report.t_unrestricted <= report.t_extra[static_cast<std::size_t>(gg)],
        values(report.t_unrestricted, report.t_extra[static_cast<std::size_t>(gg)]));
    add("t-bar_" + std::to_string(gg) + " <= t_" + std::to_string(gg),
        report.t_extra[static_cast<std::size_t>(gg)] <=
            report.t_good_neighbor[static_cast<std::size_t>(gg)],
        values(report.t_extra[static_cast<std::size_t>(gg)],
               report.t_good_neighbor[static_cast<std::size_t>(gg)]));
  }
  add("t <= t_c", report.t_unrestricted <= report.t_conditional,
      values(report.t_unrestricted, report.t_conditional));
  for (int gg = 1; gg <= g_max; ++gg) {
    add("t_" + std::to_string(gg - 1) + " <= t_" + std::to_string(gg),
        report.t_good_neighbor[static_cast<std::size_t>(gg - 1)] <=
            report.t_good_neighbor[static_cast<std::size_t>(gg)],
        values(report.t_good_neighbor[static_cast<std::size_t>(gg - 1)],
               report.t_good_neighbor[static_cast<std::size_t>(gg)]));
    add("t-bar_" + std::to_string(gg - 1) + " <= t-bar_" + std::to_string(gg),
        report.t_extra[static_cast<std::size_t>(gg - 1)] <=
            report.t_extra[static_cast<std::size_t>(gg)],
        values(report.t_extra[static_cast<std::size_t>(gg - 1)],
               report.t_extra[static_cast<std::size_t>(gg)]));
  }
  add("t_0 == t", report.t_good_neighbor[0] == report.t_unrestricted,
      values(report.t_good_neighbor[0], report.t_unrestricted));
  add("t-bar_0 == t", report.t_extra[0] == report.t_unrestricted,
      values(report.t_extra[0], report.t_unrestricted));
  if (g_max >= 1) {
    add("t-bar_1 == t_1", report.t_extra[1] == report.t_good_neighbor[1],
        values(report.t_extra[1], report.t_good_neighbor[1]));
    add("t_1 <= t_c", report.t_good_neighbor[1] <= report.t_conditional,
        values(report.t_good_neighbor[1], report.t_conditional));
    add("t-bar_1 <= t_c", report.t_extra[1] <= report.t_conditional,
        values(report.t_extra[1], report.t_conditional));
  }
  return report;
}

}  // namespace diaglab
