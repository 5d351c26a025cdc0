// Acceptance suite: runs every numbered acceptance check and prints one
// pass/fail line per criterion. Exits non-zero when any criterion fails.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "diaglab/verification.hpp"

namespace {

const char* criterion_titles[] = {
    "",
    "brute-force extra diagnosability of Q3 and Q4 under MM*",
    "explicit Q4 pair is 1-extra faulty and MM*-indistinguishable both ways",
    "brute-force connectivities match the closed forms",
    "witness boundary and closed-neighborhood sizes",
    "witness constructions split into two large components",
    "common-neighbor counts hold exhaustively on the four small arrangements",
    "deciders agree with the syndrome oracle (exhaustive Q3 + 1e5 random pairs)",
    "super-connectedness of Q4 at m = 5 with a violating set at m = 6",
    "relation audits on Q3 and S(4,2) under PMC and MM*",
    "formula catalog consistency and intersection closure",
};

}  // namespace

int main(int argc, char** argv) {
  diaglab::VerifyOptions options;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) options.seed = std::strtoull(argv[++i], nullptr, 10);
    if (arg == "--workers" && i + 1 < argc) options.workers = std::atoi(argv[++i]);
  }

  auto results = diaglab::run_acceptance(options);

  std::map<int, std::vector<const diaglab::CheckResult*>> by_criterion;
  for (const auto& r : results) by_criterion[r.criterion].push_back(&r);

  int failed = 0;
  for (const auto& [criterion, checks] : by_criterion) {
    bool pass = true;
    double seconds = 0.0;
    std::string failures;
    for (const auto* c : checks) {
      pass = pass && c->pass;
      seconds += c->seconds;
      if (!c->pass) failures += " [" + c->name + ": " + c->detail + "]";
    }
    if (!pass) ++failed;
    std::printf("%s criterion %d: %s (%zu checks, %.1fs)%s\n", pass ? "[PASS]" : "[FAIL]",
                criterion, criterion_titles[criterion], checks.size(), seconds,
                failures.c_str());
  }
  if (failed) std::printf("%d of %zu criteria failed\n", failed, by_criterion.size());
  return failed == 0 ? 0 : 1;
}
