#include <doctest.h>

#include "diaglab/distinguishability.hpp"
#include "diaglab/fault_model.hpp"
#include "diaglab/topology.hpp"
#include "diaglab/witness.hpp"

using namespace diaglab;

namespace {
std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}
}  // namespace

TEST_CASE("hypercube star witness") {
  auto w = hypercube_star_witness(4, 1);
  CHECK(w.boundary.size() == 6);
  CHECK(w.closed.size() == 8);
  CHECK(w.fully_validated());

  auto w0 = hypercube_star_witness(4, 0);
  CHECK(w0.seed.size() == 1);
  CHECK(w0.boundary.size() == 4);

  auto w52 = hypercube_star_witness(5, 2);
  CHECK(w52.boundary.size() == 10);
  CHECK(w52.closed.size() == 13);

  for (auto [n, g] : {std::pair{4, 1}, {5, 1}, {5, 2}, {6, 3}, {7, 4}, {8, 5}}) {
    auto wit = hypercube_star_witness(n, g);
    CHECK(wit.boundary.size() == (g + 1) * (2 * (n - 1) - g) / 2 + 1);
    CHECK(wit.closed.size() == (g + 1) * (2 * n - g) / 2 + 1);
    CHECK(wit.fully_validated());
    auto comps = components(wit.graph, wit.boundary);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == wit.seed);
  }

  CHECK_THROWS_AS(hypercube_star_witness(3, 0), RangeError);
  CHECK_THROWS_AS(hypercube_star_witness(5, 3), RangeError);
}

TEST_CASE("hypercube witness leaves share two common neighbors") {
  auto w = hypercube_star_witness(5, 2);
  const Graph& q5 = w.graph;
  int u0 = q5.index_of("00000");
  int u1 = q5.index_of("01000");
  int u2 = q5.index_of("00100");
  VertexSet common = common_neighbors(q5, u1, u2);
  CHECK(common.size() == 2);
  CHECK(common.contains(u0));

  // the alternate seed from the worked Q4 example satisfies the same count
  Graph q4 = hypercube(4);
  VertexSet alt = q4.set_of({"0000", "0010"});
  CHECK(open_neighborhood(q4, alt).size() == 6);
}

TEST_CASE("nk-star witness") {
  auto w = nk_star_witness(5, 3, 1);
  CHECK(labels_of(w.graph, w.seed) == std::vector<std::string>{"[1,4,5]", "[2,4,5]"});
  CHECK(labels_of(w.graph, w.boundary) ==
        std::vector<std::string>{"[3,4,5]", "[4,1,5]", "[4,2,5]", "[5,4,1]", "[5,4,2]"});
  CHECK(w.boundary.size() == 5);
  CHECK(w.fully_validated());

  CHECK(nk_star_witness(6, 3, 2).boundary.size() == 7);
  CHECK(nk_star_witness(5, 3, 2).boundary.size() == 6);
  CHECK(nk_star_witness(4, 2, 1).boundary.size() == 3);
  CHECK(nk_star_witness(7, 4, 3).boundary.size() == 12);

  // the g = 2 seed sits inside the last block
  auto w2 = nk_star_witness(5, 3, 2);
  auto blocks = decompose_by_last_symbol(w2.graph);
  CHECK(w2.seed.is_subset_of(blocks.at(5)));

  CHECK_THROWS_AS(nk_star_witness(5, 3, 3), RangeError);
  CHECK_THROWS_AS(nk_star_witness(3, 2, 1), RangeError);
}

TEST_CASE("nk-star witness block census") {
  for (auto [n, k, g] : {std::tuple{5, 3, 1}, {6, 3, 2}, {5, 3, 2}, {6, 4, 1}, {6, 4, 2}}) {
    auto w = nk_star_witness(n, k, g);
    auto blocks = decompose_by_last_symbol(w.graph);
    for (int j = 1; j <= g + 1; ++j) CHECK((w.boundary & blocks.at(j)).size() == 1);
    for (int j = g + 2; j <= n - 1; ++j) CHECK((w.boundary & blocks.at(j)).size() == 0);
    // the last block holds the rest: n + g(k-3) - 2 boundary vertices
    CHECK((w.boundary & blocks.at(n)).size() == n + g * (k - 3) - 2);
  }
}

TEST_CASE("arrangement witnesses") {
  auto p3 = arrangement_witness(6, 4, ArrangementShape::P3);
  CHECK(p3.boundary.size() == 17);
  CHECK(p3.g == 2);
  CHECK(p3.fully_validated());

  CHECK(arrangement_witness(7, 4, ArrangementShape::P3).boundary.size() == 27);

  auto c3 = arrangement_witness(6, 4, ArrangementShape::C3);
  CHECK(c3.boundary.size() == 18);
  CHECK(c3.boundary.size() > p3.boundary.size());

  auto c4 = arrangement_witness(7, 4, ArrangementShape::C4);
  CHECK(c4.boundary.size() == 32);
  CHECK(c4.g == 3);
  CHECK(c4.fully_validated());

  auto p4 = arrangement_witness(7, 4, ArrangementShape::P4);
  CHECK(p4.boundary.size() == 34);
  CHECK(p4.boundary.size() == (4 * 4 - 3) * (7 - 4) - 5);
  CHECK(p4.fully_validated());
  // the path seed costs more boundary than the 4-cycle
  CHECK(p4.boundary.size() > c4.boundary.size());

  CHECK_THROWS_AS(arrangement_witness(5, 4, ArrangementShape::P3), RangeError);
  CHECK_THROWS_AS(arrangement_witness(6, 4, ArrangementShape::C4), RangeError);
  CHECK_THROWS_AS(arrangement_witness(7, 5, ArrangementShape::P4), RangeError);
}

TEST_CASE("p3 witness seed geometry") {
  auto w = arrangement_witness(6, 4, ArrangementShape::P3);
  const Graph& a = w.graph;
  int u = a.index_of("[1,2,3,4]");
  int v = a.index_of("[1,5,3,4]");
  int x = a.index_of("[6,5,3,4]");
  CHECK(w.seed == VertexSet(a.vertex_count(), {u, v, x}));
  CHECK(*distance(a, u, v) == 1);
  CHECK(*distance(a, v, x) == 1);
  CHECK(*distance(a, u, x) == 2);
  CHECK(common_neighbors(a, u, v).size() == 6 - 4 - 1);
  CHECK(common_neighbors(a, v, x).size() == 6 - 4 - 1);
  VertexSet ends = common_neighbors(a, u, x);
  CHECK(ends.size() == 2);
  CHECK(ends.contains(v));
}

TEST_CASE("arrangement witness block censuses") {
  for (auto [n, k] : {std::pair{6, 4}, {7, 4}}) {
    auto w = arrangement_witness(n, k, ArrangementShape::P3);
    auto blocks = decompose_by_last_symbol(w.graph);
    CHECK((w.boundary & blocks.at(1)).size() == 1);
    CHECK((w.boundary & blocks.at(k + 1)).size() == 1);
    CHECK((w.boundary & blocks.at(2)).size() == 2);
    CHECK((w.boundary & blocks.at(k + 2)).size() == 2);
    for (int i = 3; i <= k - 1; ++i) CHECK((w.boundary & blocks.at(i)).size() == 0);
    for (int i = k + 3; i <= n; ++i) CHECK((w.boundary & blocks.at(i)).size() == 3);
    CHECK((w.boundary & blocks.at(k)).size() == (3 * k - 5) * (n - k) - 3);
  }

  auto w = arrangement_witness(7, 4, ArrangementShape::C4);
  auto blocks = decompose_by_last_symbol(w.graph);
  for (int i : {1, 2, 5, 6}) CHECK((w.boundary & blocks.at(i)).size() == 2);
  CHECK((w.boundary & blocks.at(3)).size() == 0);
  CHECK((w.boundary & blocks.at(7)).size() == 4);
  CHECK((w.boundary & blocks.at(4)).size() == 4 * (4 - 2) * (7 - 4) - 4);
}

TEST_CASE("explicit Q4 pair") {
  auto [f1, f2] = q4_indistinguishable_pair();
  Graph q4 = hypercube(4);
  CHECK(labels_of(q4, f1) ==
        std::vector<std::string>{"0000", "0011", "0101", "1010", "1100", "1111"});
  CHECK(labels_of(q4, f2) ==
        std::vector<std::string>{"0011", "0101", "0110", "1001", "1010", "1100"});
  CHECK(is_faulty_set(q4, f1, FaultModelSpec::extra(1)));
  CHECK(is_faulty_set(q4, f2, FaultModelSpec::extra(1)));
  CHECK(!mmstar_distinguishable(q4, f1, f2).distinguishable);
}

TEST_CASE("witness boundaries double as upper-bound seeds") {
  // every validated witness satisfies the conditions the upper bound needs
  std::vector<WitnessPair> witnesses;
  witnesses.push_back(hypercube_star_witness(5, 2));
  witnesses.push_back(nk_star_witness(6, 3, 2));
  witnesses.push_back(arrangement_witness(6, 4, ArrangementShape::P3));
  witnesses.push_back(arrangement_witness(7, 4, ArrangementShape::C4));
  for (const auto& w : witnesses) {
    CHECK(is_faulty_set(w.graph, w.boundary, FaultModelSpec::extra(w.g)));
    CHECK(is_faulty_set(w.graph, w.closed, FaultModelSpec::extra(w.g)));
    CHECK(w.closed.size() < w.graph.vertex_count());
  }
}
