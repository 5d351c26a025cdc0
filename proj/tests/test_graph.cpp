#include <doctest.h>

#include <random>

#include "diaglab/topology.hpp"

using namespace diaglab;

namespace {
std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}
}  // namespace

TEST_CASE("construction validates the graph") {
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), InvalidInput);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), InvalidInput);
  Graph g({"a", "b", "c"}, {{0, 1}, {2, 1}});
  CHECK(g.adjacent(1, 0));
  CHECK(g.adjacent(1, 2));
  CHECK(!g.adjacent(0, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("adjacency is symmetric on every generated family") {
  for (const Graph& g : {hypercube(4), nk_star(5, 3), arrangement(5, 2)}) {
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v : g.neighbor_list(u)) CHECK(g.adjacent(v, u));
  }
}

TEST_CASE("open and closed neighborhoods on Q3") {
  Graph q3 = hypercube(3);
  VertexSet s = q3.set_of({"000"});
  CHECK(labels_of(q3, open_neighborhood(q3, s)) ==
        std::vector<std::string>{"001", "010", "100"});
  CHECK(labels_of(q3, closed_neighborhood(q3, s)) ==
        std::vector<std::string>{"000", "001", "010", "100"});
  CHECK(open_neighborhood(q3, q3.empty_set()).empty());
  CHECK(closed_neighborhood(q3, q3.full_set()) == q3.full_set());
}

TEST_CASE("the Q4 two-seed neighborhood") {
  Graph q4 = hypercube(4);
  VertexSet y = q4.set_of({"0000", "0010"});
  VertexSet boundary = open_neighborhood(q4, y);
  CHECK(labels_of(q4, boundary) ==
        std::vector<std::string>{"0001", "0011", "0100", "0110", "1000", "1010"});
  CHECK(closed_neighborhood(q4, y).size() == 8);

  auto comps = components(q4, boundary);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == y);
  CHECK(comps[1].size() == 8);
}

TEST_CASE("components partition the survivors") {
  Graph path({"a", "b", "c"}, {{0, 1}, {1, 2}});
  auto comps = components(path, VertexSet(3, {1}));
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].members() == std::vector<int>{0});
  CHECK(comps[1].members() == std::vector<int>{2});

  Graph q3 = hypercube(3);
  CHECK(components(q3, q3.empty_set()).size() == 1);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    VertexSet f(q3.vertex_count());
    for (int v = 0; v < q3.vertex_count(); ++v)
      if (rng() & 1) f.add(v);
    auto cs = components(q3, f);
    VertexSet seen(q3.vertex_count());
    int total = 0;
    for (const auto& c : cs) {
      CHECK(!seen.intersects(c));
      seen |= c;
      total += c.size();
    }
    CHECK(total == q3.vertex_count() - f.size());
    CHECK(seen == q3.full_set() - f);
  }
}

TEST_CASE("distances") {
  Graph a42 = arrangement(4, 2);
  CHECK(*distance(a42, a42.index_of("[1,2]"), a42.index_of("[1,3]")) == 1);
  CHECK(*distance(a42, a42.index_of("[1,2]"), a42.index_of("[3,4]")) == 2);
  CHECK(*distance(a42, a42.index_of("[1,2]"), a42.index_of("[2,1]")) == 3);
  CHECK(*distance(a42, 5, 5) == 0);

  Graph two({"a", "b"}, {});
  CHECK(!distance(two, 0, 1).has_value());

  // triangle inequality on sampled triples
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int u = static_cast<int>(rng() % 12), v = static_cast<int>(rng() % 12),
        w = static_cast<int>(rng() % 12);
    CHECK(*distance(a42, u, w) <= *distance(a42, u, v) + *distance(a42, v, w));
  }
}

TEST_CASE("common neighbors in A(4,2)") {
  Graph a42 = arrangement(4, 2);
  auto common = [&](const char* u, const char* v) {
    return labels_of(a42, common_neighbors(a42, a42.index_of(u), a42.index_of(v)));
  };
  CHECK(common("[1,2]", "[1,3]") == std::vector<std::string>{"[1,4]"});
  CHECK(common("[1,2]", "[3,4]") == std::vector<std::string>{"[1,4]", "[3,2]"});
  // [1,2] and [3,1] sit at distance 2 through their lone shared neighbor
  CHECK(common("[1,2]", "[3,1]") == std::vector<std::string>{"[3,2]"});
  CHECK(common("[1,3]", "[3,1]").empty());
  CHECK(common("[1,2]", "[2,1]").empty());
  CHECK_THROWS_AS(common_neighbors(a42, 3, 3), InvalidInput);

  for (int u = 0; u < a42.vertex_count(); ++u)
    for (int v = 0; v < a42.vertex_count(); ++v) {
      if (u == v) continue;
      VertexSet c = common_neighbors(a42, u, v);
      CHECK(c.is_subset_of(open_neighborhood(a42, VertexSet(12, {u}))));
      CHECK(c.is_subset_of(open_neighborhood(a42, VertexSet(12, {v}))));
    }
}

TEST_CASE("vertex cuts") {
  Graph q3 = hypercube(3);
  CHECK(is_vertex_cut(q3, open_neighborhood(q3, q3.set_of({"000"}))));
  CHECK(!is_vertex_cut(q3, q3.set_of({"000"})));
  CHECK_THROWS_AS(is_vertex_cut(q3, q3.full_set()), InvalidInput);

  Graph k4 = arrangement(4, 1);  // complete graph on 4 vertices
  for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);
  VertexSet f(4, {0, 2});
  CHECK(!is_vertex_cut(k4, f));
}

TEST_CASE("closed neighborhood size identity") {
  Graph s42 = nk_star(4, 2);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    VertexSet s(s42.vertex_count());
    for (int v = 0; v < s42.vertex_count(); ++v)
      if (rng() % 3 == 0) s.add(v);
    VertexSet open = open_neighborhood(s42, s);
    CHECK(!open.intersects(s));
    CHECK(closed_neighborhood(s42, s).size() == open.size() + s.size());
  }
}
