#include <doctest.h>

#include "diaglab/topology.hpp"

using namespace diaglab;

namespace {

long factorial(int x) {
  long out = 1;
  for (int i = 2; i <= x; ++i) out *= i;
  return out;
}

long cross_edges(const Graph& g, const VertexSet& a, const VertexSet& b) {
  long count = 0;
  a.for_each([&](int u) {
    for (int v : g.neighbor_list(u))
      if (b.contains(v)) ++count;
  });
  return count;
}

}  // namespace

TEST_CASE("hypercube structure") {
  CHECK_THROWS_AS(hypercube(0), InvalidInput);

  Graph q1 = hypercube(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edge_count() == 1);

  Graph q3 = hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edge_count() == 12);
  Graph q4 = hypercube(4);
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edge_count() == 32);

  for (int n = 1; n <= 6; ++n) {
    Graph q = hypercube(n);
    CHECK(q.vertex_count() == (1 << n));
    CHECK(q.edge_count() == static_cast<long>(n) * (1 << (n - 1)));
    for (int v = 0; v < q.vertex_count(); ++v) CHECK(q.degree(v) == n);
  }
  CHECK(q3.label(0) == "000");
  CHECK(q3.label(5) == "101");
  CHECK(q3.vertex_transitive());
}

TEST_CASE("nk-star structure") {
  CHECK_THROWS_AS(nk_star(3, 3), InvalidInput);
  CHECK_THROWS_AS(nk_star(1, 1), InvalidInput);

  Graph s42 = nk_star(4, 2);
  CHECK(s42.vertex_count() == 12);
  CHECK(s42.edge_count() == 18);
  for (int v = 0; v < 12; ++v) CHECK(s42.degree(v) == 3);

  auto nb = s42.neighbor_list(s42.index_of("[1,2]"));
  std::vector<std::string> names;
  for (int v : nb) names.push_back(s42.label(v));
  CHECK(names == std::vector<std::string>{"[2,1]", "[3,2]", "[4,2]"});

  for (auto [n, k] : {std::pair{4, 2}, {5, 2}, {5, 3}, {5, 4}, {6, 3}}) {
    Graph s = nk_star(n, k);
    CHECK(s.vertex_count() == factorial(n) / factorial(n - k));
    CHECK(s.edge_count() == (n - 1) * factorial(n) / (2 * factorial(n - k)));
    for (int v = 0; v < s.vertex_count(); ++v) CHECK(s.degree(v) == n - 1);
  }

  // S(n, n-1) has the star graph's parameters
  Graph s43 = nk_star(4, 3);
  CHECK(s43.vertex_count() == 24);
  for (int v = 0; v < 24; ++v) CHECK(s43.degree(v) == 3);
}

TEST_CASE("arrangement structure") {
  Graph a42 = arrangement(4, 2);
  CHECK(a42.vertex_count() == 12);
  CHECK(a42.edge_count() == 24);
  for (int v = 0; v < 12; ++v) CHECK(a42.degree(v) == 4);

  auto nb = a42.neighbor_list(a42.index_of("[1,2]"));
  std::vector<std::string> names;
  for (int v : nb) names.push_back(a42.label(v));
  CHECK(names == std::vector<std::string>{"[1,3]", "[1,4]", "[3,2]", "[4,2]"});

  // A(n,1) is complete
  Graph a41 = arrangement(4, 1);
  CHECK(a41.vertex_count() == 4);
  CHECK(a41.edge_count() == 6);

  for (auto [n, k] : {std::pair{4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 2}}) {
    Graph a = arrangement(n, k);
    CHECK(a.vertex_count() == factorial(n) / factorial(n - k));
    for (int v = 0; v < a.vertex_count(); ++v) CHECK(a.degree(v) == k * (n - k));
    CHECK(a.edge_count() == static_cast<long>(k) * (n - k) * a.vertex_count() / 2);
  }
}

TEST_CASE("decomposition by last symbol") {
  Graph s42 = nk_star(4, 2);
  auto blocks = decompose_by_last_symbol(s42);
  REQUIRE(blocks.size() == 4);
  std::vector<std::string> h2;
  blocks.at(2).for_each([&](int v) { h2.push_back(s42.label(v)); });
  CHECK(h2 == std::vector<std::string>{"[1,2]", "[3,2]", "[4,2]"});
  CHECK(cross_edges(s42, blocks.at(1), blocks.at(2)) == 1);

  Graph a42 = arrangement(4, 2);
  auto ablocks = decompose_by_last_symbol(a42);
  CHECK(cross_edges(a42, ablocks.at(2), ablocks.at(3)) == 2);

  CHECK_THROWS_AS(decompose_by_last_symbol(hypercube(3)), InvalidInput);
  CHECK_THROWS_AS(decompose_by_last_symbol(nk_star(4, 1)), InvalidInput);

  // cross-edge counts match the closed forms for every family instance n <= 6
  for (int n = 3; n <= 6; ++n) {
    for (int k = 2; k < n; ++k) {
      Graph s = nk_star(n, k);
      auto hs = decompose_by_last_symbol(s);
      long want = factorial(n - 2) / factorial(n - k);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(cross_edges(s, hs.at(i), hs.at(j)) == want);

      Graph a = arrangement(n, k);
      auto ha = decompose_by_last_symbol(a);
      want = factorial(n - 2) / factorial(n - k - 1);
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) CHECK(cross_edges(a, ha.at(i), ha.at(j)) == want);
    }
  }

  // each block induces the (n-1, k-1) member of its family, checked by proxy
  Graph s53 = nk_star(5, 3);
  auto h53 = decompose_by_last_symbol(s53);
  for (int i = 1; i <= 5; ++i) {
    CHECK(h53.at(i).size() == 12);  // |S(4,2)|
    long internal = 0;
    h53.at(i).for_each([&](int u) {
      for (int v : s53.neighbor_list(u))
        if (h53.at(i).contains(v)) ++internal;
    });
    CHECK(internal / 2 == 18);  // |E(S(4,2))|
  }

  Graph a53 = arrangement(5, 3);
  auto ha53 = decompose_by_last_symbol(a53);
  for (int i = 1; i <= 5; ++i) {
    CHECK(ha53.at(i).size() == 12);  // |A(4,2)|
    long internal = 0;
    ha53.at(i).for_each([&](int u) {
      for (int v : a53.neighbor_list(u))
        if (ha53.at(i).contains(v)) ++internal;
    });
    CHECK(internal / 2 == 24);  // |E(A(4,2))|
  }
}

TEST_CASE("hypercube bit split") {
  Graph q4 = hypercube(4);
  auto [left, right] = hypercube_bit_split(q4, 0);
  CHECK(left.size() == 8);
  CHECK(right.size() == 8);
  long matching = 0;
  left.for_each([&](int u) {
    for (int v : q4.neighbor_list(u))
      if (right.contains(v)) ++matching;
  });
  CHECK(matching == 8);

  Graph q1 = hypercube(1);
  auto [z, o] = hypercube_bit_split(q1, 0);
  CHECK(z.members() == std::vector<int>{0});
  CHECK(o.members() == std::vector<int>{1});

  // each Q3 half under bit 2 induces a 4-cycle
  Graph q3 = hypercube(3);
  auto [h0, h1] = hypercube_bit_split(q3, 2);
  for (const VertexSet* half : {&h0, &h1}) {
    CHECK(half->size() == 4);
    half->for_each([&](int u) {
      int inside = 0;
      for (int v : q3.neighbor_list(u))
        if (half->contains(v)) ++inside;
      CHECK(inside == 2);
    });
    CHECK(components(q3, q3.full_set() - *half).size() == 1);
  }

  CHECK_THROWS_AS(hypercube_bit_split(q3, 3), InvalidInput);
  CHECK_THROWS_AS(hypercube_bit_split(nk_star(4, 2), 0), InvalidInput);
}

TEST_CASE("permutation labels parse back") {
  CHECK(permutation_label({1, 12, 3}) == "[1,12,3]");
  CHECK(parse_permutation_label("[1,12,3]") == std::vector<int>{1, 12, 3});
  CHECK_THROWS_AS(parse_permutation_label("1,2"), InvalidInput);
  CHECK_THROWS_AS(parse_permutation_label("[1,,2]"), InvalidInput);
}

TEST_CASE("topology spec validation") {
  CHECK_THROWS_AS(make_topology({Family::NkStar, 4, 4}), InvalidInput);
  CHECK_THROWS_AS(make_topology({Family::Arrangement, 2, 2}), InvalidInput);
  Graph g = make_topology({Family::Arrangement, 4, 2});
  CHECK(g.info().family == Family::Arrangement);
}
