#include <doctest.h>

#include <random>

#include "diaglab/vertex_set.hpp"

using namespace diaglab;

TEST_CASE("vertex set basics") {
  VertexSet s(10);
  CHECK(s.empty());
  s.add(3);
  s.add(7);
  s.add(3);
  CHECK(s.size() == 2);
  CHECK(s.contains(3));
  CHECK(!s.contains(4));
  CHECK(s.members() == std::vector<int>{3, 7});
  s.remove(3);
  CHECK(s.members() == std::vector<int>{7});
  CHECK_THROWS_AS(s.add(10), InvalidInput);
  CHECK_THROWS_AS(s.contains(-1), InvalidInput);
}

TEST_CASE("set algebra matches members") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 130);
    VertexSet a(n), b(n);
    for (int v = 0; v < n; ++v) {
      if (rng() & 1) a.add(v);
      if (rng() & 1) b.add(v);
    }
    VertexSet u = a | b, i = a & b, d = a - b, x = a ^ b;
    for (int v = 0; v < n; ++v) {
      CHECK(u.contains(v) == (a.contains(v) || b.contains(v)));
      CHECK(i.contains(v) == (a.contains(v) && b.contains(v)));
      CHECK(d.contains(v) == (a.contains(v) && !b.contains(v)));
      CHECK(x.contains(v) == (a.contains(v) != b.contains(v)));
    }
    CHECK(u.size() == a.size() + b.size() - i.size());
    CHECK(i.is_subset_of(a));
    CHECK(d.is_subset_of(a));
    CHECK(!d.intersects(b));
  }
}

TEST_CASE("lexicographic order over member lists") {
  auto make = [](std::initializer_list<int> xs) { return VertexSet(70, xs); };
  CHECK(make({0, 5}).lex_less(make({1, 2})));
  CHECK(make({0, 1, 2}).lex_less(make({0, 5})));
  CHECK(make({0}).lex_less(make({0, 1})));
  CHECK(!make({0, 1}).lex_less(make({0})));
  CHECK(!make({2, 65}).lex_less(make({2, 65})));
  CHECK(make({2, 64}).lex_less(make({2, 65})));
}

TEST_CASE("universe mismatch is rejected") {
  VertexSet a(5), b(6);
  CHECK_THROWS_AS(a |= b, InvalidInput);
  CHECK_THROWS_AS((void)a.is_subset_of(b), InvalidInput);
}

TEST_CASE("mask conversion round-trips under 64 vertices") {
  VertexSet s(16, {0, 3, 15});
  CHECK(s.as_mask64() == ((1u << 0) | (1u << 3) | (1u << 15)));
  CHECK(VertexSet::from_mask64(16, s.as_mask64()) == s);
  VertexSet big(65);
  CHECK_THROWS_AS((void)big.as_mask64(), InvalidInput);
}
