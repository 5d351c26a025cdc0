#include <doctest.h>

#include <random>

#include "diaglab/fault_model.hpp"
#include "diaglab/topology.hpp"

using namespace diaglab;

namespace {
std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](int v) { out.push_back(g.label(v)); });
  return out;
}

VertexSet random_subset(const Graph& g, std::mt19937_64& rng, int max_size) {
  VertexSet s(g.vertex_count());
  int want = static_cast<int>(rng() % static_cast<unsigned>(max_size + 1));
  while (s.size() < want) s.add(static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count())));
  return s;
}
}  // namespace

TEST_CASE("fault model spec validation") {
  CHECK_THROWS_AS((FaultModelSpec{FaultModelKind::Unrestricted, 1}.validate()), InvalidInput);
  CHECK_THROWS_AS((FaultModelSpec{FaultModelKind::Conditional, 2}.validate()), InvalidInput);
  CHECK_THROWS_AS(FaultModelSpec::extra(-1).validate(), InvalidInput);
  CHECK_NOTHROW(FaultModelSpec::good_neighbor(3).validate());
  CHECK(FaultModelSpec::extra(2).name() == "2-extra");
}

TEST_CASE("faulty set predicates") {
  Graph q4 = hypercube(4);
  Graph q3 = hypercube(3);
  VertexSet boundary4 = open_neighborhood(q4, q4.set_of({"0000", "0010"}));
  CHECK(is_faulty_set(q4, boundary4, FaultModelSpec::extra(1)));

  CHECK(is_faulty_set(q3, q3.empty_set(), FaultModelSpec::extra(0)));
  CHECK(!is_faulty_set(q3, open_neighborhood(q3, q3.set_of({"000"})), FaultModelSpec::extra(1)));
  CHECK(is_faulty_set(q3, q3.set_of({"000"}), FaultModelSpec::unrestricted()));

  // the full vertex set is vacuously good-neighbor and extra faulty, never conditional
  CHECK(is_faulty_set(q3, q3.full_set(), FaultModelSpec::extra(2)));
  CHECK(is_faulty_set(q3, q3.full_set(), FaultModelSpec::good_neighbor(2)));
  CHECK(!is_faulty_set(q3, q3.full_set(), FaultModelSpec::conditional()));

  // conditional: every vertex keeps a fault-free neighbor
  CHECK(is_faulty_set(q3, q3.set_of({"000"}), FaultModelSpec::conditional()));
  CHECK(!is_faulty_set(q3, open_neighborhood(q3, q3.set_of({"000"})),
                       FaultModelSpec::conditional()));
}

TEST_CASE("m-cut predicate") {
  Graph q4 = hypercube(4);
  VertexSet boundary = open_neighborhood(q4, q4.set_of({"0000", "0010"}));
  CHECK(is_m_cut(q4, boundary, FaultModelSpec::extra(1)));

  Graph q3 = hypercube(3);
  CHECK(!is_m_cut(q3, q3.empty_set(), FaultModelSpec::extra(1)));

  Graph s42 = nk_star(4, 2);
  VertexSet b = open_neighborhood(s42, s42.set_of({"[1,4]", "[2,4]"}));
  CHECK(is_m_cut(s42, b, FaultModelSpec::extra(1)));
}

TEST_CASE("model nesting on random subsets") {
  std::mt19937_64 rng(17);
  for (const Graph& g : {hypercube(3), nk_star(4, 2), arrangement(4, 2)}) {
    for (int trial = 0; trial < 400; ++trial) {
      VertexSet f = random_subset(g, rng, g.vertex_count());
      // good-neighbor and extra families shrink as g grows
      for (int gg = 1; gg <= 2; ++gg) {
        if (is_faulty_set(g, f, FaultModelSpec::good_neighbor(gg)))
          CHECK(is_faulty_set(g, f, FaultModelSpec::good_neighbor(gg - 1)));
        if (is_faulty_set(g, f, FaultModelSpec::extra(gg)))
          CHECK(is_faulty_set(g, f, FaultModelSpec::extra(gg - 1)));
      }
      // every good-neighbor faulty set is extra faulty at the same g
      for (int gg = 0; gg <= 2; ++gg)
        if (is_faulty_set(g, f, FaultModelSpec::good_neighbor(gg)))
          CHECK(is_faulty_set(g, f, FaultModelSpec::extra(gg)));
      // every conditional faulty set is 1-good-neighbor faulty
      if (is_faulty_set(g, f, FaultModelSpec::conditional()))
        CHECK(is_faulty_set(g, f, FaultModelSpec::good_neighbor(1)));
    }
  }
}

TEST_CASE("intersection closure on random faulty pairs") {
  std::mt19937_64 rng(23);
  for (const Graph& g : {hypercube(3), hypercube(4), nk_star(4, 2), arrangement(4, 2)}) {
    for (const FaultModelSpec& m :
         {FaultModelSpec::extra(1), FaultModelSpec::good_neighbor(1)}) {
      int done = 0;
      while (done < 300) {
        VertexSet f1 = random_subset(g, rng, g.vertex_count() / 2);
        VertexSet f2 = random_subset(g, rng, g.vertex_count() / 2);
        if (!is_faulty_set(g, f1, m) || !is_faulty_set(g, f2, m)) continue;
        ++done;
        CHECK(is_faulty_set(g, f1 & f2, m));
      }
    }
  }
}

TEST_CASE("minimum cuts on the desk instances") {
  Graph q3 = hypercube(3);
  auto r = m_connectivity(q3, FaultModelSpec::unrestricted());
  REQUIRE(r.kappa.has_value());
  CHECK(*r.kappa == 3);
  CHECK(r.exhaustive);
  // anchored search: vertex 0 survives, so the first cut isolates it
  CHECK(labels_of(q3, *r.witness_cut) == std::vector<std::string>{"001", "010", "100"});

  auto rq4 = m_connectivity(hypercube(4), FaultModelSpec::extra(1));
  CHECK(*rq4.kappa == 6);
  CHECK(labels_of(hypercube(4), *rq4.witness_cut) ==
        std::vector<std::string>{"0001", "0010", "0100", "1001", "1010", "1100"});

  auto rs = m_connectivity(nk_star(4, 2), FaultModelSpec::good_neighbor(1));
  CHECK(*rs.kappa == 3);
  CHECK(labels_of(nk_star(4, 2), *rs.witness_cut) ==
        std::vector<std::string>{"[1,3]", "[1,4]", "[2,1]"});

  auto ra = m_connectivity(arrangement(4, 2), FaultModelSpec::good_neighbor(1));
  CHECK(*ra.kappa == 4);
  CHECK(labels_of(arrangement(4, 2), *ra.witness_cut) ==
        std::vector<std::string>{"[1,3]", "[2,4]", "[3,1]", "[4,2]"});

  // zero-extra connectivity is classical connectivity
  auto r0 = m_connectivity(q3, FaultModelSpec::extra(0));
  CHECK(*r0.kappa == 3);

  // a larger instance on the general formula branch
  auto ra52 = m_connectivity(arrangement(5, 2), FaultModelSpec::good_neighbor(1));
  CHECK(*ra52.kappa == 8);
}

TEST_CASE("connectivity error and cap paths") {
  Graph k4 = arrangement(4, 1);
  CHECK_THROWS_AS(m_connectivity(k4, FaultModelSpec::unrestricted()), NoCutExists);

  Graph two({"a", "b"}, {});
  CHECK_THROWS_AS(m_connectivity(two, FaultModelSpec::unrestricted()), InvalidInput);

  // a cap below the true connectivity reports a capped, witness-free result
  Graph q3 = hypercube(3);
  auto capped = m_connectivity(q3, FaultModelSpec::unrestricted(), 2);
  CHECK(!capped.kappa.has_value());
  CHECK(!capped.exhaustive);
  CHECK(capped.cap == 2);
}

TEST_CASE("default caps cover the desk instances") {
  CHECK(default_connectivity_cap(hypercube(4), FaultModelSpec::extra(1)) >= 6);
  CHECK(default_connectivity_cap(nk_star(4, 2), FaultModelSpec::good_neighbor(1)) >= 3);
  CHECK(default_connectivity_cap(arrangement(4, 2), FaultModelSpec::good_neighbor(1)) >= 4);
}

TEST_CASE("super connectedness of Q4 and Q3") {
  Graph q4 = hypercube(4);
  CHECK(super_connected_check(q4, 5, 1).holds);

  auto fail = super_connected_check(q4, 6, 1);
  REQUIRE(!fail.holds);
  REQUIRE(fail.violating.has_value());
  CHECK(labels_of(q4, *fail.violating) ==
        std::vector<std::string>{"0000", "0001", "0110", "0111", "1010", "1011"});
  auto comps = components(q4, *fail.violating);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 2);  // an isolated edge survives
  CHECK(comps[1].size() == 8);

  CHECK(super_connected_check(hypercube(3), 2, 0).holds);
  CHECK_THROWS_AS(super_connected_check(hypercube(2), 4, 0), InvalidInput);
}

TEST_CASE("super connectedness bounds the extra cut size") {
  // Q4 super 5-connected of order 1 forces every 1-extra cut above size 5
  Graph q4 = hypercube(4);
  REQUIRE(super_connected_check(q4, 5, 1).holds);
  auto r = m_connectivity(q4, FaultModelSpec::extra(1));
  CHECK(*r.kappa >= 6);
}
