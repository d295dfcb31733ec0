#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "util.hpp"
#include "wellcover/graph.hpp"

using namespace wc;
using wctest::cycle;
using wctest::ids;
using wctest::make;
using wctest::path;
using wctest::star;
using wctest::vs;

TEST_CASE("vertex set basics") {
  VertexSet s(70);
  CHECK(s.empty());
  CHECK(s.first() == -1);
  s.set(3);
  s.set(69);
  s.set(64);
  CHECK(s.count() == 3);
  CHECK(s.test(69));
  CHECK(!s.test(4));
  CHECK(ids(s) == std::vector<uint32_t>{3, 64, 69});
  CHECK(s.first() == 3);
  CHECK(s.next(3) == 64);
  CHECK(s.next(64) == 69);
  CHECK(s.next(69) == -1);
  s.reset(64);
  CHECK(s.count() == 2);

  VertexSet a = VertexSet::of(10, {1, 3, 5});
  VertexSet b = VertexSet::of(10, {3, 5, 7});
  CHECK(ids(a | b) == std::vector<uint32_t>{1, 3, 5, 7});
  CHECK(ids(a & b) == std::vector<uint32_t>{3, 5});
  CHECK(ids(a - b) == std::vector<uint32_t>{1});
  CHECK(a.intersects(b));
  CHECK(!VertexSet::of(10, {1}).intersects(VertexSet::of(10, {2})));
  CHECK(VertexSet::of(10, {3, 5}).is_subset_of(b));
  CHECK(!b.is_subset_of(a));
  CHECK(VertexSet(10).is_subset_of(a));
  CHECK(VertexSet::full(4).count() == 4);
}

TEST_CASE("graph construction and validation") {
  Graph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 1);  // duplicate, no-op
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge(1, 0));
  CHECK(!g.has_edge(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(1, 1), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 4), DomainError);
  auto es = path(4).edges();
  CHECK(es == std::vector<std::pair<uint32_t, uint32_t>>{{0, 1}, {1, 2}, {2, 3}});

  Graph h(3);
  h.set_label(0, "x");
  CHECK(h.vertex_by_label("x") == 0u);
  CHECK(!h.vertex_by_label("y").has_value());
}

TEST_CASE("independence and domination") {
  Graph p4 = path(4);
  CHECK(is_independent(p4, vs(4, {0, 2})));
  CHECK(is_independent(p4, vs(4, {})));
  CHECK(!is_independent(p4, vs(4, {0, 1})));
  CHECK(dominates(p4, vs(4, {1}), vs(4, {0, 2})));
  CHECK(!dominates(p4, vs(4, {0}), vs(4, {3})));
  CHECK(dominates(p4, vs(4, {0}), vs(4, {})));
  CHECK(is_maximal_independent(p4, vs(4, {0, 2})));
  CHECK(is_maximal_independent(p4, vs(4, {1, 3})));
  CHECK(!is_maximal_independent(p4, vs(4, {0})));
  CHECK(!is_maximal_independent(p4, vs(4, {0, 1})));
}

TEST_CASE("neighborhood layers") {
  Graph p4 = path(4);
  CHECK(ids(neighborhood_layer(p4, vs(4, {0}), 0, false)) == std::vector<uint32_t>{0});
  CHECK(ids(neighborhood_layer(p4, vs(4, {0}), 2, false)) == std::vector<uint32_t>{2});
  CHECK(ids(neighborhood_layer(p4, vs(4, {0}), 1, true)) == std::vector<uint32_t>{0, 1});
  CHECK(ids(neighborhood_layer(p4, vs(4, {0}), 5, true)) == std::vector<uint32_t>{0, 1, 2, 3});
  CHECK(neighborhood_layer(p4, vs(4, {0}), 7, false).empty());
  CHECK_THROWS_AS(neighborhood_layer(p4, VertexSet(4), 1, false), DomainError);

  Graph c4 = cycle(4);
  CHECK(ids(neighborhood_layer(c4, vs(4, {0}), 2, false)) == std::vector<uint32_t>{2});
  // multi-source
  CHECK(ids(neighborhood_layer(p4, vs(4, {0, 3}), 1, false)) == std::vector<uint32_t>{1, 2});
}

TEST_CASE("distance") {
  Graph p4 = path(4);
  CHECK(distance(p4, 0, 3) == 3u);
  CHECK(distance(p4, 2, 2) == 0u);
  Graph two(2);
  CHECK(!distance(two, 0, 1).has_value());
}

TEST_CASE("bipartition") {
  auto bp = bipartition(cycle(4));
  REQUIRE(bp.has_value());
  CHECK(ids(bp->first) == std::vector<uint32_t>{0, 2});
  CHECK(ids(bp->second) == std::vector<uint32_t>{1, 3});
  CHECK(!bipartition(cycle(3)).has_value());
  CHECK(!bipartition(cycle(7)).has_value());
  auto single = bipartition(Graph(1));
  REQUIRE(single.has_value());
  CHECK(single->first.count() == 1);
  CHECK(single->second.empty());
  CHECK(bipartition(path(4)).has_value());
}

TEST_CASE("fixed-length cycle detection") {
  Graph c6 = cycle(6);
  CHECK(contains_cycle_of_length(c6, 6));
  for (uint32_t k : {3u, 4u, 5u, 7u, 8u}) CHECK(!contains_cycle_of_length(c6, k));
  Graph k4 = wctest::complete(4);
  CHECK(contains_cycle_of_length(k4, 3));
  CHECK(contains_cycle_of_length(k4, 4));
  Graph p4 = path(4);
  for (uint32_t k : {3u, 4u, 5u, 6u, 7u, 8u}) CHECK(!contains_cycle_of_length(p4, k));
  CHECK_THROWS_AS(contains_cycle_of_length(c6, 2), DomainError);
  CHECK_THROWS_AS(contains_cycle_of_length(c6, 9), DomainError);

  auto w = find_cycle_of_length(c6, 6);
  REQUIRE(w.has_value());
  CHECK(wctest::is_cycle_in(c6, *w, 6));
  CHECK(!find_cycle_of_length(c6, 4).has_value());
  // K_{2,3} has 4-cycles but no 6-cycle (a 6-cycle needs 3 per side)
  Graph k23 = wctest::complete_bipartite(2, 3);
  CHECK(contains_cycle_of_length(k23, 4));
  CHECK(!contains_cycle_of_length(k23, 6));
  CHECK(!contains_cycle_of_length(k23, 3));
  CHECK(!contains_cycle_of_length(k23, 5));
  Graph k33 = wctest::complete_bipartite(3, 3);
  CHECK(contains_cycle_of_length(k33, 6));
  auto w6 = find_cycle_of_length(k33, 6);
  REQUIRE(w6.has_value());
  CHECK(wctest::is_cycle_in(k33, *w6, 6));
}

TEST_CASE("girth") {
  CHECK(girth(cycle(6)) == 6u);
  CHECK(girth(wctest::complete(4)) == 3u);
  CHECK(!girth(path(7)).has_value());
  CHECK(!girth(Graph(3)).has_value());
  // disjoint C6 and C4: girth 4
  Graph g(10);
  for (uint32_t i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6);
  for (uint32_t i = 0; i < 4; ++i) g.add_edge(6 + i, 6 + (i + 1) % 4);
  CHECK(girth(g) == 4u);
  auto sc = find_shortest_cycle(g);
  REQUIRE(sc.has_value());
  CHECK(wctest::is_cycle_in(g, *sc, 4));
  CHECK(!find_shortest_cycle(path(3)).has_value());
}

TEST_CASE("odd cycle witness") {
  auto oc = find_odd_cycle(cycle(5));
  REQUIRE(oc.has_value());
  CHECK(oc->size() % 2 == 1);
  CHECK(wctest::is_cycle_in(cycle(5), *oc, oc->size()));
  CHECK(!find_odd_cycle(cycle(6)).has_value());
  CHECK(!find_odd_cycle(path(4)).has_value());
}

TEST_CASE("components") {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto comps = components(g);
  REQUIRE(comps.size() == 2);
  CHECK(ids(comps[0]) == std::vector<uint32_t>{0, 1, 2, 3});
  CHECK(ids(comps[1]) == std::vector<uint32_t>{4});
}

TEST_CASE("induced complete bipartite check") {
  Graph p4 = path(4);
  CHECK(is_induced_complete_bipartite(p4, vs(4, {0}), vs(4, {1})));
  CHECK(is_induced_complete_bipartite(p4, vs(4, {1}), vs(4, {2})));
  CHECK(is_induced_complete_bipartite(p4, vs(4, {0, 2}), vs(4, {1})));
  CHECK(!is_induced_complete_bipartite(p4, vs(4, {0}), vs(4, {2})));   // no edge
  CHECK(!is_induced_complete_bipartite(p4, vs(4, {0}), VertexSet(4)));  // empty side
  CHECK(!is_induced_complete_bipartite(p4, vs(4, {1}), vs(4, {1})));   // overlap
  Graph c4 = cycle(4);
  CHECK(is_induced_complete_bipartite(c4, vs(4, {0, 2}), vs(4, {1, 3})));
  CHECK(!is_induced_complete_bipartite(c4, vs(4, {0, 1}), vs(4, {2, 3})));  // sides not independent
  // induced: an edge inside a claimed side kills it
  Graph k4 = wctest::complete(4);
  CHECK(!is_induced_complete_bipartite(k4, vs(4, {0, 1}), vs(4, {2, 3})));
  CHECK(is_induced_complete_bipartite(k4, vs(4, {0}), vs(4, {1})));
}

TEST_CASE("leaves and s_x") {
  Graph p4 = path(4);
  CHECK(ids(leaves(p4)) == std::vector<uint32_t>{0, 3});
  CHECK(leaves(cycle(4)).empty());
  CHECK(ids(leaves(star(3))) == std::vector<uint32_t>{1, 2, 3});

  CHECK(ids(s_x(p4, 1)) == std::vector<uint32_t>{0});
  CHECK(ids(s_x(p4, 2)) == std::vector<uint32_t>{3});
  CHECK_THROWS_AS(s_x(p4, 0), DomainError);  // leaf
  Graph iso(2);
  iso.add_edge(0, 1);
  CHECK_THROWS_AS(s_x(iso, 0), DomainError);  // K2: both are leaves
  Graph lone(1);
  CHECK_THROWS_AS(s_x(lone, 0), DomainError);  // isolated

  // star: the leaf neighborhood layer is just the center, so every leaf stays
  CHECK(ids(s_x(star(3), 0)) == std::vector<uint32_t>{1, 2, 3});
  // no leaves at all: nothing is removed
  CHECK(ids(s_x(cycle(6), 0)) == std::vector<uint32_t>{1, 5});
}

TEST_CASE("family validation") {
  FamilySpec bip6 = family_bip_c6free();
  CHECK(validate_family(path(4), bip6).empty());
  CHECK(in_family(path(4), bip6));
  CHECK(validate_family(wctest::complete_bipartite(2, 6), bip6).empty());

  auto v1 = validate_family(cycle(6), bip6);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].rule == "cycle-6");
  CHECK(wctest::is_cycle_in(cycle(6), v1[0].exhibit, 6));
  CHECK(!in_family(cycle(6), bip6));

  auto v2 = validate_family(cycle(3), bip6);
  REQUIRE(!v2.empty());
  CHECK(v2[0].rule == "bipartite");
  CHECK(v2[0].exhibit.size() % 2 == 1);

  FamilySpec leaffam = family_c3c4c5c7free();
  CHECK(validate_family(cycle(6), leaffam).empty());
  CHECK(validate_family(path(7), leaffam).empty());
  auto v3 = validate_family(cycle(7), leaffam);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].rule == "cycle-7");
  auto v4 = validate_family(cycle(4), leaffam);
  REQUIRE(v4.size() == 1);
  CHECK(v4[0].rule == "cycle-4");

  FamilySpec g6 = family_by_name("girth6");
  CHECK(!validate_family(cycle(4), g6).empty());
  CHECK(validate_family(cycle(6), g6).empty());
  CHECK(validate_family(cycle(8), g6).empty());

  CHECK_THROWS_AS(family_by_name("nope"), DomainError);
  CHECK_THROWS_AS(require_family(cycle(6), bip6, "op"), DomainError);
  CHECK_NOTHROW(require_family(path(4), bip6, "op"));

  // triangle plus pendant inside the leaf family: two rules can fire at once
  Graph tp = make(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  auto v5 = validate_family(tp, leaffam);
  CHECK(v5.size() == 1);  // only the 3-cycle
  CHECK(v5[0].rule == "cycle-3");
  auto v6 = validate_family(tp, bip6);
  REQUIRE(!v6.empty());
  CHECK(v6[0].rule == "bipartite");
}

TEST_CASE("in_family matches validate_family on small graphs") {
  // cross-check the fast path against the exhibit-producing path
  FamilySpec bip6 = family_bip_c6free();
  FamilySpec leaffam = family_c3c4c5c7free();
  std::vector<Graph> zoo = {path(1), path(2), path(6), cycle(3), cycle(4), cycle(5),
                            cycle(6), cycle(7), cycle(8), star(4),
                            wctest::complete(4), wctest::complete_bipartite(3, 3),
                            wctest::complete_bipartite(2, 6)};
  for (const auto& g : zoo) {
    CHECK(in_family(g, bip6) == validate_family(g, bip6).empty());
    CHECK(in_family(g, leaffam) == validate_family(g, leaffam).empty());
  }
}
