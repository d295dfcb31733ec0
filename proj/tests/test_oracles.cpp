#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <wellcover/json_io.hpp>
#include <wellcover/oracles.hpp>

#include "util.hpp"

using namespace wc;
using wctest::vs;

namespace {

std::vector<std::vector<uint32_t>> mis_lists(const Graph& g) {
  std::vector<std::vector<uint32_t>> out;
  for (const auto& m : enumerate_mis(g)) out.push_back(m.to_vector());
  return out;
}

}  // namespace

TEST_CASE("maximal independent sets come out in lexicographic order") {
  auto c6 = wctest::cycle(6);
  std::vector<std::vector<uint32_t>> want = {{0, 2, 4}, {0, 3}, {1, 3, 5}, {1, 4}, {2, 5}};
  CHECK(mis_lists(c6) == want);

  auto p4 = wctest::path(4);
  CHECK(mis_lists(p4) == std::vector<std::vector<uint32_t>>{{0, 2}, {0, 3}, {1, 3}});

  auto star = wctest::star(3);
  CHECK(mis_lists(star) == std::vector<std::vector<uint32_t>>{{0}, {1, 2, 3}});

  // Degenerate graphs: exactly one maximal independent set.
  CHECK(mis_lists(Graph(0)) == std::vector<std::vector<uint32_t>>{{}});
  CHECK(mis_lists(Graph(3)) == std::vector<std::vector<uint32_t>>{{0, 1, 2}});

  auto k3 = wctest::complete(3);
  CHECK(mis_lists(k3) == std::vector<std::vector<uint32_t>>{{0}, {1}, {2}});
}

TEST_CASE("streaming enumeration stops when the callback says so") {
  auto c6 = wctest::cycle(6);
  std::vector<std::vector<uint32_t>> seen;
  for_each_mis(c6, [&](const VertexSet& m) {
    seen.push_back(m.to_vector());
    return seen.size() < 2;
  });
  CHECK(seen == std::vector<std::vector<uint32_t>>{{0, 2, 4}, {0, 3}});
}

TEST_CASE("vertex cap guards enumeration") {
  uint32_t before = oracle_vertex_cap();
  set_oracle_vertex_cap(4);
  CHECK_THROWS_AS(enumerate_mis(wctest::path(5)), CapError);
  CHECK_NOTHROW(enumerate_mis(wctest::path(4)));
  CHECK_THROWS_AS(set_oracle_vertex_cap(0), DomainError);
  CHECK_THROWS_AS(set_oracle_vertex_cap(65), DomainError);
  set_oracle_vertex_cap(before);
}

TEST_CASE("well-coveredness by enumeration") {
  CHECK(is_well_covered_oracle(wctest::cycle(4)));
  CHECK(is_well_covered_oracle(wctest::path(4)));
  CHECK(is_well_covered_oracle(wctest::cycle(7)));
  CHECK(is_well_covered_oracle(wctest::complete(5)));
  CHECK(is_well_covered_oracle(wctest::make(1, {})));
  CHECK(is_well_covered_oracle(Graph(4)));  // edgeless

  CHECK_FALSE(is_well_covered_oracle(wctest::cycle(6)));
  CHECK_FALSE(is_well_covered_oracle(wctest::star(3)));
  CHECK_FALSE(is_well_covered_oracle(wctest::path(3)));
}

TEST_CASE("weight space by enumeration") {
  // P4: all maximal independent sets weigh the same iff w0 = w1 and w2 = w3.
  auto sys = wcw_oracle(wctest::path(4));
  CHECK(sys.dimension() == 2);
  ConstraintSystem expect(4);
  expect.add(constraint_set_equal(4, vs(4, {0}), vs(4, {1})));
  expect.add(constraint_set_equal(4, vs(4, {2}), vs(4, {3})));
  CHECK(spaces_equal(sys, expect));

  // C4: one relation between the two alternating sets.
  auto c4 = wcw_oracle(wctest::cycle(4));
  CHECK(c4.dimension() == 3);
  ConstraintSystem c4exp(4);
  c4exp.add(constraint_set_equal(4, vs(4, {0, 2}), vs(4, {1, 3})));
  CHECK(spaces_equal(c4, c4exp));

  // C6 has a two-dimensional space; this weighting zeroes every maximal
  // independent set, so it lies inside it.
  auto c6 = wcw_oracle(wctest::cycle(6));
  CHECK(c6.dimension() == 2);
  WeightVector cert{{1, 1, 0, -1, -1, 0}};
  CHECK(c6.satisfied_by(cert));

  // Single maximal independent set: no constraints at all.
  CHECK(wcw_oracle(Graph(2)).dimension() == 2);
  // K2: the two endpoints must balance.
  CHECK(wcw_oracle(wctest::complete(2)).dimension() == 1);
}

TEST_CASE("uniform weights satisfy the space exactly on well-covered graphs") {
  for (const Graph& g : {wctest::cycle(4), wctest::cycle(6), wctest::path(4), wctest::path(3),
                         wctest::star(3), wctest::cycle(7), wctest::complete_bipartite(2, 2)}) {
    WeightVector ones{std::vector<Rat>(g.n(), Rat(1))};
    CHECK(wcw_oracle(g).satisfied_by(ones) == is_well_covered_oracle(g));
  }
}

TEST_CASE("generating subgraph by enumeration") {
  auto p4 = wctest::path(4);
  auto w = generating_oracle(p4, vs(4, {0}), vs(4, {1}));
  REQUIRE(w.has_value());
  CHECK(w->to_vector() == std::vector<uint32_t>{3});

  CHECK_FALSE(generating_oracle(p4, vs(4, {1}), vs(4, {2})).has_value());

  auto c6 = wctest::cycle(6);
  auto wc6 = generating_oracle(c6, vs(6, {0}), vs(6, {1, 5}));
  REQUIRE(wc6.has_value());
  CHECK(wc6->to_vector() == std::vector<uint32_t>{3});

  // K_{1,1} spanning K2: both endpoints are maximal on their own.
  auto k2 = wctest::complete(2);
  auto wk2 = generating_oracle(k2, vs(2, {0}), vs(2, {1}));
  REQUIRE(wk2.has_value());
  CHECK(wk2->empty());

  CHECK_THROWS_AS(generating_oracle(p4, vs(4, {0}), vs(4, {2})), DomainError);
}

TEST_CASE("generating oracle on a reduction artifact") {
  CnfInstance inst;
  inst.n_vars = 2;
  inst.c1 = {{1, 2}};
  inst.kind = CnfKind::DMSAT;
  auto art = dmsat_to_gs(inst);
  auto w = generating_oracle(art.g, art.bx, art.by);
  REQUIRE(w.has_value());
  CHECK(w->to_vector() == std::vector<uint32_t>{3, 4});
  auto back = witness_to_assignment(art, *w);
  CHECK(back.bits == std::vector<uint8_t>{1, 1});
  CHECK(satisfies(inst, back));
}

TEST_CASE("generating oracle caps only the undecided region") {
  uint32_t before = oracle_vertex_cap();
  set_oracle_vertex_cap(4);
  auto p8 = wctest::path(8);
  // Outside N[{0,1}] there are five vertices: too many under the cap.
  CHECK_THROWS_AS(generating_oracle(p8, vs(8, {0}), vs(8, {1})), CapError);
  set_oracle_vertex_cap(5);
  CHECK_NOTHROW(generating_oracle(p8, vs(8, {0}), vs(8, {1})));
  set_oracle_vertex_cap(before);
}

TEST_CASE("exhaustive satisfiability tries assignments most-significant-first") {
  CnfInstance or2;
  or2.n_vars = 2;
  or2.c1 = {{1, 2}};
  auto a = sat_bruteforce(or2);
  REQUIRE(a.has_value());
  CHECK(a->bits == std::vector<uint8_t>{0, 1});

  CnfInstance pick3;
  pick3.n_vars = 3;
  pick3.c1 = {{3}};
  auto b = sat_bruteforce(pick3);
  REQUIRE(b.has_value());
  CHECK(b->bits == std::vector<uint8_t>{0, 0, 1});

  CnfInstance contra;
  contra.n_vars = 1;
  contra.c1 = {{1}};
  contra.c2 = {{-1}};
  CHECK_FALSE(sat_bruteforce(contra).has_value());

  CnfInstance empty;
  auto e = sat_bruteforce(empty);
  REQUIRE(e.has_value());
  CHECK(e->bits.empty());
}

TEST_CASE("exhaustive satisfiability agrees with the worked instance") {
  auto dsat = cnf_from_text(read_file(wctest::data_dir() + "/example1_dsat.json"));
  auto a = sat_bruteforce(dsat);
  REQUIRE(a.has_value());
  CHECK(satisfies(dsat, *a));

  auto dmsat = dsat_to_dmsat(dsat);
  auto b = sat_bruteforce(dmsat);
  REQUIRE(b.has_value());
  CHECK(satisfies(dmsat, *b));
  // The two instances encode the same problem.
  CHECK(satisfies(dmsat, dsat_assignment_forward(dsat, *a)));
}

TEST_CASE("variable cap guards exhaustive satisfiability") {
  uint32_t before = oracle_sat_cap();
  set_oracle_sat_cap(3);
  CnfInstance wide;
  wide.n_vars = 5;
  wide.c1 = {{1, 5}};
  CHECK_THROWS_AS(sat_bruteforce(wide), CapError);
  set_oracle_sat_cap(before);
  CHECK_NOTHROW(sat_bruteforce(wide));
  CHECK_THROWS_AS(set_oracle_sat_cap(0), DomainError);
  CHECK_THROWS_AS(set_oracle_sat_cap(70), DomainError);
}
