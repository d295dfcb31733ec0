#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "util.hpp"
#include "wellcover/weightspace.hpp"

using namespace wc;
using wctest::vs;

static WeightVector wv(std::initializer_list<std::string> xs) {
  WeightVector w;
  for (const auto& s : xs) w.w.push_back(parse_rational(s));
  return w;
}

TEST_CASE("rational parse and format") {
  CHECK(format_rational(parse_rational("3")) == "3/1");
  CHECK(format_rational(parse_rational("-2/4")) == "-1/2");
  CHECK(format_rational(parse_rational("0/5")) == "0/1");
  CHECK(format_rational(parse_rational("6/-4")) == "-3/2");
  CHECK(parse_rational("1/3") == Rat(1) / 3);
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("abc"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), DomainError);
}

TEST_CASE("constraint normalization") {
  LinearConstraint c;
  c.n = 2;
  c.coeffs[0] = Rat(2) / 3;
  c.coeffs[1] = Rat(-4) / 3;
  c.normalize();
  CHECK(c.coeffs.at(0) == 1);
  CHECK(c.coeffs.at(1) == -2);

  LinearConstraint d;
  d.n = 2;
  d.coeffs[0] = -1;
  d.coeffs[1] = 1;
  d.normalize();
  CHECK(d.coeffs.at(0) == 1);
  CHECK(d.coeffs.at(1) == -1);

  LinearConstraint z;
  z.n = 3;
  z.coeffs[1] = 0;
  z.normalize();
  CHECK(z.coeffs.empty());

  // set difference builder cancels the shared vertex
  LinearConstraint e = constraint_set_equal(4, vs(4, {0, 3}), vs(4, {0, 2}));
  CHECK(e.coeffs.size() == 2);
  CHECK(e.coeffs.at(2) == 1);
  CHECK(e.coeffs.at(3) == -1);

  LinearConstraint f = constraint_zero(4, 2);
  CHECK(f.coeffs.size() == 1);
  CHECK(f.coeffs.at(2) == 1);
}

TEST_CASE("evaluate and satisfies") {
  WeightVector w = wv({"1", "1/2", "1/3"});
  CHECK(evaluate(w, vs(3, {0, 2})) == Rat(4) / 3);
  CHECK(evaluate(w, vs(3, {})) == 0);
  LinearConstraint c = constraint_set_equal(3, vs(3, {0}), vs(3, {1, 2}));
  // w0 - w1 - w2 = 1 - 1/2 - 1/3 != 0
  CHECK(!satisfies(w, c));
  CHECK(satisfies(wv({"5/6", "1/2", "1/3"}), c));
}

TEST_CASE("system dimension and basis") {
  ConstraintSystem sys(4);
  CHECK(sys.dimension() == 4);
  sys.add(constraint_set_equal(4, vs(4, {0}), vs(4, {1})));
  sys.add(constraint_set_equal(4, vs(4, {2}), vs(4, {3})));
  sys.add(constraint_set_equal(4, vs(4, {1}), vs(4, {0})));  // duplicate after normalization
  CHECK(sys.constraints().size() == 2);
  CHECK(sys.dimension() == 2);

  auto basis = sys.nullspace_basis();
  REQUIRE(basis.size() == 2);
  CHECK(basis[0].w == wv({"1", "1", "0", "0"}).w);
  CHECK(basis[1].w == wv({"0", "0", "1", "1"}).w);
  for (const auto& b : basis) CHECK(sys.satisfied_by(b));

  ConstraintSystem c4sys(4);
  LinearConstraint alt;
  alt.n = 4;
  alt.coeffs[0] = 1;
  alt.coeffs[1] = -1;
  alt.coeffs[2] = 1;
  alt.coeffs[3] = -1;
  c4sys.add(alt);
  CHECK(c4sys.dimension() == 3);
  auto b4 = c4sys.nullspace_basis();
  REQUIRE(b4.size() == 3);
  CHECK(b4[0].w == wv({"1", "1", "0", "0"}).w);
  CHECK(b4[1].w == wv({"-1", "0", "1", "0"}).w);
  CHECK(b4[2].w == wv({"1", "0", "0", "1"}).w);

  // identities never count
  ConstraintSystem trivial(3);
  LinearConstraint z;
  z.n = 3;
  trivial.add(z);
  CHECK(trivial.constraints().empty());
  CHECK(trivial.dimension() == 3);

  // full-rank system: empty basis
  ConstraintSystem full(2);
  full.add(constraint_zero(2, 0));
  full.add(constraint_zero(2, 1));
  CHECK(full.dimension() == 0);
  CHECK(full.nullspace_basis().empty());
}

TEST_CASE("spaces_equal") {
  ConstraintSystem a(2), b(2);
  a.add(constraint_set_equal(2, vs(2, {0}), vs(2, {1})));
  LinearConstraint scaled;
  scaled.n = 2;
  scaled.coeffs[0] = Rat(2);
  scaled.coeffs[1] = Rat(-2);
  b.add(scaled);
  CHECK(spaces_equal(a, b));

  ConstraintSystem c(2);
  LinearConstraint opp;
  opp.n = 2;
  opp.coeffs[0] = 1;
  opp.coeffs[1] = 1;
  c.add(opp);
  CHECK(!spaces_equal(a, c));

  ConstraintSystem empty1(1), zero1(1);
  zero1.add(constraint_zero(1, 0));
  CHECK(!spaces_equal(empty1, zero1));

  ConstraintSystem other_n(3);
  CHECK_THROWS_AS(spaces_equal(a, other_n), DomainError);

  // same space cut out by different generator sets
  ConstraintSystem d(3), e(3);
  d.add(constraint_set_equal(3, vs(3, {0}), vs(3, {1})));
  d.add(constraint_set_equal(3, vs(3, {1}), vs(3, {2})));
  e.add(constraint_set_equal(3, vs(3, {0}), vs(3, {2})));
  e.add(constraint_set_equal(3, vs(3, {0, 2}), vs(3, {1, 1})));  // w0+w2 = 2w1? no: sets, not multisets
  CHECK(!spaces_equal(d, e));
  ConstraintSystem f(3);
  f.add(constraint_set_equal(3, vs(3, {0}), vs(3, {2})));
  f.add(constraint_set_equal(3, vs(3, {1}), vs(3, {2})));
  CHECK(spaces_equal(d, f));
}
