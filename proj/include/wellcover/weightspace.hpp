#pragma once
// Exact rational linear algebra for vertex-weight constraint systems: the
// solution sets are subspaces of Q^n ("which weight functions make the graph
// behave uniformly"), so everything here is homogeneous.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wellcover/graph.hpp"

namespace wc {

using Rat = boost::multiprecision::cpp_rational;

// Parse "p", "p/q" (q != 0); format always as "p/q" in lowest terms.
Rat parse_rational(const std::string& s);
std::string format_rational(const Rat& r);

// One homogeneous constraint sum(coeffs[v] * w(v)) = 0 over a fixed universe.
struct LinearConstraint {
  uint32_t n = 0;
  std::map<uint32_t, Rat> coeffs;  // sparse, zero entries dropped

  // Scale so coefficients are coprime integers and the first nonzero (by
  // vertex index) is positive; drops explicit zeros. Identities stay put.
  void normalize();
  bool operator==(const LinearConstraint& o) const { return n == o.n && coeffs == o.coeffs; }
};

// Sum over s minus sum over t: w(s) - w(t) = 0.
LinearConstraint constraint_set_equal(uint32_t n, const VertexSet& s, const VertexSet& t);
// w(v) = 0.
LinearConstraint constraint_zero(uint32_t n, uint32_t v);

struct WeightVector {
  std::vector<Rat> w;  // size n
};

Rat evaluate(const WeightVector& w, const VertexSet& s);
bool satisfies(const WeightVector& w, const LinearConstraint& c);

class ConstraintSystem {
 public:
  ConstraintSystem() = default;
  explicit ConstraintSystem(uint32_t n) : n_(n) {}

  uint32_t n() const { return n_; }
  const std::vector<LinearConstraint>& constraints() const { return cs_; }

  // Normalizes, drops identities (0 = 0), dedups exact duplicates.
  void add(LinearConstraint c);

  // Nullspace dimension = n - rank.
  uint32_t dimension() const;
  // Basis of the solution space in reduced column-echelon order: one vector
  // per free coordinate (ascending), 1 at its own free coordinate, 0 at the
  // others. Deterministic.
  std::vector<WeightVector> nullspace_basis() const;

  bool satisfied_by(const WeightVector& w) const;

 private:
  uint32_t n_ = 0;
  std::vector<LinearConstraint> cs_;
  std::vector<std::string> keys_;  // normalized serializations, for dedup
};

// Same solution subspace of Q^n. Domain error if universes differ.
bool spaces_equal(const ConstraintSystem& a, const ConstraintSystem& b);

}  // namespace wc
