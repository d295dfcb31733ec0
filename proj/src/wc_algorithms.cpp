#include "wellcover/wc_algorithms.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "wellcover/oracles.hpp"

namespace wc {

namespace {

void check_family(const Graph& g, bool unchecked) {
  if (!unchecked) require_family(g, family_bip_c6free(), "bip-c6free algorithm");
}

void check_vertex_arg(const Graph& g, uint32_t v, const char* name) {
  if (v >= g.n())
    throw DomainError(std::string(name) + "=" + std::to_string(v) + " out of range (n=" +
                      std::to_string(g.n()) + ")");
}

// Core of the linear scan, preconditions already checked: every vertex that
// is dominated by the subgraph but not part of it must keep an escape
// neighbor outside the dominated region.
bool generating_core(const Graph& g, const VertexSet& body) {
  VertexSet d = neighbors_of_set(g, body);
  VertexSet d1 = d;
  d1 -= body;
  for (int v = d1.first(); v >= 0; v = d1.next(uint32_t(v)))
    if (g.neighbors(uint32_t(v)).is_subset_of(d)) return false;
  return true;
}

VertexSet maxgen1_core(const Graph& g, uint32_t x) {
  VertexSet t(g.n());
  const VertexSet& nx = g.neighbors(x);
  for (int y = nx.first(); y >= 0; y = nx.next(uint32_t(y))) {
    bool ok = true;
    const VertexSet& ny = g.neighbors(uint32_t(y));
    for (int a = ny.first(); ok && a >= 0; a = ny.next(uint32_t(a))) {
      if (uint32_t(a) == x) continue;
      if (g.neighbors(uint32_t(a)).is_subset_of(nx)) ok = false;
    }
    if (ok) t.set(uint32_t(y));
  }
  return t;
}

VertexSet maxgen2_core(const Graph& g, uint32_t x1, uint32_t x2) {
  VertexSet empty(g.n());
  VertexSet y = g.neighbors(x1);
  y &= g.neighbors(x2);
  if (y.count() < 2) return empty;

  VertexSet xs(g.n());
  xs.set(x1);
  xs.set(x2);

  // Private neighbors of either center must reach outside the pair.
  VertexSet sym = g.neighbors(x1);
  sym |= g.neighbors(x2);
  sym -= y;
  for (int s = sym.first(); s >= 0; s = sym.next(uint32_t(s)))
    if (g.neighbors(uint32_t(s)).is_subset_of(xs)) return empty;

  VertexSet t(g.n());
  for (int v = y.first(); v >= 0; v = y.next(uint32_t(v))) {
    bool ok = true;
    const VertexSet& nv = g.neighbors(uint32_t(v));
    for (int a = nv.first(); ok && a >= 0; a = nv.next(uint32_t(a))) {
      if (xs.test(uint32_t(a))) continue;
      if (g.neighbors(uint32_t(a)).is_subset_of(y)) ok = false;
    }
    if (ok) t.set(uint32_t(v));
  }
  if (t.count() < 2) return empty;
  return t;
}

}  // namespace

NeighborhoodDecomposition decompose(const Graph& g, const std::vector<uint32_t>& x_in) {
  if (x_in.empty() || x_in.size() > 2)
    throw DomainError("decompose takes one or two center vertices, got " +
                      std::to_string(x_in.size()));
  std::vector<uint32_t> x = x_in;
  std::sort(x.begin(), x.end());
  for (uint32_t v : x) check_vertex_arg(g, v, "x");
  if (x.size() == 2) {
    if (x[0] == x[1]) throw DomainError("decompose centers must be distinct");
    if (g.neighbors(x[0]).test(x[1])) throw DomainError("decompose centers must be nonadjacent");
  }

  NeighborhoodDecomposition d;
  d.x = x;
  VertexSet xset(g.n());
  for (uint32_t v : x) xset.set(v);

  VertexSet common = g.neighbors(x[0]);
  if (x.size() == 2) common &= g.neighbors(x[1]);
  d.y = common.to_vector();

  VertexSet n3x = neighborhood_layer(g, xset, 3, false);
  for (uint32_t yi : d.y) {
    VertexSet a = g.neighbors(yi);
    a -= xset;
    d.a_sets.push_back(a);
    VertexSet yone(g.n());
    yone.set(yi);
    VertexSet z = neighborhood_layer(g, yone, 2, false);
    z &= n3x;
    d.z_sets.push_back(z);
  }

  d.s = neighbors_of_set(g, xset);
  d.s -= common;
  if (d.s.empty()) {
    d.s_prime = VertexSet(g.n());
  } else {
    d.s_prime = neighbors_of_set(g, d.s);
    d.s_prime -= xset;
  }

  VertexSet body = xset;
  body |= common;
  d.d1 = neighbors_of_set(g, body);
  d.d2 = neighborhood_layer(g, body, 2, false);
  d.inside = body;
  d.outside = VertexSet::full(g.n());
  d.outside -= body;
  return d;
}

bool generating_bip_c6free(const Graph& g, const VertexSet& bx, const VertexSet& by,
                           bool unchecked) {
  check_family(g, unchecked);
  if (!is_induced_complete_bipartite(g, bx, by))
    throw DomainError("generating: (bx, by) does not induce a complete bipartite subgraph");
  VertexSet body = bx;
  body |= by;
  return generating_core(g, body);
}

VertexSet maxgen1(const Graph& g, uint32_t x, bool unchecked) {
  check_vertex_arg(g, x, "x");
  check_family(g, unchecked);
  return maxgen1_core(g, x);
}

VertexSet maxgen2(const Graph& g, uint32_t x1, uint32_t x2, bool unchecked) {
  check_vertex_arg(g, x1, "x1");
  check_vertex_arg(g, x2, "x2");
  if (x1 == x2) throw DomainError("maxgen2 centers must be distinct");
  if (g.neighbors(x1).test(x2)) throw DomainError("maxgen2 centers must be nonadjacent");
  check_family(g, unchecked);
  return maxgen2_core(g, x1, x2);
}

// Zero deductions. Given the generating subgraph on centers X and full set T,
// the subgraph on X and T \ R stays generating exactly when every dropped
// vertex r ∈ R keeps a neighbor a ∉ X whose trace C_a = N(a) ∩ T lies inside
// R: such an a falls outside the shrunken neighborhood union and is r's
// escape, and every dropped vertex needs one. So the admissible R are
// precisely the unions of traces, and each relation w(T \ R) = w(X) cancels
// against w(T) = w(X) to give w(R) = 0. With no 6-cycle, two overlapping
// traces must lie inside a common 2-element set (a transversal overlap closes
// the 6-cycle a-t1-x-t2-b-p-a for x ∈ X), so overlap blocks are disjoint and
// the single-trace constraints w(C_a) = 0 already span w(R) = 0 for every
// admissible union R. Dropping a single member of T is NOT generally
// admissible — a trace can be bigger than its vertex — which is why the
// deductions run over traces rather than over elements of T.
//
// min_rest is how many members of T must survive the drop: 1 for the star
// stage; 2 for the pair stage, whose one-survivor relations are exactly the
// star relations of the surviving vertex and are emitted there.
static void add_trace_zeros(const Graph& g, const VertexSet& centers, const VertexSet& t,
                            size_t min_rest, ConstraintSystem& sys,
                            std::set<std::vector<uint32_t>>& seen) {
  VertexSet callers = neighbors_of_set(g, t);
  callers -= centers;
  VertexSet empty(g.n());
  size_t tc = t.count();
  for (int a = callers.first(); a >= 0; a = callers.next(uint32_t(a))) {
    VertexSet c = g.neighbors(uint32_t(a));
    c &= t;
    if (c.empty() || tc - c.count() < min_rest) continue;
    if (seen.insert(c.to_vector()).second)
      sys.add(constraint_set_equal(g.n(), c, empty));
  }
}

ConstraintSystem wcw_bip_c6free(const Graph& g, bool unchecked) {
  check_family(g, unchecked);
  ConstraintSystem sys(g.n());
  std::set<std::vector<uint32_t>> seen_traces;

  for (uint32_t v = 0; v < g.n(); ++v) {
    VertexSet t = maxgen1_core(g, v);
    if (t.empty()) continue;
    VertexSet vset(g.n());
    vset.set(v);
    sys.add(constraint_set_equal(g.n(), t, vset));
    add_trace_zeros(g, vset, t, 1, sys, seen_traces);
  }

  for (uint32_t v1 = 0; v1 < g.n(); ++v1)
    for (uint32_t v2 = v1 + 1; v2 < g.n(); ++v2) {
      if (g.neighbors(v1).test(v2)) continue;
      VertexSet t = maxgen2_core(g, v1, v2);
      if (t.count() < 2) continue;
      VertexSet pair(g.n());
      pair.set(v1);
      pair.set(v2);
      sys.add(constraint_set_equal(g.n(), t, pair));
      add_trace_zeros(g, pair, t, 2, sys, seen_traces);
    }

  return sys;
}

bool well_covered_bip_c6free(const Graph& g, bool unchecked) {
  check_family(g, unchecked);
  // Well-covered means the uniform weighting lies in the weight space.
  WeightVector ones;
  ones.w.assign(g.n(), Rat(1));
  ConstraintSystem sys = wcw_bip_c6free(g, true);
  for (const LinearConstraint& c : sys.constraints())
    if (!satisfies(ones, c)) return false;
  return true;
}

LeafProfile leaf_profile(const Graph& g) {
  LeafProfile p;
  p.l = leaves(g);
  p.n_of_l = p.l.empty() ? VertexSet(g.n()) : neighborhood_layer(g, p.l, 1, false);
  for (uint32_t v = 0; v < g.n(); ++v)
    if (g.degree(v) >= 2) p.s_sets.emplace_back(v, s_x(g, v));
  return p;
}

ConstraintSystem wcw_leaf_characterization(const Graph& g, bool unchecked) {
  if (!unchecked) require_family(g, family_c3c4c5c7free(), "leaf characterization");
  ConstraintSystem sys(g.n());
  VertexSet ls = leaves(g);

  for (const VertexSet& comp : components(g)) {
    size_t size = comp.count();
    if (size == 1) continue;
    if (size == 2) {
      int a = comp.first();
      int b = comp.next(uint32_t(a));
      LinearConstraint c{g.n(), {}};
      c.coeffs[uint32_t(a)] = 1;
      c.coeffs[uint32_t(b)] = -1;
      sys.add(c);
      continue;
    }
    for (int v = comp.first(); v >= 0; v = comp.next(uint32_t(v))) {
      if (ls.test(uint32_t(v))) continue;
      LinearConstraint c{g.n(), {}};
      c.coeffs[uint32_t(v)] = 1;
      VertexSet near_leaves = g.neighbors(uint32_t(v));
      near_leaves &= ls;
      for (int l = near_leaves.first(); l >= 0; l = near_leaves.next(uint32_t(l)))
        c.coeffs[uint32_t(l)] -= 1;
      sys.add(c);
    }
  }
  return sys;
}

bool relating_edge(const Graph& g, uint32_t u, uint32_t v) {
  check_vertex_arg(g, u, "u");
  check_vertex_arg(g, v, "v");
  if (!g.neighbors(u).test(v))
    throw DomainError("relating_edge: " + std::to_string(u) + "-" + std::to_string(v) +
                      " is not an edge");
  if (in_family(g, family_bip_c6free())) {
    VertexSet body(g.n());
    body.set(u);
    body.set(v);
    return generating_core(g, body);
  }
  VertexSet a(g.n()), b(g.n());
  a.set(u);
  b.set(v);
  return generating_oracle(g, a, b).has_value();
}

}  // namespace wc
