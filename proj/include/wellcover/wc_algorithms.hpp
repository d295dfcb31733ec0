#pragma once
// The polynomial-time recognition and weight-space algorithms for bipartite
// graphs with no 6-cycle, and the leaf-based weight-space characterization
// for graphs with no cycles of length 3, 4, 5, or 7. Unless `unchecked` is
// passed, each operation validates its family precondition and raises a
// domain error with the offending cycle.

#include <cstdint>
#include <optional>
#include <vector>

#include "wellcover/graph.hpp"
#include "wellcover/weightspace.hpp"

namespace wc {

// Distance-layer decomposition around an independent set X of one or two
// vertices; the structural object the correctness arguments run on.
//   Y   = common neighborhood of X          (y_1 < y_2 < ... sorted)
//   A_i = N(y_i) \ X
//   Z_i = N_2(y_i) ∩ N_3(X)
//   S   = N(X) \ Y,  S' = N(S) \ X          (both empty when |X| = 1)
//   D_1 = N(V(B)),   D_2 = N_2(V(B))        for B = G[X ∪ Y]
struct NeighborhoodDecomposition {
  std::vector<uint32_t> x;  // 1 or 2 vertices, ascending
  std::vector<uint32_t> y;  // ascending
  std::vector<VertexSet> a_sets;  // parallel to y
  std::vector<VertexSet> z_sets;  // parallel to y
  VertexSet s, s_prime;
  VertexSet d1, d2;
  VertexSet inside;   // X ∪ Y
  VertexSet outside;  // V \ (X ∪ Y)
};

NeighborhoodDecomposition decompose(const Graph& g, const std::vector<uint32_t>& x);

// Is the induced complete bipartite subgraph (bx, by) generating? Linear
// scan: with D = the union of neighborhoods of V(B), every vertex of
// D \ V(B) must keep a neighbor outside D. Requires bipartite + no 6-cycle
// (domain error otherwise, unless unchecked). Domain error if (bx, by) is
// not induced complete bipartite.
bool generating_bip_c6free(const Graph& g, const VertexSet& bx, const VertexSet& by,
                           bool unchecked = false);

// Largest T ⊆ N(x) with the star G[{x} ∪ T] generating; empty set when no
// nonempty T works. A neighbor y survives iff every a ∈ N(y) \ {x} has a
// neighbor outside N(x).
VertexSet maxgen1(const Graph& g, uint32_t x, bool unchecked = false);

// Largest T ⊆ N(x1) ∩ N(x2), |T| >= 2, with G[{x1,x2} ∪ T] generating;
// empty set when none exists. Requires the private neighbors of x1/x2 to be
// dominated outside and each common neighbor's outside-neighbors to be
// dominated outside the common neighborhood. x1 == x2 or adjacent x1,x2 is
// a domain error.
VertexSet maxgen2(const Graph& g, uint32_t x1, uint32_t x2, bool unchecked = false);

// The full constraint system cutting out the space of weight functions that
// are constant on maximal independent sets. For every vertex v with
// T = maxgen1(v) nonempty it emits w(T) = w(v), plus w(N(a) ∩ T) = 0 for
// every vertex a ≠ v adjacent to T whose trace N(a) ∩ T is a proper subset
// of T — exactly the subsets whose removal leaves the star generating (see
// the implementation for why single traces span all such deductions when no
// 6-cycle exists). The pair stage does the same through maxgen2 for
// |T| >= 2, keeping at least two survivors.
ConstraintSystem wcw_bip_c6free(const Graph& g, bool unchecked = false);

// Every maximal independent set maximum? Equivalent to the uniform
// weighting satisfying the weight-space constraints, which is how it is
// decided.
bool well_covered_bip_c6free(const Graph& g, bool unchecked = false);

// ---- leaf characterization (no C3/C4/C5/C7) ----

struct LeafProfile {
  VertexSet l;       // degree-1 vertices
  VertexSet n_of_l;  // distance-1 layer of l
  // s_x for every vertex that is neither leaf nor isolated, indexed by x.
  std::vector<std::pair<uint32_t, VertexSet>> s_sets;
};

LeafProfile leaf_profile(const Graph& g);

// Weight space for connected graphs with no cycle of length 3, 4, 5, or 7,
// assembled per component: a single vertex contributes nothing, an edge
// component {a,b} contributes w(a) = w(b), and any other component
// contributes w(x) = w(N(x) ∩ L) for each of its non-leaf vertices x.
ConstraintSystem wcw_leaf_characterization(const Graph& g, bool unchecked = false);

// Is the single edge uv relating, i.e. is the one-edge subgraph ({u},{v})
// generating? Delegates to the linear-scan recognizer when the graph is
// bipartite with no 6-cycle, otherwise falls back to the brute-force oracle.
// Domain error if uv is not an edge.
bool relating_edge(const Graph& g, uint32_t u, uint32_t v);

}  // namespace wc
