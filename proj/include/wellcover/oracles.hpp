#pragma once
// Brute-force reference implementations ("what the fast algorithms must
// agree with"): exhaustive maximal-independent-set enumeration and the
// oracles built on it, plus exhaustive SAT. All exponential work is gated by
// configurable caps; exceeding a cap raises CapError.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wellcover/graph.hpp"
#include "wellcover/sat.hpp"
#include "wellcover/weightspace.hpp"

namespace wc {

// Caps: default 24, overridable via WELLCOVER_ORACLE_CAP / WELLCOVER_SAT_CAP
// (read once), hard ceiling 64, and settable programmatically.
uint32_t oracle_vertex_cap();
uint32_t oracle_sat_cap();
void set_oracle_vertex_cap(uint32_t);
void set_oracle_sat_cap(uint32_t);

// All maximal independent sets, in lexicographic order of the sorted vertex
// lists. The empty graph (n = 0) has exactly one: the empty set. Caps on n.
std::vector<VertexSet> enumerate_mis(const Graph& g);

// Streaming variant (callback returns false to stop early).
void for_each_mis(const Graph& g, const std::function<bool(const VertexSet&)>& cb);

// Every maximal independent set has maximum size.
bool is_well_covered_oracle(const Graph& g);

// The weight functions constant across maximal independent sets, as the
// system { w(M_i) - w(M_1) = 0 : i >= 2 } over the lex-ordered MIS list.
ConstraintSystem wcw_oracle(const Graph& g);

// Is the induced complete bipartite subgraph (bx, by) generating? I.e. is
// there S ⊆ V \ N[bx ∪ by] with S ∪ bx and S ∪ by both maximal independent
// in g. Enumeration runs over maximal independent sets of the graph induced
// on V \ N[bx ∪ by] (every witness is one); the cap governs that domain's
// size, the rest is polynomial. Returns the first witness in lex order.
// Domain error if (bx, by) is not induced complete bipartite.
std::optional<VertexSet> generating_oracle(const Graph& g, const VertexSet& bx, const VertexSet& by);

// Exhaustive satisfiability; assignments tried lexicographically with x_1 as
// the most significant bit, first satisfying assignment returned. Caps on
// n_vars.
std::optional<Assignment> sat_bruteforce(const CnfInstance& inst);

}  // namespace wc
