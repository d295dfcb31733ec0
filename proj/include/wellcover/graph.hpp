#pragma once
// Finite simple undirected graphs on vertex ids 0..n-1, with the set and
// structure operations the rest of the library is built on: dense bitset
// vertex sets, BFS distance layers, bipartition, fixed-length cycle search,
// girth, graph-family validation, and the leaf/neighborhood helpers.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace wc {

// Errors that mean "the input is outside this operation's domain" (bad vertex
// id, graph outside the required family, malformed structure...). The CLI
// maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A brute-force cap was exceeded. Subclass so batch harnesses can catch and
// skip oversized instances while still failing loudly on real domain errors.
struct CapError : DomainError {
  using DomainError::DomainError;
};

// Dense bitset over a fixed universe {0..n-1}. Word storage is inline for
// universes up to 256 vertices, so graphs in that range never heap-allocate.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(uint32_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static VertexSet full(uint32_t universe) {
    VertexSet s(universe);
    for (uint32_t v = 0; v < universe; ++v) s.set(v);
    return s;
  }
  static VertexSet of(uint32_t universe, std::initializer_list<uint32_t> vs) {
    VertexSet s(universe);
    for (uint32_t v : vs) s.set(v);
    return s;
  }

  uint32_t universe() const { return n_; }
  bool test(uint32_t v) const { return (w_[v >> 6] >> (v & 63)) & 1u; }
  void set(uint32_t v) { w_[v >> 6] |= uint64_t(1) << (v & 63); }
  void reset(uint32_t v) { w_[v >> 6] &= ~(uint64_t(1) << (v & 63)); }
  void clear() { for (auto& x : w_) x = 0; }

  size_t count() const;
  bool empty() const;
  bool intersects(const VertexSet& o) const;
  bool is_subset_of(const VertexSet& o) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);  // set difference
  bool operator==(const VertexSet& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Iteration: first() / next(v) return -1 when exhausted.
  int first() const;
  int next(uint32_t after) const;

  std::vector<uint32_t> to_vector() const;

  // Raw word access for single-word fast paths (universe <= 64).
  uint64_t word0() const { return w_.empty() ? 0 : w_[0]; }

 private:
  uint32_t n_ = 0;
  boost::container::small_vector<uint64_t, 4> w_;
};

inline VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
inline VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
inline VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

class Graph {
 public:
  Graph() = default;
  explicit Graph(uint32_t n);

  uint32_t n() const { return n_; }
  uint64_t edge_count() const { return m_; }

  // Rejects self-loops and out-of-range ids; adding an existing edge is a
  // no-op (simple graph).
  void add_edge(uint32_t u, uint32_t v);
  bool has_edge(uint32_t u, uint32_t v) const;
  const VertexSet& neighbors(uint32_t v) const;
  size_t degree(uint32_t v) const { return neighbors(v).count(); }

  // Edges as (u,v) with u<v, sorted lexicographically.
  std::vector<std::pair<uint32_t, uint32_t>> edges() const;

  const std::map<uint32_t, std::string>& labels() const { return labels_; }
  void set_label(uint32_t v, std::string s);
  std::optional<uint32_t> vertex_by_label(const std::string& s) const;

  void check_vertex(uint32_t v) const;

  // Rebuild in place (used by streaming enumerators to avoid reallocation).
  void assign(uint32_t n);

 private:
  uint32_t n_ = 0;
  uint64_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::map<uint32_t, std::string> labels_;
};

// ---- set/structure predicates ----

bool is_independent(const Graph& g, const VertexSet& s);
// Every vertex of t is in s or adjacent to some vertex of s.
bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t);
bool is_maximal_independent(const Graph& g, const VertexSet& s);

// Union of open neighborhoods of s (excluding nothing; callers subtract).
VertexSet neighbors_of_set(const Graph& g, const VertexSet& s);
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

// {x : d(x, s) == i} for i>=0 (i=0 gives s itself); closed variant returns
// {x : d(x, s) <= i}. Errors on empty s.
VertexSet neighborhood_layer(const Graph& g, const VertexSet& s, uint32_t i, bool closed);

// d(u,v) or nullopt if disconnected.
std::optional<uint32_t> distance(const Graph& g, uint32_t u, uint32_t v);

// Two color classes (first contains the BFS root of each component), or
// nullopt when some component is odd-cyclic.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

// Supported lengths 3..8; out of range is a domain error. Exact simple-cycle
// search (not "girth <= k").
bool contains_cycle_of_length(const Graph& g, uint32_t k);
// Same search, returning one witness cycle (vertex sequence) if present.
std::optional<std::vector<uint32_t>> find_cycle_of_length(const Graph& g, uint32_t k);

// Shortest cycle length, nullopt for forests.
std::optional<uint32_t> girth(const Graph& g);
std::optional<std::vector<uint32_t>> find_shortest_cycle(const Graph& g);

// Odd cycle witness (present iff not bipartite).
std::optional<std::vector<uint32_t>> find_odd_cycle(const Graph& g);

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// ---- induced complete bipartite subgraphs ----

struct Bipartite {
  VertexSet x, y;  // the two sides, nonempty, disjoint
};

// G[bx ∪ by] is complete bipartite with exactly these sides: both sides
// nonempty independent sets, every cross pair adjacent.
bool is_induced_complete_bipartite(const Graph& g, const VertexSet& bx, const VertexSet& by);

// ---- leaves ----

// Vertices of degree exactly 1.
VertexSet leaves(const Graph& g);
// N(x) \ N(L(G)) for a vertex x that is neither a leaf nor isolated
// (domain error otherwise). N(S) here is the distance-1 layer of S.
VertexSet s_x(const Graph& g, uint32_t x);

// ---- graph families ----

struct FamilySpec {
  std::vector<uint32_t> forbidden_cycles;  // each in 3..8
  bool require_bipartite = false;
  std::optional<uint32_t> min_girth;       // <= 9 meaningful (checked via cycles up to min_girth-1)
};

struct FamilyViolation {
  std::string rule;                 // "bipartite" | "cycle-6" | "girth"
  std::vector<uint32_t> exhibit;    // offending cycle
  std::string message;
};

// Checks every rule and reports every violation (empty vector = valid).
std::vector<FamilyViolation> validate_family(const Graph& g, const FamilySpec& spec);
// Throws DomainError with the first violation's message when invalid.
void require_family(const Graph& g, const FamilySpec& spec, const std::string& op_name);
// Cheap boolean check (no exhibits), used by hot enumeration loops.
bool in_family(const Graph& g, const FamilySpec& spec);

// Named registry used by the CLI: "bip-c6free", "girth6", "no-c3c5",
// "c3c4c5c7-free", "any". Unknown name is a domain error.
FamilySpec family_by_name(const std::string& name);
// Family required by the fast recognition/weight-space algorithms.
FamilySpec family_bip_c6free();
// Family required by the leaf characterization.
FamilySpec family_c3c4c5c7free();

}  // namespace wc
