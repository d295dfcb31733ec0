#include "wellcover/oracles.hpp"

#include <cstdlib>
#include <string>

namespace wc {

namespace {

constexpr uint32_t kDefaultCap = 24;
constexpr uint32_t kHardCap = 64;  // everything below runs on single-word masks

uint32_t cap_from_env(const char* name) {
  const char* s = std::getenv(name);
  if (!s || !*s) return kDefaultCap;
  char* end = nullptr;
  long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < 1) return kDefaultCap;
  return v > long(kHardCap) ? kHardCap : uint32_t(v);
}

uint32_t& vertex_cap() {
  static uint32_t cap = cap_from_env("WELLCOVER_ORACLE_CAP");
  return cap;
}

uint32_t& sat_cap() {
  static uint32_t cap = cap_from_env("WELLCOVER_SAT_CAP");
  return cap;
}

void check_cap_range(uint32_t v) {
  if (v < 1 || v > kHardCap)
    throw DomainError("cap must be between 1 and " + std::to_string(kHardCap) + ", got " +
                      std::to_string(v));
}

[[noreturn]] void over_cap(const std::string& what, size_t size, uint32_t cap, const char* env) {
  throw CapError(what + " has " + std::to_string(size) + " vertices, over the brute-force cap " +
                 std::to_string(cap) + " (raise via " + env + " or the cap setter)");
}

// Lexicographic maximal-independent-set walk over single-word masks.
// Decisions run in index order, include before exclude, which emits the sets
// in lexicographic order of their sorted vertex lists. `covered` is N[R];
// `pending` holds vertices excluded by choice that no chosen vertex dominates
// yet - they must pick up a later neighbor or the branch dies.
struct MisWalk {
  uint32_t n;
  const uint64_t* adj;
  const std::function<bool(const VertexSet&)>* cb;
  bool stopped = false;

  bool emit(uint64_t r) {
    VertexSet s(n);
    for (uint32_t v = 0; v < n; ++v)
      if (r >> v & 1) s.set(v);
    if (!(*cb)(s)) stopped = true;
    return !stopped;
  }

  bool rec(uint64_t r, uint64_t covered, uint64_t pending, uint32_t v) {
    if (v == n) return pending == 0 ? emit(r) : true;
    uint64_t bit = 1ull << v;
    if (covered & bit) return rec(r, covered, pending, v + 1);
    if (!rec(r | bit, covered | bit | adj[v], pending & ~adj[v], v + 1)) return false;
    // Excluding v only makes sense if a higher-indexed neighbor can still
    // dominate it; lower-indexed ones are all decided and absent.
    if (adj[v] >> (v + 1) && !rec(r, covered, pending | bit, v + 1)) return false;
    return true;
  }
};

void walk_mis(const Graph& g, const std::function<bool(const VertexSet&)>& cb) {
  uint32_t cap = oracle_vertex_cap();
  if (g.n() > cap) over_cap("graph", g.n(), cap, "WELLCOVER_ORACLE_CAP");
  std::vector<uint64_t> adj(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) adj[v] = g.neighbors(v).word0();
  MisWalk w{g.n(), adj.data(), &cb};
  w.rec(0, 0, 0, 0);
}

}  // namespace

uint32_t oracle_vertex_cap() { return vertex_cap(); }
uint32_t oracle_sat_cap() { return sat_cap(); }

void set_oracle_vertex_cap(uint32_t v) {
  check_cap_range(v);
  vertex_cap() = v;
}

void set_oracle_sat_cap(uint32_t v) {
  check_cap_range(v);
  sat_cap() = v;
}

std::vector<VertexSet> enumerate_mis(const Graph& g) {
  std::vector<VertexSet> out;
  walk_mis(g, [&](const VertexSet& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

void for_each_mis(const Graph& g, const std::function<bool(const VertexSet&)>& cb) {
  walk_mis(g, cb);
}

bool is_well_covered_oracle(const Graph& g) {
  bool uniform = true;
  size_t size = 0;
  bool first = true;
  for_each_mis(g, [&](const VertexSet& m) {
    if (first) {
      size = m.count();
      first = false;
      return true;
    }
    if (m.count() != size) {
      uniform = false;
      return false;
    }
    return true;
  });
  return uniform;
}

ConstraintSystem wcw_oracle(const Graph& g) {
  ConstraintSystem sys(g.n());
  VertexSet base(g.n());
  bool first = true;
  for_each_mis(g, [&](const VertexSet& m) {
    if (first) {
      base = m;
      first = false;
    } else {
      sys.add(constraint_set_equal(g.n(), m, base));
    }
    return true;
  });
  return sys;
}

std::optional<VertexSet> generating_oracle(const Graph& g, const VertexSet& bx,
                                           const VertexSet& by) {
  if (!is_induced_complete_bipartite(g, bx, by))
    throw DomainError("generating oracle: (bx, by) does not induce a complete bipartite subgraph");
  VertexSet both = bx;
  both |= by;
  VertexSet blocked = closed_neighborhood(g, both);

  // Any witness S is disjoint from N[bx u by], independent, and must dominate
  // everything else out there, i.e. S is maximal independent in the graph
  // induced on the leftover region. Enumerate those, smallest-lex first.
  std::vector<uint32_t> rest;
  for (uint32_t v = 0; v < g.n(); ++v)
    if (!blocked.test(v)) rest.push_back(v);
  uint32_t cap = oracle_vertex_cap();
  if (rest.size() > cap) over_cap("undecided region", rest.size(), cap, "WELLCOVER_ORACLE_CAP");

  Graph induced(uint32_t(rest.size()));
  for (uint32_t i = 0; i < rest.size(); ++i)
    for (uint32_t j = i + 1; j < rest.size(); ++j)
      if (g.neighbors(rest[i]).test(rest[j])) induced.add_edge(i, j);

  std::optional<VertexSet> found;
  for_each_mis(induced, [&](const VertexSet& m) {
    VertexSet s(g.n());
    for (int i = m.first(); i >= 0; i = m.next(uint32_t(i))) s.set(rest[uint32_t(i)]);
    VertexSet sx = s, sy = s;
    sx |= bx;
    sy |= by;
    if (is_maximal_independent(g, sx) && is_maximal_independent(g, sy)) {
      found = s;
      return false;
    }
    return true;
  });
  return found;
}

std::optional<Assignment> sat_bruteforce(const CnfInstance& inst) {
  uint32_t cap = oracle_sat_cap();
  if (inst.n_vars > cap)
    throw CapError("instance has " + std::to_string(inst.n_vars) +
                   " variables, over the brute-force cap " + std::to_string(cap) +
                   " (raise via WELLCOVER_SAT_CAP or the cap setter)");
  uint32_t n = inst.n_vars;
  uint64_t last = n >= 64 ? ~0ull : (1ull << n) - 1;
  Assignment a;
  a.bits.assign(n, 0);
  for (uint64_t i = 0;; ++i) {
    for (uint32_t k = 0; k < n; ++k) a.bits[k] = uint8_t(i >> (n - 1 - k) & 1);
    if (satisfies(inst, a)) return a;
    if (i == last) return std::nullopt;
  }
}

}  // namespace wc
