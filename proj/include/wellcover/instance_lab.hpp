#pragma once
// Deterministic instance generation: seeded random graphs/trees/formulas and
// exhaustive small-graph enumeration. All randomness flows from SplitMix64
// with integer-only state transitions, so corpora are reproducible across
// platforms from (seed, config) alone.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wellcover/graph.hpp"
#include "wellcover/sat.hpp"

namespace wc {

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : s_(seed) {}
  uint64_t next() {
    uint64_t z = (s_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Unbiased via rejection on the top multiple of bound.
  uint64_t below(uint64_t bound);
  // True with probability num/den.
  bool chance(uint64_t num, uint64_t den) { return below(den) < num; }

 private:
  uint64_t s_;
};

// Uniform labeled tree on n vertices via a random Pruefer sequence (n >= 1;
// n <= 2 are the trivial trees).
Graph random_tree(uint32_t n, uint64_t seed);

struct RandomGraphConfig {
  uint32_t n = 8;
  // Edge probability num/den for each admissible pair.
  uint64_t p_num = 1;
  uint64_t p_den = 4;
  // Rejection sampling against the family; error after this many rejects.
  uint32_t max_rejections = 10000;
};

// Random graph conditioned on the family by rejection. For bipartite
// families each vertex picks a class uniformly and only cross pairs may
// become edges (so acceptance stays reasonable).
Graph random_family_graph(const FamilySpec& family, const RandomGraphConfig& cfg, uint64_t seed);

// Random designated-split formula that validates as the given kind
// (DSAT or MONOTONE), built clause-by-clause with rejection.
struct RandomCnfConfig {
  uint32_t n_vars = 6;
  uint32_t n_clauses = 6;
  uint32_t max_rejections = 10000;
};
CnfInstance random_dsat(const RandomCnfConfig& cfg, uint64_t seed);
CnfInstance random_monotone(const RandomCnfConfig& cfg, uint64_t seed);

// Every labeled graph on n vertices (n <= 9) that lies in the family, in
// increasing edge-mask order (bit k of the mask = k-th pair (u,v), u < v,
// lexicographic). The callback's Graph reference is reused storage; return
// false to stop. Returns the number of graphs visited.
uint64_t enumerate_small_graphs(uint32_t n, const FamilySpec& family,
                                const std::function<bool(const Graph&)>& cb);

}  // namespace wc
