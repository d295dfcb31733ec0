#include "wellcover/instance_lab.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <set>
#include <string>
#include <vector>

namespace wc {

uint64_t SplitMix64::below(uint64_t bound) {
  if (bound == 0) throw DomainError("below: bound must be positive");
  uint64_t rem = (0ull - bound) % bound;  // 2^64 mod bound
  for (;;) {
    uint64_t r = next();
    if (rem == 0 || r < 0ull - rem) return r % bound;
  }
}

Graph random_tree(uint32_t n, uint64_t seed) {
  if (n == 0) throw DomainError("random_tree: n must be positive");
  Graph g{n};
  if (n == 1) return g;
  if (n == 2) {
    g.add_edge(0, 1);
    return g;
  }

  SplitMix64 r(seed);
  std::vector<uint32_t> code(n - 2);
  for (auto& c : code) c = uint32_t(r.below(n));

  // Pruefer decode: repeatedly join the smallest current leaf to the next
  // code entry; the two survivors close the tree.
  std::vector<uint32_t> deg(n, 1);
  for (uint32_t c : code) ++deg[c];
  std::priority_queue<uint32_t, std::vector<uint32_t>, std::greater<>> leaf;
  for (uint32_t v = 0; v < n; ++v)
    if (deg[v] == 1) leaf.push(v);
  for (uint32_t c : code) {
    uint32_t l = leaf.top();
    leaf.pop();
    g.add_edge(l, c);
    if (--deg[c] == 1) leaf.push(c);
  }
  uint32_t a = leaf.top();
  leaf.pop();
  g.add_edge(a, leaf.top());
  return g;
}

Graph random_family_graph(const FamilySpec& family, const RandomGraphConfig& cfg, uint64_t seed) {
  SplitMix64 r(seed);
  std::vector<uint8_t> side(cfg.n);
  for (uint32_t attempt = 0; attempt <= cfg.max_rejections; ++attempt) {
    Graph g{cfg.n};
    if (family.require_bipartite) {
      for (auto& s : side) s = uint8_t(r.below(2));
      for (uint32_t u = 0; u < cfg.n; ++u)
        for (uint32_t v = u + 1; v < cfg.n; ++v)
          if (side[u] != side[v] && r.chance(cfg.p_num, cfg.p_den)) g.add_edge(u, v);
    } else {
      for (uint32_t u = 0; u < cfg.n; ++u)
        for (uint32_t v = u + 1; v < cfg.n; ++v)
          if (r.chance(cfg.p_num, cfg.p_den)) g.add_edge(u, v);
    }
    if (in_family(g, family)) return g;
  }
  throw CapError("random_family_graph: no family member found within " +
                 std::to_string(cfg.max_rejections) + " rejections; lower the edge probability");
}

namespace {

Clause random_clause(SplitMix64& r, uint32_t n_vars, uint32_t width) {
  std::set<uint32_t> vars;
  while (vars.size() < width) vars.insert(uint32_t(1 + r.below(n_vars)));
  return Clause(vars.begin(), vars.end());
}

void check_cnf_config(const RandomCnfConfig& cfg) {
  if (cfg.n_vars == 0) throw DomainError("random formula: need at least one variable");
  if (cfg.n_clauses == 0) throw DomainError("random formula: need at least one clause");
}

}  // namespace

CnfInstance random_dsat(const RandomCnfConfig& cfg, uint64_t seed) {
  check_cnf_config(cfg);
  if (cfg.n_vars < 2)
    throw DomainError("random_dsat: clauses need 2-3 distinct variables, so n_vars >= 2");
  SplitMix64 r(seed);
  CnfInstance inst;
  inst.n_vars = cfg.n_vars;
  inst.kind = CnfKind::DSAT;
  uint32_t max_width = std::min<uint32_t>(3, cfg.n_vars);
  // Clauses are kept to 2-3 literals with any two clauses sharing at most one
  // literal and never opposing a shared clause's other variable; candidates
  // that break those rules against the clauses accepted so far are redrawn.
  uint32_t rejections = 0;
  while (inst.c1.size() < cfg.n_clauses) {
    Clause cl = random_clause(r, cfg.n_vars, uint32_t(2 + r.below(max_width - 1)));
    for (int& lit : cl)
      if (r.chance(1, 2)) lit = -lit;
    inst.c1.push_back(std::move(cl));
    if (validate_cnf(inst, CnfKind::DSAT).empty()) continue;
    inst.c1.pop_back();
    if (++rejections > cfg.max_rejections)
      throw CapError("random_dsat: no admissible clause found within " +
                     std::to_string(cfg.max_rejections) + " rejections; use more variables");
  }
  return inst;
}

CnfInstance random_monotone(const RandomCnfConfig& cfg, uint64_t seed) {
  check_cnf_config(cfg);
  SplitMix64 r(seed);
  CnfInstance inst;
  inst.n_vars = cfg.n_vars;
  inst.kind = CnfKind::MONOTONE;
  uint32_t max_width = std::min<uint32_t>(3, cfg.n_vars);
  for (uint32_t c = 0; c < cfg.n_clauses; ++c) {
    Clause cl = random_clause(r, cfg.n_vars, uint32_t(1 + r.below(max_width)));
    if (r.chance(1, 2)) {
      inst.c1.push_back(std::move(cl));
    } else {
      for (int& lit : cl) lit = -lit;
      inst.c2.push_back(std::move(cl));
    }
  }
  return inst;
}

uint64_t enumerate_small_graphs(uint32_t n, const FamilySpec& family,
                                const std::function<bool(const Graph&)>& cb) {
  if (n > 9) throw DomainError("enumerate_small_graphs: n must be at most 9");
  std::vector<std::pair<uint32_t, uint32_t>> pairs;
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  uint32_t m = uint32_t(pairs.size());

  Graph g(n);
  uint64_t visited = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << m); ++mask) {
    g.assign(n);
    for (uint64_t bits = mask; bits;) {
      uint32_t k = uint32_t(std::countr_zero(bits));
      bits &= bits - 1;
      g.add_edge(pairs[k].first, pairs[k].second);
    }
    if (!in_family(g, family)) continue;
    ++visited;
    if (!cb(g)) break;
  }
  return visited;
}

}  // namespace wc
