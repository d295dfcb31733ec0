#pragma once
// Shared helpers for the test binaries: standard small graphs and literal
// graph construction.

#include <cstdlib>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wellcover/graph.hpp"

namespace wctest {

inline wc::Graph make(uint32_t n, std::initializer_list<std::pair<uint32_t, uint32_t>> es) {
  wc::Graph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

inline wc::Graph path(uint32_t n) {
  wc::Graph g(n);
  for (uint32_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

inline wc::Graph cycle(uint32_t n) {
  wc::Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

// Star K_{1,k} with center 0.
inline wc::Graph star(uint32_t k) {
  wc::Graph g(k + 1);
  for (uint32_t i = 1; i <= k; ++i) g.add_edge(0, i);
  return g;
}

inline wc::Graph complete(uint32_t n) {
  wc::Graph g(n);
  for (uint32_t u = 0; u < n; ++u)
    for (uint32_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

// K_{a,b} with sides 0..a-1 and a..a+b-1.
inline wc::Graph complete_bipartite(uint32_t a, uint32_t b) {
  wc::Graph g(a + b);
  for (uint32_t u = 0; u < a; ++u)
    for (uint32_t v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

inline wc::VertexSet vs(uint32_t n, std::initializer_list<uint32_t> xs) {
  return wc::VertexSet::of(n, xs);
}

inline std::vector<uint32_t> ids(const wc::VertexSet& s) { return s.to_vector(); }

inline std::string data_dir() {
  const char* d = std::getenv("WELLCOVER_DATA_DIR");
  return d ? d : "data";
}

// The witness sequence is a cycle of length k in g: distinct vertices,
// consecutive (and wraparound) adjacency.
inline bool is_cycle_in(const wc::Graph& g, const std::vector<uint32_t>& c, size_t k) {
  if (c.size() != k) return false;
  wc::VertexSet seen(g.n());
  for (uint32_t v : c) {
    if (v >= g.n() || seen.test(v)) return false;
    seen.set(v);
  }
  for (size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

}  // namespace wctest
