#include "wellcover/graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

namespace wc {

namespace {

[[noreturn]] void domain_fail(const std::string& msg) { throw DomainError(msg); }

void check_same_universe(const VertexSet& a, const VertexSet& b) {
  if (a.universe() != b.universe())
    domain_fail("vertex sets over different universes (" + std::to_string(a.universe()) +
                " vs " + std::to_string(b.universe()) + ")");
}

std::string render_cycle(const std::vector<uint32_t>& c) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << "]";
  return os.str();
}

}  // namespace

// ---- VertexSet ----

size_t VertexSet::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& o) const {
  check_same_universe(*this, o);
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & o.w_[i]) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
  check_same_universe(*this, o);
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  check_same_universe(*this, o);
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

int VertexSet::first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

int VertexSet::next(uint32_t after) const {
  uint32_t v = after + 1;
  size_t i = v >> 6;
  if (i >= w_.size()) return -1;
  uint64_t w = w_[i] >> (v & 63);
  if (w) return int(v + std::countr_zero(w));
  for (++i; i < w_.size(); ++i)
    if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
  return -1;
}

std::vector<uint32_t> VertexSet::to_vector() const {
  std::vector<uint32_t> out;
  out.reserve(count());
  for (int v = first(); v != -1; v = next(uint32_t(v))) out.push_back(uint32_t(v));
  return out;
}

// ---- Graph ----

Graph::Graph(uint32_t n) : n_(n), adj_(n, VertexSet(n)) {}

void Graph::assign(uint32_t n) {
  n_ = n;
  m_ = 0;
  adj_.assign(n, VertexSet(n));
  labels_.clear();
}

void Graph::check_vertex(uint32_t v) const {
  if (v >= n_)
    domain_fail("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(n_) + ")");
}

void Graph::add_edge(uint32_t u, uint32_t v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) domain_fail("self-loop at vertex " + std::to_string(u));
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  ++m_;
}

bool Graph::has_edge(uint32_t u, uint32_t v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[u].test(v);
}

const VertexSet& Graph::neighbors(uint32_t v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<std::pair<uint32_t, uint32_t>> Graph::edges() const {
  std::vector<std::pair<uint32_t, uint32_t>> out;
  out.reserve(m_);
  for (uint32_t u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(uint32_t(v)))
      out.emplace_back(u, uint32_t(v));
  return out;
}

void Graph::set_label(uint32_t v, std::string s) {
  check_vertex(v);
  labels_[v] = std::move(s);
}

std::optional<uint32_t> Graph::vertex_by_label(const std::string& s) const {
  for (const auto& [v, lab] : labels_)
    if (lab == s) return v;
  return std::nullopt;
}

// ---- predicates ----

bool is_independent(const Graph& g, const VertexSet& s) {
  for (int v = s.first(); v != -1; v = s.next(uint32_t(v)))
    if (g.neighbors(uint32_t(v)).intersects(s)) return false;
  return true;
}

bool dominates(const Graph& g, const VertexSet& s, const VertexSet& t) {
  VertexSet covered = closed_neighborhood(g, s);
  return t.is_subset_of(covered);
}

bool is_maximal_independent(const Graph& g, const VertexSet& s) {
  return is_independent(g, s) && dominates(g, s, VertexSet::full(g.n()));
}

VertexSet neighbors_of_set(const Graph& g, const VertexSet& s) {
  VertexSet out(g.n());
  for (int v = s.first(); v != -1; v = s.next(uint32_t(v))) out |= g.neighbors(uint32_t(v));
  return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
  VertexSet out = neighbors_of_set(g, s);
  out |= s;
  return out;
}

namespace {

// Multi-source BFS distances; unreached = UINT32_MAX.
std::vector<uint32_t> bfs_dist(const Graph& g, const VertexSet& src) {
  std::vector<uint32_t> dist(g.n(), UINT32_MAX);
  std::vector<uint32_t> queue;
  queue.reserve(g.n());
  for (int v = src.first(); v != -1; v = src.next(uint32_t(v))) {
    dist[uint32_t(v)] = 0;
    queue.push_back(uint32_t(v));
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t u = queue[head];
    const VertexSet& nb = g.neighbors(u);
    for (int w = nb.first(); w != -1; w = nb.next(uint32_t(w)))
      if (dist[uint32_t(w)] == UINT32_MAX) {
        dist[uint32_t(w)] = dist[u] + 1;
        queue.push_back(uint32_t(w));
      }
  }
  return dist;
}

}  // namespace

VertexSet neighborhood_layer(const Graph& g, const VertexSet& s, uint32_t i, bool closed) {
  check_same_universe(s, VertexSet(g.n()));
  if (s.empty()) domain_fail("neighborhood_layer: source set is empty");
  auto dist = bfs_dist(g, s);
  VertexSet out(g.n());
  for (uint32_t v = 0; v < g.n(); ++v)
    if (dist[v] != UINT32_MAX && (closed ? dist[v] <= i : dist[v] == i)) out.set(v);
  return out;
}

std::optional<uint32_t> distance(const Graph& g, uint32_t u, uint32_t v) {
  g.check_vertex(u);
  g.check_vertex(v);
  VertexSet src(g.n());
  src.set(u);
  auto dist = bfs_dist(g, src);
  if (dist[v] == UINT32_MAX) return std::nullopt;
  return dist[v];
}

// ---- bipartition / odd cycles ----

namespace {

struct ColorResult {
  bool ok;
  std::vector<int8_t> color;    // 0/1, -1 unreached (never after run)
  std::vector<uint32_t> parent;  // BFS forest
  uint32_t conflict_u = 0, conflict_w = 0;  // same-color edge when !ok
};

ColorResult two_color(const Graph& g) {
  ColorResult r{true, std::vector<int8_t>(g.n(), -1), std::vector<uint32_t>(g.n(), UINT32_MAX)};
  std::vector<uint32_t> queue;
  queue.reserve(g.n());
  for (uint32_t root = 0; root < g.n(); ++root) {
    if (r.color[root] != -1) continue;
    r.color[root] = 0;
    queue.clear();
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t u = queue[head];
      const VertexSet& nb = g.neighbors(u);
      for (int wi = nb.first(); wi != -1; wi = nb.next(uint32_t(wi))) {
        uint32_t w = uint32_t(wi);
        if (r.color[w] == -1) {
          r.color[w] = int8_t(1 - r.color[u]);
          r.parent[w] = u;
          queue.push_back(w);
        } else if (r.color[w] == r.color[u]) {
          r.ok = false;
          r.conflict_u = u;
          r.conflict_w = w;
          return r;
        }
      }
    }
  }
  return r;
}

// Join the BFS-tree paths of u and w at their lowest common ancestor; with
// the edge uw this closes a cycle (odd when colors agree).
std::vector<uint32_t> tree_cycle(const std::vector<uint32_t>& parent, uint32_t u, uint32_t w,
                                 uint32_t n) {
  std::vector<uint8_t> on_u_path(n, 0);
  std::vector<uint32_t> up;
  for (uint32_t x = u;; x = parent[x]) {
    up.push_back(x);
    on_u_path[x] = 1;
    if (parent[x] == UINT32_MAX) break;
  }
  std::vector<uint32_t> wp;
  uint32_t meet = UINT32_MAX;
  for (uint32_t x = w;; x = parent[x]) {
    if (on_u_path[x]) {
      meet = x;
      break;
    }
    wp.push_back(x);
    if (parent[x] == UINT32_MAX) break;
  }
  std::vector<uint32_t> cyc;
  for (uint32_t x : up) {
    cyc.push_back(x);
    if (x == meet) break;
  }
  std::reverse(cyc.begin(), cyc.end());  // meet ... u
  // Continue across the uw edge and climb w's path back toward meet; the
  // wraparound edge is (last element -> meet).
  for (uint32_t x : wp) cyc.push_back(x);
  return cyc;
}

}  // namespace

std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g) {
  ColorResult r = two_color(g);
  if (!r.ok) return std::nullopt;
  VertexSet a(g.n()), b(g.n());
  for (uint32_t v = 0; v < g.n(); ++v) (r.color[v] == 0 ? a : b).set(v);
  return std::make_pair(a, b);
}

std::optional<std::vector<uint32_t>> find_odd_cycle(const Graph& g) {
  ColorResult r = two_color(g);
  if (r.ok) return std::nullopt;
  return tree_cycle(r.parent, r.conflict_u, r.conflict_w, g.n());
}

// ---- fixed-length cycles ----

namespace {

// DFS over simple paths anchored at the cycle's minimum vertex s: every
// interior vertex exceeds s, so each cycle is found exactly at its minimum.
bool cycle_dfs(const Graph& g, uint32_t s, uint32_t k, std::vector<uint32_t>& path,
               VertexSet& used) {
  uint32_t cur = path.back();
  if (path.size() == k) return g.has_edge(cur, s);
  const VertexSet& nb = g.neighbors(cur);
  for (int wi = nb.next(s); wi != -1; wi = nb.next(uint32_t(wi))) {
    uint32_t w = uint32_t(wi);
    if (used.test(w)) continue;
    used.set(w);
    path.push_back(w);
    if (cycle_dfs(g, s, k, path, used)) return true;
    path.pop_back();
    used.reset(w);
  }
  return false;
}

std::optional<std::vector<uint32_t>> find_cycle_impl(const Graph& g, uint32_t k) {
  if (k < 3 || k > 8) domain_fail("cycle length " + std::to_string(k) + " unsupported (3..8)");
  std::vector<uint32_t> path;
  path.reserve(k);
  VertexSet used(g.n());
  for (uint32_t s = 0; s < g.n(); ++s) {
    path.clear();
    path.push_back(s);
    used.clear();
    used.set(s);
    if (cycle_dfs(g, s, k, path, used)) return path;
  }
  return std::nullopt;
}

}  // namespace

bool contains_cycle_of_length(const Graph& g, uint32_t k) {
  return find_cycle_impl(g, k).has_value();
}

std::optional<std::vector<uint32_t>> find_cycle_of_length(const Graph& g, uint32_t k) {
  return find_cycle_impl(g, k);
}

// ---- girth ----

namespace {

// BFS from every root; the best dist[u]+dist[w]+1 over non-tree edges is the
// girth: for the shallowest vertex of a shortest cycle the bound is tight,
// and no pair can undercut the girth.
struct GirthHit {
  uint32_t len = UINT32_MAX;
  uint32_t root = 0, u = 0, w = 0;
};

GirthHit girth_scan(const Graph& g) {
  GirthHit best;
  std::vector<uint32_t> dist(g.n()), parent(g.n()), queue;
  for (uint32_t root = 0; root < g.n() && best.len > 3; ++root) {
    std::fill(dist.begin(), dist.end(), UINT32_MAX);
    queue.clear();
    dist[root] = 0;
    parent[root] = UINT32_MAX;
    queue.push_back(root);
    for (size_t head = 0; head < queue.size(); ++head) {
      uint32_t u = queue[head];
      // Any candidate via u has length >= dist[u] + (dist[u]-1) + 1.
      if (2 * dist[u] >= best.len) break;
      const VertexSet& nb = g.neighbors(u);
      for (int wi = nb.first(); wi != -1; wi = nb.next(uint32_t(wi))) {
        uint32_t w = uint32_t(wi);
        if (dist[w] == UINT32_MAX) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue.push_back(w);
        } else if (w != parent[u] && parent[w] != u) {
          uint32_t len = dist[u] + dist[w] + 1;
          if (len < best.len) best = {len, root, u, w};
        }
      }
    }
  }
  return best;
}

}  // namespace

std::optional<uint32_t> girth(const Graph& g) {
  GirthHit h = girth_scan(g);
  if (h.len == UINT32_MAX) return std::nullopt;
  return h.len;
}

std::optional<std::vector<uint32_t>> find_shortest_cycle(const Graph& g) {
  GirthHit h = girth_scan(g);
  if (h.len == UINT32_MAX) return std::nullopt;
  // Re-run the BFS from the recorded root to rebuild parents, then join the
  // two tree paths; minimality forces the meet to be the root itself.
  std::vector<uint32_t> dist(g.n(), UINT32_MAX), parent(g.n(), UINT32_MAX), queue;
  dist[h.root] = 0;
  queue.push_back(h.root);
  for (size_t head = 0; head < queue.size(); ++head) {
    uint32_t u = queue[head];
    const VertexSet& nb = g.neighbors(u);
    for (int wi = nb.first(); wi != -1; wi = nb.next(uint32_t(wi))) {
      uint32_t w = uint32_t(wi);
      if (dist[w] == UINT32_MAX) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  return tree_cycle(parent, h.u, h.w, g.n());
}

// ---- components ----

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.n());
  for (uint32_t root = 0; root < g.n(); ++root) {
    if (seen.test(root)) continue;
    VertexSet comp(g.n());
    comp.set(root);
    seen.set(root);
    std::vector<uint32_t> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      const VertexSet& nb = g.neighbors(queue[head]);
      for (int wi = nb.first(); wi != -1; wi = nb.next(uint32_t(wi)))
        if (!seen.test(uint32_t(wi))) {
          seen.set(uint32_t(wi));
          comp.set(uint32_t(wi));
          queue.push_back(uint32_t(wi));
        }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// ---- induced complete bipartite ----

bool is_induced_complete_bipartite(const Graph& g, const VertexSet& bx, const VertexSet& by) {
  if (bx.universe() != g.n() || by.universe() != g.n()) return false;
  if (bx.empty() || by.empty()) return false;
  if (bx.intersects(by)) return false;
  for (int v = bx.first(); v != -1; v = bx.next(uint32_t(v))) {
    const VertexSet& nb = g.neighbors(uint32_t(v));
    if (nb.intersects(bx)) return false;       // side not independent
    if (!by.is_subset_of(nb)) return false;    // missing cross edge
  }
  for (int v = by.first(); v != -1; v = by.next(uint32_t(v)))
    if (g.neighbors(uint32_t(v)).intersects(by)) return false;
  return true;
}

// ---- leaves ----

VertexSet leaves(const Graph& g) {
  VertexSet out(g.n());
  for (uint32_t v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) out.set(v);
  return out;
}

VertexSet s_x(const Graph& g, uint32_t x) {
  g.check_vertex(x);
  size_t d = g.degree(x);
  if (d == 0) domain_fail("s_x: vertex " + std::to_string(x) + " is isolated");
  if (d == 1) domain_fail("s_x: vertex " + std::to_string(x) + " is a leaf");
  VertexSet l = leaves(g);
  VertexSet out = g.neighbors(x);
  if (!l.empty()) out -= neighborhood_layer(g, l, 1, false);
  return out;
}

// ---- families ----

FamilySpec family_bip_c6free() {
  FamilySpec f;
  f.require_bipartite = true;
  f.forbidden_cycles = {6};
  return f;
}

FamilySpec family_c3c4c5c7free() {
  FamilySpec f;
  f.forbidden_cycles = {3, 4, 5, 7};
  return f;
}

FamilySpec family_by_name(const std::string& name) {
  if (name == "bip-c6free") return family_bip_c6free();
  if (name == "c3c4c5c7-free") return family_c3c4c5c7free();
  if (name == "girth6") {
    FamilySpec f;
    f.require_bipartite = true;
    f.min_girth = 6;
    return f;
  }
  if (name == "no-c3c5") {
    FamilySpec f;
    f.forbidden_cycles = {3, 5};
    return f;
  }
  if (name == "any") return FamilySpec{};
  domain_fail("unknown graph family '" + name +
              "' (expected bip-c6free, girth6, no-c3c5, c3c4c5c7-free, any)");
}

std::vector<FamilyViolation> validate_family(const Graph& g, const FamilySpec& spec) {
  std::vector<FamilyViolation> out;
  if (spec.require_bipartite) {
    if (auto oc = find_odd_cycle(g)) {
      out.push_back({"bipartite", *oc,
                     "graph is not bipartite: odd cycle " + render_cycle(*oc)});
    }
  }
  for (uint32_t k : spec.forbidden_cycles) {
    if (auto c = find_cycle_of_length(g, k)) {
      out.push_back({"cycle-" + std::to_string(k), *c,
                     "forbidden " + std::to_string(k) + "-cycle present: " + render_cycle(*c)});
    }
  }
  if (spec.min_girth) {
    if (auto c = find_shortest_cycle(g); c && c->size() < *spec.min_girth) {
      out.push_back({"girth", *c,
                     "girth " + std::to_string(c->size()) + " below required " +
                         std::to_string(*spec.min_girth) + ": " + render_cycle(*c)});
    }
  }
  return out;
}

void require_family(const Graph& g, const FamilySpec& spec, const std::string& op_name) {
  auto v = validate_family(g, spec);
  if (!v.empty()) domain_fail(op_name + ": " + v[0].message + " (pass unchecked to skip)");
}

namespace {

// Allocation-free checks for graphs on <= 64 vertices (hot enumeration path).
bool bipartite_fast64(const Graph& g) {
  std::array<int8_t, 64> color;
  color.fill(-1);
  std::array<uint8_t, 64> queue;
  uint32_t n = g.n();
  for (uint32_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    uint32_t head = 0, tail = 0;
    queue[tail++] = uint8_t(root);
    while (head < tail) {
      uint32_t u = queue[head++];
      uint64_t nb = g.neighbors(u).word0();
      while (nb) {
        uint32_t w = uint32_t(std::countr_zero(nb));
        nb &= nb - 1;
        if (color[w] == -1) {
          color[w] = int8_t(1 - color[u]);
          queue[tail++] = uint8_t(w);
        } else if (color[w] == color[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_cycle_fast64(const Graph& g, uint32_t k) {
  uint32_t n = g.n();
  std::array<uint32_t, 9> path;
  for (uint32_t s = 0; s < n; ++s) {
    // iterative DFS over simple paths with min vertex s
    uint64_t used = uint64_t(1) << s;
    uint32_t depth = 0;
    path[0] = s;
    std::array<uint64_t, 9> iter;  // remaining neighbor masks per level
    uint64_t above = ~((uint64_t(2) << s) - 1);  // vertices > s
    iter[0] = g.neighbors(s).word0() & above;
    while (true) {
      if (depth + 1 == k) {
        if (g.neighbors(path[depth]).word0() >> s & 1) return true;
        // backtrack
        used &= ~(uint64_t(1) << path[depth]);
        --depth;
        continue;
      }
      uint64_t avail = iter[depth] & ~used;
      if (!avail) {
        if (depth == 0) break;
        used &= ~(uint64_t(1) << path[depth]);
        --depth;
        continue;
      }
      uint32_t w = uint32_t(std::countr_zero(avail));
      iter[depth] &= ~(uint64_t(1) << w);
      ++depth;
      path[depth] = w;
      used |= uint64_t(1) << w;
      iter[depth] = g.neighbors(w).word0() & above;
    }
  }
  return false;
}

}  // namespace

bool in_family(const Graph& g, const FamilySpec& spec) {
  bool fast = g.n() <= 64;
  if (spec.require_bipartite) {
    if (fast ? !bipartite_fast64(g) : !bipartition(g).has_value()) return false;
  }
  for (uint32_t k : spec.forbidden_cycles) {
    if (k < 3 || k > 8) domain_fail("cycle length " + std::to_string(k) + " unsupported (3..8)");
    if (fast ? has_cycle_fast64(g, k) : contains_cycle_of_length(g, k)) return false;
  }
  if (spec.min_girth) {
    if (auto gr = girth(g); gr && *gr < *spec.min_girth) return false;
  }
  return true;
}

}  // namespace wc
