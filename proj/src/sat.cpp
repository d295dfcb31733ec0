#include "wellcover/sat.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DomainError(msg); }

std::string clause_str(const Clause& c) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i];
  os << ")";
  return os.str();
}

// Count of identical literals, and whether some variable appears with
// opposite signs in the two clauses (inputs sorted by variable).
struct Overlap {
  uint32_t shared = 0;
  bool opposed = false;
};

Overlap overlap(const Clause& a, const Clause& b) {
  Overlap o;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int va = std::abs(a[i]), vb = std::abs(b[j]);
    if (va < vb) {
      ++i;
    } else if (vb < va) {
      ++j;
    } else {
      if (a[i] == b[j])
        ++o.shared;
      else
        o.opposed = true;
      ++i;
      ++j;
    }
  }
  return o;
}

}  // namespace

std::vector<Clause> CnfInstance::all_clauses() const {
  std::vector<Clause> out = c1;
  out.insert(out.end(), c2.begin(), c2.end());
  return out;
}

std::string kind_name(CnfKind k) {
  switch (k) {
    case CnfKind::GENERIC: return "GENERIC";
    case CnfKind::MONOTONE: return "MONOTONE";
    case CnfKind::DSAT: return "DSAT";
    case CnfKind::DMSAT: return "DMSAT";
  }
  return "GENERIC";
}

CnfKind kind_by_name(const std::string& s) {
  std::string t;
  for (char c : s) t.push_back(char(std::tolower(uint8_t(c))));
  if (t == "generic") return CnfKind::GENERIC;
  if (t == "monotone") return CnfKind::MONOTONE;
  if (t == "dsat") return CnfKind::DSAT;
  if (t == "dmsat") return CnfKind::DMSAT;
  fail("unknown formula kind '" + s + "' (expected generic, monotone, dsat, dmsat)");
}

void canonicalize(CnfInstance& inst) {
  auto fix = [&](std::vector<Clause>& part, const char* name) {
    for (size_t ci = 0; ci < part.size(); ++ci) {
      Clause& c = part[ci];
      std::sort(c.begin(), c.end(),
                [](int a, int b) { return std::abs(a) < std::abs(b) || (std::abs(a) == std::abs(b) && a < b); });
      c.erase(std::unique(c.begin(), c.end()), c.end());
      for (size_t i = 0; i + 1 < c.size(); ++i)
        if (std::abs(c[i]) == std::abs(c[i + 1]))
          fail(std::string(name) + "[" + std::to_string(ci) + "] contains a variable and its negation: " +
               clause_str(c));
    }
  };
  fix(inst.c1, "c1");
  fix(inst.c2, "c2");
}

void check_wellformed(const CnfInstance& inst) {
  auto check = [&](const std::vector<Clause>& part, const char* name) {
    for (size_t ci = 0; ci < part.size(); ++ci) {
      const Clause& c = part[ci];
      std::string where = std::string(name) + "[" + std::to_string(ci) + "]";
      if (c.empty()) fail(where + " is empty");
      for (int lit : c) {
        if (lit == 0) fail(where + " contains literal 0");
        if (uint32_t(std::abs(lit)) > inst.n_vars)
          fail(where + " references variable " + std::to_string(std::abs(lit)) + " beyond n_vars=" +
               std::to_string(inst.n_vars));
      }
      for (size_t i = 0; i + 1 < c.size(); ++i) {
        if (std::abs(c[i]) > std::abs(c[i + 1])) fail(where + " literals not sorted by variable");
        if (std::abs(c[i]) == std::abs(c[i + 1])) fail(where + " repeats a variable");
      }
    }
  };
  check(inst.c1, "c1");
  check(inst.c2, "c2");
}

namespace {

void check_monotone_split(const CnfInstance& inst, std::vector<CnfViolation>& out) {
  for (size_t i = 0; i < inst.c1.size(); ++i)
    for (int lit : inst.c1[i])
      if (lit < 0) {
        out.push_back({"monotone-split", "c1[" + std::to_string(i) + "] " + clause_str(inst.c1[i]) +
                                             " contains a negative literal"});
        break;
      }
  for (size_t i = 0; i < inst.c2.size(); ++i)
    for (int lit : inst.c2[i])
      if (lit > 0) {
        out.push_back({"monotone-split", "c2[" + std::to_string(i) + "] " + clause_str(inst.c2[i]) +
                                             " contains a positive literal"});
        break;
      }
}

void check_pair_overlaps(const std::vector<Clause>& cs, const char* name, uint32_t max_shared,
                         bool forbid_opposed_when_shared, std::vector<CnfViolation>& out) {
  for (size_t i = 0; i < cs.size(); ++i)
    for (size_t j = i + 1; j < cs.size(); ++j) {
      Overlap o = overlap(cs[i], cs[j]);
      if (o.shared > max_shared)
        out.push_back({"shared-literals", std::string(name) + "[" + std::to_string(i) + "] and " +
                                              name + "[" + std::to_string(j) + "] share " +
                                              std::to_string(o.shared) + " literals: " +
                                              clause_str(cs[i]) + " " + clause_str(cs[j])});
      if (forbid_opposed_when_shared && o.shared >= 1 && o.opposed)
        out.push_back({"opposed-while-shared",
                       std::string(name) + "[" + std::to_string(i) + "] and " + name + "[" +
                           std::to_string(j) + "] share a literal while opposing another: " +
                           clause_str(cs[i]) + " " + clause_str(cs[j])});
    }
}

void check_sizes(const std::vector<Clause>& cs, const char* name, size_t lo, size_t hi,
                 std::vector<CnfViolation>& out) {
  for (size_t i = 0; i < cs.size(); ++i)
    if (cs[i].size() < lo || cs[i].size() > hi)
      out.push_back({"clause-size", std::string(name) + "[" + std::to_string(i) + "] " +
                                        clause_str(cs[i]) + " has " + std::to_string(cs[i].size()) +
                                        " literals (expected " + std::to_string(lo) +
                                        (lo == hi ? "" : ".." + std::to_string(hi)) + ")"});
}

}  // namespace

std::vector<CnfViolation> validate_cnf(const CnfInstance& raw, CnfKind kind) {
  CnfInstance inst = raw;  // literal order within a clause is not a rule violation
  canonicalize(inst);
  check_wellformed(inst);
  std::vector<CnfViolation> out;
  switch (kind) {
    case CnfKind::GENERIC:
      break;
    case CnfKind::MONOTONE:
      check_monotone_split(inst, out);
      break;
    case CnfKind::DSAT: {
      auto all = inst.all_clauses();
      check_sizes(all, "clause", 2, 3, out);
      check_pair_overlaps(all, "clause", 1, true, out);
      break;
    }
    case CnfKind::DMSAT:
      check_monotone_split(inst, out);
      check_sizes(inst.c1, "c1", 2, 3, out);
      check_sizes(inst.c2, "c2", 2, 2, out);
      check_pair_overlaps(inst.c1, "c1", 1, false, out);
      check_pair_overlaps(inst.c2, "c2", 0, false, out);
      break;
  }
  return out;
}

void require_kind(const CnfInstance& inst, CnfKind kind, const std::string& op_name) {
  auto v = validate_cnf(inst, kind);
  if (!v.empty()) fail(op_name + ": input is not " + kind_name(kind) + ": " + v[0].message);
}

bool clause_satisfied(const Clause& c, const Assignment& a) {
  for (int lit : c) {
    uint32_t v = uint32_t(std::abs(lit)) - 1;
    bool val = v < a.bits.size() && a.bits[v];
    if (lit > 0 ? val : !val) return true;
  }
  return false;
}

bool satisfies(const CnfInstance& inst, const Assignment& a) {
  for (const auto& c : inst.c1)
    if (!clause_satisfied(c, a)) return false;
  for (const auto& c : inst.c2)
    if (!clause_satisfied(c, a)) return false;
  return true;
}

// ---- DIMACS ----

std::string to_dimacs(const CnfInstance& inst) {
  std::ostringstream os;
  os << "p cnf " << inst.n_vars << " " << inst.clause_count() << "\n";
  for (const auto* part : {&inst.c1, &inst.c2})
    for (const auto& c : *part) {
      for (int lit : c) os << lit << " ";
      os << "0\n";
    }
  return os.str();
}

CnfInstance from_dimacs(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  CnfInstance inst;
  bool have_header = false;
  size_t expected = 0;
  std::vector<Clause> clauses;
  Clause cur;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == 'c') continue;
    if (line[0] == 'p') {
      std::istringstream hs(line);
      std::string p, fmt;
      long n = -1, m = -1;
      hs >> p >> fmt >> n >> m;
      if (fmt != "cnf" || n < 0 || m < 0 || hs.fail())
        fail("malformed header line: '" + line + "'");
      inst.n_vars = uint32_t(n);
      expected = size_t(m);
      have_header = true;
      continue;
    }
    if (!have_header) fail("clause data before header: '" + line + "'");
    std::istringstream ls(line);
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        clauses.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(lit);
      }
    }
  }
  if (!have_header) fail("missing 'p cnf' header");
  if (!cur.empty()) fail("last clause not terminated with 0");
  if (clauses.size() != expected)
    fail("header declares " + std::to_string(expected) + " clauses but " +
         std::to_string(clauses.size()) + " present");
  for (auto& c : clauses) {
    bool all_neg = !c.empty();
    for (int lit : c) all_neg = all_neg && lit < 0;
    (all_neg ? inst.c2 : inst.c1).push_back(std::move(c));
  }
  canonicalize(inst);
  check_wellformed(inst);
  return inst;
}

// ---- reductions ----

CnfInstance dsat_to_dmsat(const CnfInstance& inst) {
  require_kind(inst, CnfKind::DSAT, "dsat_to_dmsat");
  uint32_t n = inst.n_vars;
  CnfInstance out;
  out.n_vars = 2 * n;
  out.kind = CnfKind::DMSAT;
  for (const auto& c : inst.all_clauses()) {
    Clause r;
    for (int lit : c) r.push_back(lit > 0 ? lit : int(n) - lit);  // -i -> z_i = n+i
    std::sort(r.begin(), r.end());
    out.c1.push_back(std::move(r));
  }
  for (uint32_t i = 1; i <= n; ++i) out.c1.push_back({int(i), int(n + i)});
  for (uint32_t i = 1; i <= n; ++i) out.c2.push_back({-int(i), -int(n + i)});
  return out;
}

Assignment dsat_assignment_forward(const CnfInstance& dsat, const Assignment& a) {
  if (a.bits.size() != dsat.n_vars) fail("assignment length does not match variable count");
  Assignment out;
  out.bits = a.bits;
  for (uint32_t i = 0; i < dsat.n_vars; ++i) out.bits.push_back(1 - a.bits[i]);
  return out;
}

Assignment dsat_assignment_back(const CnfInstance& dsat, const Assignment& a) {
  if (a.bits.size() != size_t(2) * dsat.n_vars) fail("assignment length does not match 2x variable count");
  Assignment out;
  out.bits.assign(a.bits.begin(), a.bits.begin() + dsat.n_vars);
  return out;
}

ReductionArtifact dmsat_to_gs(const CnfInstance& inst) {
  require_kind(inst, CnfKind::DMSAT, "dmsat_to_gs");
  if (inst.c1.empty()) fail("dmsat_to_gs: c1 is empty (the designated star needs a nonempty side)");
  uint32_t m = uint32_t(inst.c1.size());
  uint32_t mp = uint32_t(inst.c2.size());
  uint32_t n = inst.n_vars;
  ReductionArtifact art;
  art.n_vars = n;
  uint32_t total = 1 + 2 * m + mp + 2 * n;
  art.g = Graph(total);
  const uint32_t x = 0;
  auto y = [&](uint32_t j) { return 1 + (j - 1); };             // j = 1..m
  auto v = [&](uint32_t j) { return 1 + m + (j - 1); };         // j = 1..m
  auto vp = [&](uint32_t j) { return 1 + 2 * m + (j - 1); };    // j = 1..m'
  auto u = [&](uint32_t i) { return 1 + 2 * m + mp + (i - 1); };
  auto up = [&](uint32_t i) { return 1 + 2 * m + mp + n + (i - 1); };

  art.g.set_label(x, "x");
  for (uint32_t j = 1; j <= m; ++j) {
    art.g.set_label(y(j), "y" + std::to_string(j));
    art.g.set_label(v(j), "v" + std::to_string(j));
    art.g.add_edge(x, y(j));
    art.g.add_edge(y(j), v(j));
  }
  for (uint32_t j = 1; j <= mp; ++j) {
    art.g.set_label(vp(j), "v'" + std::to_string(j));
    art.g.add_edge(x, vp(j));
  }
  for (uint32_t i = 1; i <= n; ++i) {
    art.g.set_label(u(i), "u" + std::to_string(i));
    art.g.set_label(up(i), "u'" + std::to_string(i));
    art.g.add_edge(u(i), up(i));
    art.u_ids.push_back(u(i));
    art.uprime_ids.push_back(up(i));
  }
  for (uint32_t j = 1; j <= m; ++j)
    for (int lit : inst.c1[j - 1]) art.g.add_edge(v(j), u(uint32_t(lit)));
  for (uint32_t j = 1; j <= mp; ++j)
    for (int lit : inst.c2[j - 1]) art.g.add_edge(vp(j), up(uint32_t(-lit)));

  art.bx = VertexSet(total);
  art.bx.set(x);
  art.by = VertexSet(total);
  for (uint32_t j = 1; j <= m; ++j) art.by.set(y(j));
  return art;
}

ReductionArtifact monotone_to_gs(const CnfInstance& inst) {
  require_kind(inst, CnfKind::MONOTONE, "monotone_to_gs");
  uint32_t m = uint32_t(inst.c1.size());
  uint32_t mp = uint32_t(inst.c2.size());
  uint32_t n = inst.n_vars;
  ReductionArtifact art;
  art.n_vars = n;
  uint32_t total = 3 + m + mp + 2 * n;
  art.g = Graph(total);
  const uint32_t z = 0, y1 = 1, y2 = 2;
  auto v = [&](uint32_t j) { return 3 + (j - 1); };
  auto vp = [&](uint32_t j) { return 3 + m + (j - 1); };
  auto u = [&](uint32_t i) { return 3 + m + mp + (i - 1); };
  auto up = [&](uint32_t i) { return 3 + m + mp + n + (i - 1); };

  art.g.set_label(z, "z");
  art.g.set_label(y1, "y1");
  art.g.set_label(y2, "y2");
  art.g.add_edge(z, y1);
  art.g.add_edge(z, y2);
  for (uint32_t j = 1; j <= m; ++j) {
    art.g.set_label(v(j), "v" + std::to_string(j));
    art.g.add_edge(y1, v(j));
  }
  for (uint32_t j = 1; j <= mp; ++j) {
    art.g.set_label(vp(j), "v'" + std::to_string(j));
    art.g.add_edge(y2, vp(j));
  }
  for (uint32_t i = 1; i <= n; ++i) {
    art.g.set_label(u(i), "u" + std::to_string(i));
    art.g.set_label(up(i), "u'" + std::to_string(i));
    art.g.add_edge(u(i), up(i));
    art.u_ids.push_back(u(i));
    art.uprime_ids.push_back(up(i));
  }
  for (uint32_t j = 1; j <= m; ++j)
    for (int lit : inst.c1[j - 1]) art.g.add_edge(v(j), u(uint32_t(lit)));
  for (uint32_t j = 1; j <= mp; ++j)
    for (int lit : inst.c2[j - 1]) art.g.add_edge(vp(j), up(uint32_t(-lit)));

  art.bx = VertexSet(total);
  art.bx.set(z);
  art.by = VertexSet(total);
  art.by.set(y1);
  art.by.set(y2);
  return art;
}

ReductionArtifact extend_to_kpq(const ReductionArtifact& art, uint32_t p, uint32_t q) {
  if (p < 1) fail("extend_to_kpq: p must be at least 1");
  if (q < 2) fail("extend_to_kpq: q must be at least 2");
  if (art.bx.count() != 1 || art.by.count() != 2)
    fail("extend_to_kpq: artifact's designated subgraph is not the 3-vertex path");
  if (!is_induced_complete_bipartite(art.g, art.bx, art.by))
    fail("extend_to_kpq: artifact's designated subgraph is malformed");
  uint32_t z = uint32_t(art.bx.first());
  std::vector<uint32_t> ys = art.by.to_vector();

  // New vertex budget: p >= 2 adds y_3..y_p and z_2..z_q; p = 1 keeps the
  // singleton side on z and adds y_3..y_q.
  uint32_t new_y = (p >= 2) ? p - 2 : q - 2;
  uint32_t new_z = (p >= 2) ? q - 1 : 0;
  uint32_t n0 = art.g.n();
  uint32_t total = n0 + new_y + new_z;

  ReductionArtifact out;
  out.n_vars = art.n_vars;
  out.u_ids = art.u_ids;
  out.uprime_ids = art.uprime_ids;
  out.g = Graph(total);
  for (auto [a, b] : art.g.edges()) out.g.add_edge(a, b);
  for (const auto& [vtx, lab] : art.g.labels()) out.g.set_label(vtx, lab);

  std::vector<uint32_t> yside = ys, zside = {z};
  for (uint32_t t = 0; t < new_y; ++t) {
    uint32_t id = n0 + t;
    out.g.set_label(id, "y" + std::to_string(3 + t));
    yside.push_back(id);
  }
  for (uint32_t t = 0; t < new_z; ++t) {
    uint32_t id = n0 + new_y + t;
    out.g.set_label(id, "z" + std::to_string(2 + t));
    zside.push_back(id);
  }
  for (uint32_t yv : yside)
    for (uint32_t zv : zside)
      if (!out.g.has_edge(yv, zv)) out.g.add_edge(yv, zv);

  out.bx = VertexSet(total);
  out.by = VertexSet(total);
  if (p == 1) {
    // sides ({z}, {y_1..y_q})
    out.bx.set(z);
    for (uint32_t yv : yside) out.by.set(yv);
  } else {
    for (uint32_t yv : yside) out.bx.set(yv);
    for (uint32_t zv : zside) out.by.set(zv);
  }
  return out;
}

VertexSet assignment_to_witness(const ReductionArtifact& art, const Assignment& a) {
  if (a.bits.size() != art.n_vars) fail("assignment length does not match artifact variable count");
  VertexSet s(art.g.n());
  for (uint32_t i = 0; i < art.n_vars; ++i) s.set(a.bits[i] ? art.u_ids[i] : art.uprime_ids[i]);
  return s;
}

Assignment witness_to_assignment(const ReductionArtifact& art, const VertexSet& s) {
  Assignment a;
  for (uint32_t i = 0; i < art.n_vars; ++i) a.bits.push_back(s.test(art.u_ids[i]) ? 1 : 0);
  return a;
}

}  // namespace wc
