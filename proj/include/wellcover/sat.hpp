#pragma once
// CNF instances with a designated two-part clause split, the restricted
// fragments the graph constructions need, validators for those fragments,
// and the SAT-to-generating-subgraph reductions with their witness maps.

#include <cstdint>
#include <string>
#include <vector>

#include "wellcover/graph.hpp"

namespace wc {

// Literals are signed 1-based variable indices (DIMACS style): +v / -v.
using Clause = std::vector<int>;

enum class CnfKind { GENERIC, MONOTONE, DSAT, DMSAT };

std::string kind_name(CnfKind k);
CnfKind kind_by_name(const std::string& s);  // case-insensitive

struct CnfInstance {
  uint32_t n_vars = 0;
  std::vector<Clause> c1;  // designated first part
  std::vector<Clause> c2;  // designated second part
  CnfKind kind = CnfKind::GENERIC;

  std::vector<Clause> all_clauses() const;
  size_t clause_count() const { return c1.size() + c2.size(); }
};

// Structural well-formedness: var indices in range, clause literals sorted by
// variable with no duplicate variable (so never v and -v together), clauses
// nonempty. Throws DomainError describing the first problem.
void check_wellformed(const CnfInstance& inst);
// Sort each clause by |literal| and drop duplicate literals; a clause with
// both v and -v is a domain error.
void canonicalize(CnfInstance& inst);

struct CnfViolation {
  std::string rule;
  std::string message;
};

// All violations of the named fragment's rules (empty = valid):
//   MONOTONE: c1 all-positive, c2 all-negative.
//   DSAT: clause sizes 2..3; two clauses share at most one literal; and if
//         clauses share a literal, no variable occurs positively in one and
//         negatively in the other.
//   DMSAT: monotone split; c1 sizes 2..3; c2 sizes exactly 2; c1 clauses
//          pairwise share at most one literal; c2 clauses pairwise disjoint.
//   GENERIC: only well-formedness.
std::vector<CnfViolation> validate_cnf(const CnfInstance& inst, CnfKind kind);
void require_kind(const CnfInstance& inst, CnfKind kind, const std::string& op_name);

struct Assignment {
  std::vector<uint8_t> bits;  // bits[i] = value of variable i+1
};

bool clause_satisfied(const Clause& c, const Assignment& a);
bool satisfies(const CnfInstance& inst, const Assignment& a);

// ---- DIMACS ----

std::string to_dimacs(const CnfInstance& inst);
// Partition recovered from literal signs (all-negative clause -> c2, else
// c1); kind comes back GENERIC since the format carries none.
CnfInstance from_dimacs(const std::string& text);

// ---- reductions ----

// Equisatisfiable designated-monotone instance: variables x_1..x_n keep
// their indices, z_i = n+i; c'_j replaces each negative literal -i by z_i;
// plus clauses (x_i, z_i) and (-x_i, -z_i). Output c1 = C' then D, c2 = E,
// kind DMSAT. Input must validate as DSAT.
CnfInstance dsat_to_dmsat(const CnfInstance& inst);

// Maps a satisfying assignment of the DSAT instance to one of its image
// (z_i = not x_i), and back (restriction).
Assignment dsat_assignment_forward(const CnfInstance& dsat, const Assignment& a);
Assignment dsat_assignment_back(const CnfInstance& dsat, const Assignment& a);

// A graph plus a designated induced complete bipartite subgraph.
struct ReductionArtifact {
  Graph g;
  VertexSet bx, by;
  // Role ids for the witness maps (filled by the constructions below).
  uint32_t n_vars = 0;
  std::vector<uint32_t> u_ids, uprime_ids;  // u_i / u'_i, index i-1
};

// Build the incidence graph of a designated-monotone instance with C1
// nonempty; the designated subgraph is the star on x and the y_j. The graph
// is bipartite with girth >= 6, and the star is generating iff the instance
// is satisfiable. Vertex layout: x, y_1..y_m, v_1..v_m, v'_1..v'_m', u_1..u_n,
// u'_1..u'_n, with labels recording the roles.
ReductionArtifact dmsat_to_gs(const CnfInstance& inst);

// Same bridge for unrestricted monotone instances; designated subgraph is
// the path on z, y1, y2 (no 3- or 5-cycles in the graph). Layout: z, y1, y2,
// v_j, v'_j, u_i, u'_i.
ReductionArtifact monotone_to_gs(const CnfInstance& inst);

// Grow the designated subgraph of a monotone_to_gs artifact into K_{p,q}
// (p >= 1, q >= 2). For p >= 2 the sides are {y_1..y_p} x {z_1..z_q} with
// z_1 = z; new vertices y_3..y_p and z_2..z_q are appended. For p = 1 the
// singleton side is z and y_3..y_q are appended (so (1,2) is the identity).
// Satisfiability of the source instance is preserved as the generating
// criterion for the grown subgraph.
ReductionArtifact extend_to_kpq(const ReductionArtifact& art, uint32_t p, uint32_t q);

// Witness maps: S = {u_i : a(x_i)=1} ∪ {u'_i : a(x_i)=0}, and back.
VertexSet assignment_to_witness(const ReductionArtifact& art, const Assignment& a);
Assignment witness_to_assignment(const ReductionArtifact& art, const VertexSet& s);

}  // namespace wc
