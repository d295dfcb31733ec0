#pragma once
// Canonical JSON (and DIMACS/edge-list text) serialization for every domain
// type that crosses the library boundary. Writers are deterministic: object
// keys sorted, edges sorted with u < v, rationals always "p/q" in lowest
// terms.

#include <string>

#include <json.hpp>

#include "wellcover/graph.hpp"
#include "wellcover/sat.hpp"
#include "wellcover/weightspace.hpp"

namespace wc {

using Json = nlohmann::json;

// {"n": int, "edges": [[u,v],...], "labels": {"0": "x", ...}?}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// Plain-text edge list: first line "n m", then m lines "u v".
Graph graph_from_edgelist(const std::string& text);

// Auto-detect: leading '{' -> JSON, else edge list.
Graph graph_from_text(const std::string& text);

// {"n_vars": int, "c1": [[lit,...],...], "c2": [...], "kind": "DSAT"}
Json cnf_to_json(const CnfInstance& inst);
CnfInstance cnf_from_json(const Json& j);
CnfInstance cnf_from_text(const std::string& text);  // JSON or DIMACS

// {"coeffs": {"<vertex>": "p/q", ...}}
Json constraint_to_json(const LinearConstraint& c);
// {"n": int, "constraints": [...], "dimension": int, "basis": [["p/q",...],...]}
Json system_to_json(const ConstraintSystem& sys);
ConstraintSystem system_from_json(const Json& j);

// Graph JSON plus {"bx": [...], "by": [...], "n_vars": int, "u": [...], "u_prime": [...]}
Json artifact_to_json(const ReductionArtifact& art);
ReductionArtifact artifact_from_json(const Json& j);

Json vertex_set_to_json(const VertexSet& s);   // sorted id array
VertexSet vertex_set_from_json(const Json& j, uint32_t universe);

Json assignment_to_json(const Assignment& a);  // 0/1 array
Assignment assignment_from_json(const Json& j);

// Canonical dump (no trailing newline); pretty uses 2-space indent.
std::string dump_json(const Json& j, bool pretty = false);

std::string read_file(const std::string& path);       // IO errors -> DomainError
void write_file(const std::string& path, const std::string& content);

}  // namespace wc
