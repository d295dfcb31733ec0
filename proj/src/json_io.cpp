#include "wellcover/json_io.hpp"

#include <fstream>
#include <sstream>

namespace wc {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw DomainError(msg); }

// Typed field access with real error messages instead of nlohmann's.
const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(std::string("missing field '") + key + "'");
  return j.at(key);
}

uint32_t get_u32(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<int64_t>() < 0 || j.get<int64_t>() > UINT32_MAX)
    fail(std::string(what) + " must be a non-negative integer");
  return j.get<uint32_t>();
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json j = Json::object();
  j["n"] = g.n();
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, lab] : g.labels()) labels[std::to_string(v)] = lab;
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  uint32_t n = get_u32(field(j, "n"), "'n'");
  Graph g(n);
  const Json& edges = field(j, "edges");
  if (!edges.is_array()) fail("'edges' must be an array");
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) fail("each edge must be a pair [u,v]");
    g.add_edge(get_u32(e[0], "edge endpoint"), get_u32(e[1], "edge endpoint"));
  }
  if (j.contains("labels")) {
    const Json& labels = j.at("labels");
    if (!labels.is_object()) fail("'labels' must be an object");
    for (auto it = labels.begin(); it != labels.end(); ++it) {
      uint32_t v;
      try {
        size_t pos = 0;
        unsigned long parsed = std::stoul(it.key(), &pos);
        if (pos != it.key().size() || parsed > UINT32_MAX) throw std::invalid_argument("");
        v = uint32_t(parsed);
      } catch (const std::exception&) {
        fail("label key '" + it.key() + "' is not a vertex id");
      }
      if (!it.value().is_string()) fail("label values must be strings");
      g.set_label(v, it.value().get<std::string>());
    }
  }
  return g;
}

Graph graph_from_edgelist(const std::string& text) {
  std::istringstream is(text);
  long n = -1, m = -1;
  if (!(is >> n >> m) || n < 0 || m < 0) fail("edge list must start with 'n m'");
  Graph g{uint32_t(n)};
  for (long i = 0; i < m; ++i) {
    long u = -1, v = -1;
    if (!(is >> u >> v) || u < 0 || v < 0)
      fail("edge line " + std::to_string(i + 1) + " malformed (expected 'u v')");
    g.add_edge(uint32_t(u), uint32_t(v));
  }
  return g;
}

Graph graph_from_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(uint8_t(c))) continue;
    if (c == '{') {
      Json j;
      try {
        j = Json::parse(text);
      } catch (const std::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
      }
      return graph_from_json(j);
    }
    break;
  }
  return graph_from_edgelist(text);
}

Json cnf_to_json(const CnfInstance& inst) {
  Json j = Json::object();
  j["n_vars"] = inst.n_vars;
  j["c1"] = inst.c1;
  j["c2"] = inst.c2;
  j["kind"] = kind_name(inst.kind);
  return j;
}

CnfInstance cnf_from_json(const Json& j) {
  CnfInstance inst;
  inst.n_vars = get_u32(field(j, "n_vars"), "'n_vars'");
  auto read_part = [&](const char* key, std::vector<Clause>& out) {
    const Json& part = field(j, key);
    if (!part.is_array()) fail(std::string("'") + key + "' must be an array of clauses");
    for (const Json& c : part) {
      if (!c.is_array()) fail("each clause must be an array of literals");
      Clause cl;
      for (const Json& lit : c) {
        if (!lit.is_number_integer()) fail("literals must be integers");
        cl.push_back(lit.get<int>());
      }
      out.push_back(std::move(cl));
    }
  };
  read_part("c1", inst.c1);
  read_part("c2", inst.c2);
  if (j.contains("kind")) inst.kind = kind_by_name(j.at("kind").get<std::string>());
  canonicalize(inst);
  check_wellformed(inst);
  return inst;
}

CnfInstance cnf_from_text(const std::string& text) {
  for (char c : text) {
    if (std::isspace(uint8_t(c))) continue;
    if (c == '{') {
      Json j;
      try {
        j = Json::parse(text);
      } catch (const std::exception& e) {
        fail(std::string("invalid JSON: ") + e.what());
      }
      return cnf_from_json(j);
    }
    break;
  }
  return from_dimacs(text);
}

Json constraint_to_json(const LinearConstraint& c) {
  Json coeffs = Json::object();
  for (const auto& [v, coef] : c.coeffs) coeffs[std::to_string(v)] = format_rational(coef);
  return Json::object({{"coeffs", coeffs}});
}

Json system_to_json(const ConstraintSystem& sys) {
  Json j = Json::object();
  j["n"] = sys.n();
  Json cs = Json::array();
  for (const auto& c : sys.constraints()) cs.push_back(constraint_to_json(c));
  j["constraints"] = std::move(cs);
  j["dimension"] = sys.dimension();
  Json basis = Json::array();
  for (const auto& v : sys.nullspace_basis()) {
    Json vec = Json::array();
    for (const auto& r : v.w) vec.push_back(format_rational(r));
    basis.push_back(std::move(vec));
  }
  j["basis"] = std::move(basis);
  return j;
}

ConstraintSystem system_from_json(const Json& j) {
  uint32_t n = get_u32(field(j, "n"), "'n'");
  ConstraintSystem sys(n);
  const Json& cs = field(j, "constraints");
  if (!cs.is_array()) fail("'constraints' must be an array");
  for (const Json& cj : cs) {
    const Json& coeffs = field(cj, "coeffs");
    if (!coeffs.is_object()) fail("'coeffs' must be an object");
    LinearConstraint c;
    c.n = n;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      uint32_t v;
      try {
        size_t pos = 0;
        unsigned long parsed = std::stoul(it.key(), &pos);
        if (pos != it.key().size() || parsed >= n) throw std::invalid_argument("");
        v = uint32_t(parsed);
      } catch (const std::exception&) {
        fail("coefficient key '" + it.key() + "' is not a vertex id below " + std::to_string(n));
      }
      if (!it.value().is_string()) fail("coefficients must be rational strings");
      c.coeffs[v] = parse_rational(it.value().get<std::string>());
    }
    sys.add(std::move(c));
  }
  return sys;
}

Json artifact_to_json(const ReductionArtifact& art) {
  Json j = graph_to_json(art.g);
  j["bx"] = vertex_set_to_json(art.bx);
  j["by"] = vertex_set_to_json(art.by);
  j["n_vars"] = art.n_vars;
  j["u"] = art.u_ids;
  j["u_prime"] = art.uprime_ids;
  return j;
}

ReductionArtifact artifact_from_json(const Json& j) {
  ReductionArtifact art;
  art.g = graph_from_json(j);
  art.bx = vertex_set_from_json(field(j, "bx"), art.g.n());
  art.by = vertex_set_from_json(field(j, "by"), art.g.n());
  art.n_vars = get_u32(field(j, "n_vars"), "'n_vars'");
  auto read_ids = [&](const char* key, std::vector<uint32_t>& out) {
    const Json& arr = field(j, key);
    if (!arr.is_array()) fail(std::string("'") + key + "' must be an array");
    for (const Json& x : arr) {
      uint32_t v = get_u32(x, "role id");
      art.g.check_vertex(v);
      out.push_back(v);
    }
  };
  read_ids("u", art.u_ids);
  read_ids("u_prime", art.uprime_ids);
  if (art.u_ids.size() != art.n_vars || art.uprime_ids.size() != art.n_vars)
    fail("role tables must list one vertex per variable");
  return art;
}

Json vertex_set_to_json(const VertexSet& s) {
  Json arr = Json::array();
  for (uint32_t v : s.to_vector()) arr.push_back(v);
  return arr;
}

VertexSet vertex_set_from_json(const Json& j, uint32_t universe) {
  if (!j.is_array()) fail("vertex set must be an array of ids");
  VertexSet s(universe);
  for (const Json& x : j) {
    uint32_t v = get_u32(x, "vertex id");
    if (v >= universe)
      fail("vertex " + std::to_string(v) + " out of range (n=" + std::to_string(universe) + ")");
    s.set(v);
  }
  return s;
}

Json assignment_to_json(const Assignment& a) {
  Json arr = Json::array();
  for (uint8_t b : a.bits) arr.push_back(int(b));
  return arr;
}

Assignment assignment_from_json(const Json& j) {
  if (!j.is_array()) fail("assignment must be an array of 0/1");
  Assignment a;
  for (const Json& x : j) {
    if (!x.is_number_integer() || (x.get<int>() != 0 && x.get<int>() != 1))
      fail("assignment entries must be 0 or 1");
    a.bits.push_back(uint8_t(x.get<int>()));
  }
  return a;
}

std::string dump_json(const Json& j, bool pretty) { return pretty ? j.dump(2) : j.dump(); }

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail("cannot open file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  if (f.bad()) fail("error reading file '" + path + "'");
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) fail("cannot open file '" + path + "' for writing");
  f << content;
  if (!f) fail("error writing file '" + path + "'");
}

}  // namespace wc
