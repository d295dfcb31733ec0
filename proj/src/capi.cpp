// C boundary: opaque handles around the core types, exceptions folded into
// error codes, all structured output rendered as canonical JSON text.

#include "wellcover/wellcover.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <utility>

#include <json.hpp>

#include "wellcover/graph.hpp"
#include "wellcover/instance_lab.hpp"
#include "wellcover/json_io.hpp"
#include "wellcover/oracles.hpp"
#include "wellcover/sat.hpp"
#include "wellcover/verify.hpp"
#include "wellcover/wc_algorithms.hpp"

struct wcg_graph {
  wc::Graph g;
};
struct wcg_cnf {
  wc::CnfInstance f;
};
struct wcg_artifact {
  wc::ReductionArtifact a;
};

namespace {

thread_local std::string t_last_error;

int usage(const std::string& msg) {
  t_last_error = msg;
  return WCG_ERR_USAGE;
}

// Runs the body with the thread's error slot cleared and folds anything it
// throws into a code. CapError derives from DomainError, so it comes first.
template <typename Fn>
int guarded(Fn&& body) {
  t_last_error.clear();
  try {
    body();
    return WCG_OK;
  } catch (const wc::CapError& e) {
    t_last_error = e.what();
    return WCG_ERR_LIMIT;
  } catch (const wc::DomainError& e) {
    t_last_error = e.what();
    return WCG_ERR_DOMAIN;
  } catch (const nlohmann::json::exception& e) {
    t_last_error = e.what();
    return WCG_ERR_PARSE;
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return WCG_ERR_INTERNAL;
  }
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void emit_json(const wc::Json& j, char** out) { *out = dup_string(wc::dump_json(j)); }

wc::VertexSet set_from_ids(const wc::Graph& g, const uint32_t* ids, size_t len,
                           const char* what) {
  wc::VertexSet s(g.n());
  for (size_t i = 0; i < len; ++i) {
    g.check_vertex(ids[i]);
    if (s.test(ids[i]))
      throw wc::DomainError(std::string(what) + ": repeated vertex " + std::to_string(ids[i]));
    s.set(ids[i]);
  }
  return s;
}

// An id/bit array may be NULL only when its length is zero.
bool bad_ids(const void* ids, size_t len) { return !ids && len > 0; }

// JSON input is parsed here so syntax errors surface as WCG_ERR_PARSE; the
// core's text readers would fold them into domain errors.
bool looks_like_json(const char* text) {
  while (*text == ' ' || *text == '\t' || *text == '\n' || *text == '\r') ++text;
  return *text == '{';
}

void emit_report(const wc::VerifyReport& rep, char** out_report_json, int* out_ok) {
  emit_json(wc::report_to_json(rep), out_report_json);
  if (out_ok) *out_ok = rep.ok() ? 1 : 0;
}

wc::Json violations_to_json(const std::vector<wc::FamilyViolation>& vs) {
  wc::Json arr = wc::Json::array();
  for (const auto& v : vs)
    arr.push_back({{"rule", v.rule}, {"exhibit", v.exhibit}, {"message", v.message}});
  return arr;
}

wc::Json violations_to_json(const std::vector<wc::CnfViolation>& vs) {
  wc::Json arr = wc::Json::array();
  for (const auto& v : vs) arr.push_back({{"rule", v.rule}, {"message", v.message}});
  return arr;
}

}  // namespace

extern "C" {

const char* wcg_version(void) { return "1.0.0"; }

const char* wcg_last_error(void) { return t_last_error.c_str(); }

void wcg_string_free(char* s) { std::free(s); }

/* ---- graphs ------------------------------------------------------------ */

int wcg_graph_parse(const char* text, wcg_graph** out) {
  if (!text || !out) return usage("wcg_graph_parse: null argument");
  return guarded([&] {
    *out = looks_like_json(text) ? new wcg_graph{wc::graph_from_json(wc::Json::parse(text))}
                                 : new wcg_graph{wc::graph_from_text(text)};
  });
}

void wcg_graph_free(wcg_graph* g) { delete g; }

int wcg_graph_to_json(const wcg_graph* g, char** out_json) {
  if (!g || !out_json) return usage("wcg_graph_to_json: null argument");
  return guarded([&] { emit_json(wc::graph_to_json(g->g), out_json); });
}

int wcg_graph_n(const wcg_graph* g, uint32_t* out_n) {
  if (!g || !out_n) return usage("wcg_graph_n: null argument");
  *out_n = g->g.n();
  t_last_error.clear();
  return WCG_OK;
}

int wcg_graph_validate_family(const wcg_graph* g, const char* family,
                              char** out_violations_json) {
  if (!g || !family || !out_violations_json)
    return usage("wcg_graph_validate_family: null argument");
  return guarded([&] {
    auto vs = wc::validate_family(g->g, wc::family_by_name(family));
    emit_json(violations_to_json(vs), out_violations_json);
  });
}

/* ---- recognition and weight space -------------------------------------- */

int wcg_generating(const wcg_graph* g, const uint32_t* bx, size_t bx_len, const uint32_t* by,
                   size_t by_len, int unchecked, int* out_generating) {
  if (!g || !out_generating || bad_ids(bx, bx_len) || bad_ids(by, by_len))
    return usage("wcg_generating: null argument");
  return guarded([&] {
    wc::VertexSet sx = set_from_ids(g->g, bx, bx_len, "bx");
    wc::VertexSet sy = set_from_ids(g->g, by, by_len, "by");
    *out_generating = wc::generating_bip_c6free(g->g, sx, sy, unchecked != 0) ? 1 : 0;
  });
}

int wcg_maxgen1(const wcg_graph* g, uint32_t x, int unchecked, char** out_set_json) {
  if (!g || !out_set_json) return usage("wcg_maxgen1: null argument");
  return guarded([&] {
    emit_json(wc::vertex_set_to_json(wc::maxgen1(g->g, x, unchecked != 0)), out_set_json);
  });
}

int wcg_maxgen2(const wcg_graph* g, uint32_t x1, uint32_t x2, int unchecked,
                char** out_set_json) {
  if (!g || !out_set_json) return usage("wcg_maxgen2: null argument");
  return guarded([&] {
    emit_json(wc::vertex_set_to_json(wc::maxgen2(g->g, x1, x2, unchecked != 0)), out_set_json);
  });
}

int wcg_wcw(const wcg_graph* g, int unchecked, char** out_system_json) {
  if (!g || !out_system_json) return usage("wcg_wcw: null argument");
  return guarded([&] {
    emit_json(wc::system_to_json(wc::wcw_bip_c6free(g->g, unchecked != 0)), out_system_json);
  });
}

int wcg_well_covered(const wcg_graph* g, int unchecked, int* out_well_covered) {
  if (!g || !out_well_covered) return usage("wcg_well_covered: null argument");
  return guarded([&] {
    *out_well_covered = wc::well_covered_bip_c6free(g->g, unchecked != 0) ? 1 : 0;
  });
}

int wcg_wcw_leaf(const wcg_graph* g, int unchecked, char** out_system_json) {
  if (!g || !out_system_json) return usage("wcg_wcw_leaf: null argument");
  return guarded([&] {
    emit_json(wc::system_to_json(wc::wcw_leaf_characterization(g->g, unchecked != 0)),
              out_system_json);
  });
}

int wcg_relating_edge(const wcg_graph* g, uint32_t u, uint32_t v, int* out_relating) {
  if (!g || !out_relating) return usage("wcg_relating_edge: null argument");
  return guarded([&] { *out_relating = wc::relating_edge(g->g, u, v) ? 1 : 0; });
}

/* ---- brute-force oracles ------------------------------------------------ */

int wcg_oracle_mis(const wcg_graph* g, char** out_sets_json) {
  if (!g || !out_sets_json) return usage("wcg_oracle_mis: null argument");
  return guarded([&] {
    wc::Json arr = wc::Json::array();
    for (const wc::VertexSet& s : wc::enumerate_mis(g->g))
      arr.push_back(wc::vertex_set_to_json(s));
    emit_json(arr, out_sets_json);
  });
}

int wcg_oracle_well_covered(const wcg_graph* g, int* out_well_covered) {
  if (!g || !out_well_covered) return usage("wcg_oracle_well_covered: null argument");
  return guarded([&] { *out_well_covered = wc::is_well_covered_oracle(g->g) ? 1 : 0; });
}

int wcg_oracle_wcw(const wcg_graph* g, char** out_system_json) {
  if (!g || !out_system_json) return usage("wcg_oracle_wcw: null argument");
  return guarded([&] { emit_json(wc::system_to_json(wc::wcw_oracle(g->g)), out_system_json); });
}

int wcg_oracle_generating(const wcg_graph* g, const uint32_t* bx, size_t bx_len,
                          const uint32_t* by, size_t by_len, char** out_witness_json) {
  if (!g || !out_witness_json || bad_ids(bx, bx_len) || bad_ids(by, by_len))
    return usage("wcg_oracle_generating: null argument");
  return guarded([&] {
    wc::VertexSet sx = set_from_ids(g->g, bx, bx_len, "bx");
    wc::VertexSet sy = set_from_ids(g->g, by, by_len, "by");
    auto witness = wc::generating_oracle(g->g, sx, sy);
    emit_json(witness ? wc::vertex_set_to_json(*witness) : wc::Json(nullptr), out_witness_json);
  });
}

int wcg_oracle_sat(const wcg_cnf* f, char** out_assignment_json) {
  if (!f || !out_assignment_json) return usage("wcg_oracle_sat: null argument");
  return guarded([&] {
    auto a = wc::sat_bruteforce(f->f);
    emit_json(a ? wc::assignment_to_json(*a) : wc::Json(nullptr), out_assignment_json);
  });
}

/* ---- formulas ----------------------------------------------------------- */

int wcg_cnf_parse(const char* text, wcg_cnf** out) {
  if (!text || !out) return usage("wcg_cnf_parse: null argument");
  return guarded([&] {
    *out = looks_like_json(text) ? new wcg_cnf{wc::cnf_from_json(wc::Json::parse(text))}
                                 : new wcg_cnf{wc::cnf_from_text(text)};
  });
}

void wcg_cnf_free(wcg_cnf* f) { delete f; }

int wcg_cnf_to_json(const wcg_cnf* f, char** out_json) {
  if (!f || !out_json) return usage("wcg_cnf_to_json: null argument");
  return guarded([&] { emit_json(wc::cnf_to_json(f->f), out_json); });
}

int wcg_cnf_to_dimacs(const wcg_cnf* f, char** out_text) {
  if (!f || !out_text) return usage("wcg_cnf_to_dimacs: null argument");
  return guarded([&] { *out_text = dup_string(wc::to_dimacs(f->f)); });
}

int wcg_cnf_validate(const wcg_cnf* f, const char* kind, char** out_violations_json) {
  if (!f || !kind || !out_violations_json) return usage("wcg_cnf_validate: null argument");
  return guarded([&] {
    auto vs = wc::validate_cnf(f->f, wc::kind_by_name(kind));
    emit_json(violations_to_json(vs), out_violations_json);
  });
}

/* ---- reductions --------------------------------------------------------- */

int wcg_dsat_to_dmsat(const wcg_cnf* f, wcg_cnf** out) {
  if (!f || !out) return usage("wcg_dsat_to_dmsat: null argument");
  return guarded([&] { *out = new wcg_cnf{wc::dsat_to_dmsat(f->f)}; });
}

int wcg_artifact_parse(const char* json_text, wcg_artifact** out) {
  if (!json_text || !out) return usage("wcg_artifact_parse: null argument");
  return guarded(
      [&] { *out = new wcg_artifact{wc::artifact_from_json(wc::Json::parse(json_text))}; });
}

void wcg_artifact_free(wcg_artifact* a) { delete a; }

int wcg_artifact_to_json(const wcg_artifact* a, char** out_json) {
  if (!a || !out_json) return usage("wcg_artifact_to_json: null argument");
  return guarded([&] { emit_json(wc::artifact_to_json(a->a), out_json); });
}

int wcg_artifact_graph(const wcg_artifact* a, wcg_graph** out) {
  if (!a || !out) return usage("wcg_artifact_graph: null argument");
  return guarded([&] { *out = new wcg_graph{a->a.g}; });
}

int wcg_dmsat_to_gs(const wcg_cnf* f, wcg_artifact** out) {
  if (!f || !out) return usage("wcg_dmsat_to_gs: null argument");
  return guarded([&] { *out = new wcg_artifact{wc::dmsat_to_gs(f->f)}; });
}

int wcg_monotone_to_gs(const wcg_cnf* f, wcg_artifact** out) {
  if (!f || !out) return usage("wcg_monotone_to_gs: null argument");
  return guarded([&] { *out = new wcg_artifact{wc::monotone_to_gs(f->f)}; });
}

int wcg_extend_to_kpq(const wcg_artifact* a, uint32_t p, uint32_t q, wcg_artifact** out) {
  if (!a || !out) return usage("wcg_extend_to_kpq: null argument");
  return guarded([&] { *out = new wcg_artifact{wc::extend_to_kpq(a->a, p, q)}; });
}

int wcg_assignment_to_witness(const wcg_artifact* a, const uint8_t* bits, size_t n_bits,
                              char** out_set_json) {
  if (!a || !out_set_json || bad_ids(bits, n_bits))
    return usage("wcg_assignment_to_witness: null argument");
  return guarded([&] {
    wc::Assignment asg;
    asg.bits.assign(bits, bits + n_bits);
    emit_json(wc::vertex_set_to_json(wc::assignment_to_witness(a->a, asg)), out_set_json);
  });
}

int wcg_witness_to_assignment(const wcg_artifact* a, const uint32_t* ids, size_t n_ids,
                              char** out_assignment_json) {
  if (!a || !out_assignment_json || bad_ids(ids, n_ids))
    return usage("wcg_witness_to_assignment: null argument");
  return guarded([&] {
    wc::VertexSet s = set_from_ids(a->a.g, ids, n_ids, "witness");
    emit_json(wc::assignment_to_json(wc::witness_to_assignment(a->a, s)),
              out_assignment_json);
  });
}

/* ---- deterministic instance generation ---------------------------------- */

int wcg_random_tree(uint32_t n, uint64_t seed, wcg_graph** out) {
  if (!out) return usage("wcg_random_tree: null argument");
  return guarded([&] { *out = new wcg_graph{wc::random_tree(n, seed)}; });
}

int wcg_random_graph(const char* family, uint32_t n, uint64_t p_num, uint64_t p_den,
                     uint64_t seed, wcg_graph** out) {
  if (!family || !out) return usage("wcg_random_graph: null argument");
  return guarded([&] {
    wc::RandomGraphConfig cfg;
    cfg.n = n;
    cfg.p_num = p_num;
    cfg.p_den = p_den;
    *out = new wcg_graph{wc::random_family_graph(wc::family_by_name(family), cfg, seed)};
  });
}

int wcg_random_cnf(const char* kind, uint32_t n_vars, uint32_t n_clauses, uint64_t seed,
                   wcg_cnf** out) {
  if (!kind || !out) return usage("wcg_random_cnf: null argument");
  return guarded([&] {
    wc::RandomCnfConfig cfg;
    cfg.n_vars = n_vars;
    cfg.n_clauses = n_clauses;
    wc::CnfKind k = wc::kind_by_name(kind);
    if (k == wc::CnfKind::DSAT)
      *out = new wcg_cnf{wc::random_dsat(cfg, seed)};
    else if (k == wc::CnfKind::MONOTONE)
      *out = new wcg_cnf{wc::random_monotone(cfg, seed)};
    else
      throw wc::DomainError("wcg_random_cnf: kind must be dsat or monotone");
  });
}

int wcg_enumerate_graphs(uint32_t n, const char* family, wcg_graph_callback cb, void* user,
                         uint64_t* out_visited) {
  if (!family || !cb) return usage("wcg_enumerate_graphs: null argument");
  return guarded([&] {
    uint64_t visited =
        wc::enumerate_small_graphs(n, wc::family_by_name(family), [&](const wc::Graph& g) {
          std::string text = wc::dump_json(wc::graph_to_json(g));
          return cb(text.c_str(), user) == 0;
        });
    if (out_visited) *out_visited = visited;
  });
}

/* ---- self-verification --------------------------------------------------- */

int wcg_verify(const char* suite, uint32_t n, uint32_t count, uint64_t seed,
               char** out_report_json, int* out_ok) {
  if (!suite || !out_report_json) return usage("wcg_verify: null argument");
  return guarded(
      [&] { emit_report(wc::verify_suite(suite, n, count, seed), out_report_json, out_ok); });
}

int wcg_reproduce_paper(const char* data_dir, char** out_report_json, int* out_ok) {
  if (!out_report_json) return usage("wcg_reproduce_paper: null argument");
  return guarded([&] {
    std::string dir;
    if (data_dir) {
      dir = data_dir;
    } else if (const char* env = std::getenv("WELLCOVER_DATA_DIR")) {
      dir = env;
    } else {
      dir = "data";
    }
    emit_report(wc::reproduce_paper(dir), out_report_json, out_ok);
  });
}

}  // extern "C"
