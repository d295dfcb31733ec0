#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>
#include <vector>

#include <wellcover/instance_lab.hpp>
#include <wellcover/json_io.hpp>
#include <wellcover/oracles.hpp>
#include <wellcover/wc_algorithms.hpp>
#include <wellcover/wellcover.h>

#include "util.hpp"

using wc::Json;

namespace {

// Owns a char* from the library; .str() copies it out for comparisons.
struct OutStr {
  char* p = nullptr;
  ~OutStr() { wcg_string_free(p); }
  std::string str() const { return p ? std::string(p) : std::string(); }
};

struct GraphHandle {
  wcg_graph* h = nullptr;
  ~GraphHandle() { wcg_graph_free(h); }
};

struct CnfHandle {
  wcg_cnf* h = nullptr;
  ~CnfHandle() { wcg_cnf_free(h); }
};

struct ArtifactHandle {
  wcg_artifact* h = nullptr;
  ~ArtifactHandle() { wcg_artifact_free(h); }
};

std::string core_json(const wc::Graph& g) { return wc::dump_json(wc::graph_to_json(g)); }

wcg_graph* must_parse(const std::string& text) {
  wcg_graph* g = nullptr;
  REQUIRE(wcg_graph_parse(text.c_str(), &g) == WCG_OK);
  REQUIRE(g != nullptr);
  return g;
}

std::string fixture_text(const std::string& name) {
  return wc::read_file(wctest::data_dir() + "/" + name);
}

}  // namespace

TEST_CASE("version and null-safe frees") {
  std::string v = wcg_version();
  CHECK(!v.empty());
  wcg_string_free(nullptr);
  wcg_graph_free(nullptr);
  wcg_cnf_free(nullptr);
  wcg_artifact_free(nullptr);
}

TEST_CASE("graph parsing accepts JSON and edge lists and round-trips canonically") {
  GraphHandle a{must_parse(R"({"n":4,"edges":[[0,1],[1,2],[2,3]]})")};
  GraphHandle b{must_parse("4 3\n0 1\n1 2\n2 3\n")};

  uint32_t n = 0;
  CHECK(wcg_graph_n(a.h, &n) == WCG_OK);
  CHECK(n == 4);

  OutStr ja, jb;
  CHECK(wcg_graph_to_json(a.h, &ja.p) == WCG_OK);
  CHECK(wcg_graph_to_json(b.h, &jb.p) == WCG_OK);
  CHECK(ja.str() == jb.str());
  CHECK(ja.str() == core_json(wctest::path(4)));
}

TEST_CASE("error codes separate parse, domain, and usage failures") {
  wcg_graph* g = nullptr;

  CHECK(wcg_graph_parse("{not json", &g) == WCG_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::strlen(wcg_last_error()) > 0);

  CHECK(wcg_graph_parse(R"({"n":2,"edges":[[0,7]]})", &g) == WCG_ERR_DOMAIN);
  CHECK(wcg_graph_parse(nullptr, &g) == WCG_ERR_USAGE);
  CHECK(std::strlen(wcg_last_error()) > 0);

  // A successful call wipes the thread's message again.
  GraphHandle ok{must_parse(R"({"n":1,"edges":[]})")};
  CHECK(std::strlen(wcg_last_error()) == 0);
}

TEST_CASE("family validation reports violations as JSON") {
  GraphHandle p4{must_parse(core_json(wctest::path(4)))};
  OutStr empty;
  REQUIRE(wcg_graph_validate_family(p4.h, "bip-c6free", &empty.p) == WCG_OK);
  CHECK(empty.str() == "[]");

  GraphHandle c6{must_parse(core_json(wctest::cycle(6)))};
  OutStr hex;
  REQUIRE(wcg_graph_validate_family(c6.h, "bip-c6free", &hex.p) == WCG_OK);
  Json vs6 = Json::parse(hex.str());
  REQUIRE(vs6.size() == 1);
  CHECK(vs6[0]["rule"] == "cycle-6");
  CHECK(vs6[0]["exhibit"].size() == 6);

  GraphHandle c5{must_parse(core_json(wctest::cycle(5)))};
  OutStr odd;
  REQUIRE(wcg_graph_validate_family(c5.h, "bip-c6free", &odd.p) == WCG_OK);
  CHECK(Json::parse(odd.str())[0]["rule"] == "bipartite");

  GraphHandle c7{must_parse(core_json(wctest::cycle(7)))};
  OutStr g7;
  REQUIRE(wcg_graph_validate_family(c7.h, "c3c4c5c7-free", &g7.p) == WCG_OK);
  CHECK(!Json::parse(g7.str()).empty());

  OutStr unused;
  CHECK(wcg_graph_validate_family(p4.h, "no-such-family", &unused.p) == WCG_ERR_DOMAIN);
}

TEST_CASE("generating recognition agrees with the witness oracle") {
  GraphHandle c4{must_parse(core_json(wctest::cycle(4)))};
  const uint32_t even[] = {0, 2};
  const uint32_t odd[] = {1, 3};
  const uint32_t zero[] = {0};

  int gen = 0;
  REQUIRE(wcg_generating(c4.h, even, 2, odd, 2, 0, &gen) == WCG_OK);
  CHECK(gen == 1);
  OutStr wit;
  REQUIRE(wcg_oracle_generating(c4.h, even, 2, odd, 2, &wit.p) == WCG_OK);
  CHECK(wit.str() == "[]");  // the empty witness: both sides already maximal

  REQUIRE(wcg_generating(c4.h, zero, 1, odd, 2, 0, &gen) == WCG_OK);
  CHECK(gen == 0);
  OutStr none;
  REQUIRE(wcg_oracle_generating(c4.h, zero, 1, odd, 2, &none.p) == WCG_OK);
  CHECK(none.str() == "null");

  const uint32_t repeated[] = {1, 1};
  CHECK(wcg_generating(c4.h, repeated, 2, even, 2, 0, &gen) == WCG_ERR_DOMAIN);
  const uint32_t outside[] = {9};
  CHECK(wcg_generating(c4.h, outside, 1, even, 2, 0, &gen) == WCG_ERR_DOMAIN);
  CHECK(wcg_generating(c4.h, nullptr, 2, even, 2, 0, &gen) == WCG_ERR_USAGE);
}

TEST_CASE("maxgen wrappers return the frozen sets") {
  // 4-cycle with a pendant on vertex 0: the star at 2 keeps both cycle
  // neighbors.
  GraphHandle g{must_parse(R"({"n":5,"edges":[[0,1],[0,3],[0,4],[1,2],[2,3]]})")};
  OutStr t1;
  REQUIRE(wcg_maxgen1(g.h, 2, 0, &t1.p) == WCG_OK);
  CHECK(t1.str() == "[1,3]");

  GraphHandle c4{must_parse(core_json(wctest::cycle(4)))};
  OutStr t2;
  REQUIRE(wcg_maxgen2(c4.h, 0, 2, 0, &t2.p) == WCG_OK);
  CHECK(t2.str() == "[1,3]");
  OutStr bad;
  CHECK(wcg_maxgen2(c4.h, 0, 1, 0, &bad.p) == WCG_ERR_DOMAIN);  // adjacent centers

  GraphHandle fig{must_parse(fixture_text("figure2_graph.json"))};
  OutStr t3;
  REQUIRE(wcg_maxgen2(fig.h, 0, 1, 0, &t3.p) == WCG_OK);
  CHECK(t3.str() == "[3,5,6,7]");
}

TEST_CASE("the family gate can be bypassed explicitly") {
  GraphHandle c6{must_parse(core_json(wctest::cycle(6)))};
  OutStr out;
  CHECK(wcg_maxgen1(c6.h, 0, 0, &out.p) == WCG_ERR_DOMAIN);
  OutStr forced;
  CHECK(wcg_maxgen1(c6.h, 0, 1, &forced.p) == WCG_OK);
  CHECK(!forced.str().empty());
}

TEST_CASE("weight-space systems cross the boundary intact") {
  GraphHandle c4{must_parse(core_json(wctest::cycle(4)))};
  OutStr sys;
  REQUIRE(wcg_wcw(c4.h, 0, &sys.p) == WCG_OK);
  Json j = Json::parse(sys.str());
  CHECK(j["dimension"] == 3);
  CHECK(wc::spaces_equal(wc::system_from_json(j), wc::wcw_oracle(wctest::cycle(4))));

  OutStr oracle;
  REQUIRE(wcg_oracle_wcw(c4.h, &oracle.p) == WCG_OK);
  CHECK(Json::parse(oracle.str())["dimension"] == 3);

  GraphHandle p4{must_parse(core_json(wctest::path(4)))};
  OutStr psys;
  REQUIRE(wcg_wcw(p4.h, 0, &psys.p) == WCG_OK);
  CHECK(Json::parse(psys.str())["dimension"] == 2);
}

TEST_CASE("well-coveredness decisions match the oracle") {
  for (const wc::Graph& g :
       {wctest::cycle(4), wctest::path(4), wctest::cycle(8), wctest::star(3)}) {
    GraphHandle h{must_parse(core_json(g))};
    int fast = -1, slow = -1;
    REQUIRE(wcg_well_covered(h.h, 0, &fast) == WCG_OK);
    REQUIRE(wcg_oracle_well_covered(h.h, &slow) == WCG_OK);
    CHECK(fast == slow);
  }
}

TEST_CASE("leaf characterization and relating edges") {
  GraphHandle p4{must_parse(core_json(wctest::path(4)))};
  OutStr leaf;
  REQUIRE(wcg_wcw_leaf(p4.h, 0, &leaf.p) == WCG_OK);
  CHECK(Json::parse(leaf.str())["dimension"] ==
        wc::wcw_leaf_characterization(wctest::path(4)).dimension());

  GraphHandle c4{must_parse(core_json(wctest::cycle(4)))};
  OutStr gated;
  CHECK(wcg_wcw_leaf(c4.h, 0, &gated.p) == WCG_ERR_DOMAIN);
  OutStr forced;
  REQUIRE(wcg_wcw_leaf(c4.h, 1, &forced.p) == WCG_OK);
  CHECK(Json::parse(forced.str())["dimension"] == 0);

  int rel = -1;
  REQUIRE(wcg_relating_edge(c4.h, 0, 1, &rel) == WCG_OK);
  CHECK(rel == (wc::relating_edge(wctest::cycle(4), 0, 1) ? 1 : 0));
  CHECK(wcg_relating_edge(c4.h, 0, 2, &rel) == WCG_ERR_DOMAIN);  // not an edge
}

TEST_CASE("maximal-independent-set oracle emits the frozen lex order") {
  GraphHandle c4{must_parse(core_json(wctest::cycle(4)))};
  OutStr mis;
  REQUIRE(wcg_oracle_mis(c4.h, &mis.p) == WCG_OK);
  CHECK(mis.str() == "[[0,2],[1,3]]");
}

TEST_CASE("oversized oracle calls fail with the limit code") {
  GraphHandle big{must_parse(R"({"n":25,"edges":[]})")};
  OutStr out;
  CHECK(wcg_oracle_mis(big.h, &out.p) == WCG_ERR_LIMIT);
  CHECK(std::strlen(wcg_last_error()) > 0);
}

TEST_CASE("formula parsing, validation, and brute-force satisfiability") {
  CnfHandle dsat;
  REQUIRE(wcg_cnf_parse(fixture_text("example3_dsat.json").c_str(), &dsat.h) == WCG_OK);

  OutStr ok;
  REQUIRE(wcg_cnf_validate(dsat.h, "dsat", &ok.p) == WCG_OK);
  CHECK(ok.str() == "[]");
  OutStr unused;
  CHECK(wcg_cnf_validate(dsat.h, "nonsense", &unused.p) == WCG_ERR_DOMAIN);

  OutStr model;
  REQUIRE(wcg_oracle_sat(dsat.h, &model.p) == WCG_OK);
  CHECK(model.str() != "null");

  CnfHandle contra;
  REQUIRE(wcg_cnf_parse(R"({"n_vars":1,"c1":[[1]],"c2":[[-1]],"kind":"GENERIC"})",
                        &contra.h) == WCG_OK);
  OutStr none;
  REQUIRE(wcg_oracle_sat(contra.h, &none.p) == WCG_OK);
  CHECK(none.str() == "null");

  OutStr dimacs;
  REQUIRE(wcg_cnf_to_dimacs(dsat.h, &dimacs.p) == WCG_OK);
  CHECK(dimacs.str().rfind("p cnf", 0) == 0);
}

TEST_CASE("splitting clauses yields a valid modified instance") {
  CnfHandle dsat;
  REQUIRE(wcg_cnf_parse(fixture_text("example1_dsat.json").c_str(), &dsat.h) == WCG_OK);
  CnfHandle dmsat;
  REQUIRE(wcg_dsat_to_dmsat(dsat.h, &dmsat.h) == WCG_OK);
  OutStr valid;
  REQUIRE(wcg_cnf_validate(dmsat.h, "dmsat", &valid.p) == WCG_OK);
  CHECK(valid.str() == "[]");
}

TEST_CASE("the reduction pipeline reproduces the fixture artifact") {
  CnfHandle dmsat;
  REQUIRE(wcg_cnf_parse(fixture_text("example3_dmsat.json").c_str(), &dmsat.h) == WCG_OK);
  ArtifactHandle art;
  REQUIRE(wcg_dmsat_to_gs(dmsat.h, &art.h) == WCG_OK);
  OutStr built;
  REQUIRE(wcg_artifact_to_json(art.h, &built.p) == WCG_OK);
  CHECK(built.str() == wc::dump_json(Json::parse(fixture_text("figure1_artifact.json"))));

  GraphHandle g;
  REQUIRE(wcg_artifact_graph(art.h, &g.h) == WCG_OK);
  uint32_t n = 0;
  REQUIRE(wcg_graph_n(g.h, &n) == WCG_OK);
  CHECK(n == 44);

  // The designated star is generating precisely because the formula is
  // satisfiable. The graph sits outside the fast family (girth 6 keeps
  // 6-cycles), so the witness oracle is the entry point that applies.
  Json aj = Json::parse(built.str());
  std::vector<uint32_t> bx, by;
  for (const auto& v : aj["bx"]) bx.push_back(v.get<uint32_t>());
  for (const auto& v : aj["by"]) by.push_back(v.get<uint32_t>());
  int gen = 0;
  CHECK(wcg_generating(g.h, bx.data(), bx.size(), by.data(), by.size(), 0, &gen) ==
        WCG_ERR_DOMAIN);
  OutStr wit;
  REQUIRE(wcg_oracle_generating(g.h, bx.data(), bx.size(), by.data(), by.size(), &wit.p) ==
          WCG_OK);
  CHECK(wit.str() != "null");
}

TEST_CASE("witness maps round-trip the fixture assignment") {
  ArtifactHandle art;
  REQUIRE(wcg_artifact_parse(fixture_text("figure1_artifact.json").c_str(), &art.h) == WCG_OK);

  const uint8_t bits[] = {1, 0, 1, 0, 0, 1, 1, 0, 0, 1};
  OutStr wit;
  REQUIRE(wcg_assignment_to_witness(art.h, bits, 10, &wit.p) == WCG_OK);
  CHECK(wit.str() == "[24,26,29,30,33,35,37,38,41,42]");

  const uint32_t ids[] = {24, 26, 29, 30, 33, 35, 37, 38, 41, 42};
  OutStr back;
  REQUIRE(wcg_witness_to_assignment(art.h, ids, 10, &back.p) == WCG_OK);
  CHECK(back.str() == "[1,0,1,0,0,1,1,0,0,1]");
}

TEST_CASE("extend-to-kpq grows the designated subgraph") {
  CnfHandle mono;
  REQUIRE(wcg_cnf_parse(R"({"n_vars":3,"c1":[[1,2],[2,3]],"c2":[[-1,-3]],"kind":"MONOTONE"})",
                        &mono.h) == WCG_OK);
  ArtifactHandle base;
  REQUIRE(wcg_monotone_to_gs(mono.h, &base.h) == WCG_OK);
  ArtifactHandle wide;
  REQUIRE(wcg_extend_to_kpq(base.h, 2, 3, &wide.h) == WCG_OK);

  OutStr a, b;
  REQUIRE(wcg_artifact_to_json(base.h, &a.p) == WCG_OK);
  REQUIRE(wcg_artifact_to_json(wide.h, &b.p) == WCG_OK);
  Json ja = Json::parse(a.str()), jb = Json::parse(b.str());
  CHECK(jb["bx"].size() == 2);
  CHECK(jb["by"].size() > ja["by"].size());
}

TEST_CASE("generators match the core library for fixed seeds") {
  GraphHandle tree;
  REQUIRE(wcg_random_tree(7, 5, &tree.h) == WCG_OK);
  OutStr tj;
  REQUIRE(wcg_graph_to_json(tree.h, &tj.p) == WCG_OK);
  CHECK(tj.str() == core_json(wc::random_tree(7, 5)));

  GraphHandle rg;
  REQUIRE(wcg_random_graph("bip-c6free", 8, 1, 4, 9, &rg.h) == WCG_OK);
  OutStr gj;
  REQUIRE(wcg_graph_to_json(rg.h, &gj.p) == WCG_OK);
  wc::RandomGraphConfig cfg;
  cfg.n = 8;
  CHECK(gj.str() == core_json(wc::random_family_graph(wc::family_bip_c6free(), cfg, 9)));

  CnfHandle rc;
  REQUIRE(wcg_random_cnf("dsat", 4, 3, 2, &rc.h) == WCG_OK);
  OutStr cj;
  REQUIRE(wcg_cnf_to_json(rc.h, &cj.p) == WCG_OK);
  wc::RandomCnfConfig ccfg;
  ccfg.n_vars = 4;
  ccfg.n_clauses = 3;
  CHECK(cj.str() == wc::dump_json(wc::cnf_to_json(wc::random_dsat(ccfg, 2))));

  wcg_cnf* bad = nullptr;
  CHECK(wcg_random_cnf("generic", 4, 3, 2, &bad) == WCG_ERR_DOMAIN);
}

namespace {

struct EnumState {
  int calls = 0;
  int stop_after = -1;  // -1: never stop
  bool all_parse = true;
};

int count_cb(const char* graph_json, void* user) {
  auto* st = static_cast<EnumState*>(user);
  ++st->calls;
  if (Json::parse(graph_json, nullptr, false).is_discarded()) st->all_parse = false;
  return st->stop_after >= 0 && st->calls >= st->stop_after ? 1 : 0;
}

}  // namespace

TEST_CASE("enumeration streams family members and honors early stop") {
  EnumState all;
  uint64_t visited = 0;
  REQUIRE(wcg_enumerate_graphs(3, "any", count_cb, &all, &visited) == WCG_OK);
  CHECK(visited == 8);  // every labeled graph on 3 vertices
  CHECK(all.calls == 8);
  CHECK(all.all_parse);

  EnumState bip;
  REQUIRE(wcg_enumerate_graphs(3, "bip-c6free", count_cb, &bip, &visited) == WCG_OK);
  CHECK(visited == 7);  // the triangle falls out

  EnumState stopped;
  stopped.stop_after = 3;
  REQUIRE(wcg_enumerate_graphs(4, "any", count_cb, &stopped, &visited) == WCG_OK);
  CHECK(visited == 3);
  CHECK(stopped.calls == 3);

  CHECK(wcg_enumerate_graphs(12, "any", count_cb, &all, &visited) == WCG_ERR_DOMAIN);
}

TEST_CASE("verification suites run through the boundary") {
  OutStr rep;
  int ok = 0;
  REQUIRE(wcg_verify("generating", 8, 5, 1, &rep.p, &ok) == WCG_OK);
  Json j = Json::parse(rep.str());
  CHECK(j["suite"] == "generating");
  CHECK(j["total"] == 5);
  CHECK(ok == 1);

  OutStr noflag;
  REQUIRE(wcg_verify("wc", 8, 3, 2, &noflag.p, nullptr) == WCG_OK);

  OutStr unused;
  CHECK(wcg_verify("no-such-suite", 8, 5, 1, &unused.p, &ok) == WCG_ERR_DOMAIN);
}

TEST_CASE("the worked examples replay from the bundled fixtures") {
  OutStr rep;
  int ok = 0;
  REQUIRE(wcg_reproduce_paper(wctest::data_dir().c_str(), &rep.p, &ok) == WCG_OK);
  CHECK(ok == 1);
  Json j = Json::parse(rep.str());
  CHECK(j["total"] == 8);
  CHECK(j["agreed"] == 7);
  CHECK(j["expected_disagreements"] == 1);

  // NULL directory falls back to $WELLCOVER_DATA_DIR, which the test
  // harness sets.
  OutStr env_rep;
  int env_ok = 0;
  REQUIRE(wcg_reproduce_paper(nullptr, &env_rep.p, &env_ok) == WCG_OK);
  CHECK(env_ok == 1);
}
