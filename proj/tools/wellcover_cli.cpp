// Command-line front end. Every operation goes through the C boundary in
// wellcover.h; this file only parses flags, moves text, and shapes output.
// Exit codes: 0 success, 1 domain/data failure, 2 usage.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <wellcover/wellcover.h>

namespace {

struct OwnedStr {
  char* p = nullptr;
  ~OwnedStr() { wcg_string_free(p); }
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

bool g_pretty = false;

// "-" reads standard input.
std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_json(const nlohmann::json& j) {
  std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n";
}

void print_json_text(const std::string& canonical) {
  if (!g_pretty) {
    std::cout << canonical << "\n";
    return;
  }
  print_json(nlohmann::json::parse(canonical));
}

// Exit code + stderr prefix for a failed library call.
int report_failure(const std::string& op, int rc) {
  const char* prefix = "internal error";
  int exit_code = 1;
  switch (rc) {
    case WCG_ERR_DOMAIN: prefix = "domain error"; break;
    case WCG_ERR_PARSE: prefix = "parse error"; break;
    case WCG_ERR_LIMIT: prefix = "limit error"; break;
    case WCG_ERR_USAGE:
      prefix = "usage error";
      exit_code = 2;
      break;
    default: break;
  }
  std::cerr << prefix << ": " << op << ": " << wcg_last_error() << "\n";
  return exit_code;
}

// Shared flag storage; CLI11 callbacks fill it per subcommand.
struct Args {
  std::string graph_file, cnf_file, artifact_file, family = "bip-c6free", kind, data_dir;
  std::vector<uint32_t> bx, by;
  uint32_t x = 0, x1 = 0, x2 = 0, u = 0, v = 0;
  uint32_t n = 8, count = 100, p = 1, q = 2;
  uint64_t seed = 1, p_num = 1, p_den = 4;
  uint32_t n_vars = 6, n_clauses = 6;
  bool unchecked = false;
};

Args args;
std::function<int()> action;

int load_graph(GraphHandle& g) {
  std::string text = read_input(args.graph_file);
  int rc = wcg_graph_parse(text.c_str(), &g.h);
  return rc == WCG_OK ? 0 : report_failure("--graph", rc);
}

int load_cnf(CnfHandle& f) {
  std::string text = read_input(args.cnf_file);
  int rc = wcg_cnf_parse(text.c_str(), &f.h);
  return rc == WCG_OK ? 0 : report_failure("--cnf", rc);
}

int load_artifact(ArtifactHandle& a) {
  std::string text = read_input(args.artifact_file);
  int rc = wcg_artifact_parse(text.c_str(), &a.h);
  return rc == WCG_OK ? 0 : report_failure("--artifact", rc);
}

// Emit {key: parsed set/system/...} around a JSON payload from the library.
int emit_keyed(const std::string& op, int rc, const OwnedStr& payload, const char* key) {
  if (rc != WCG_OK) return report_failure(op, rc);
  print_json({{key, nlohmann::json::parse(payload.p)}});
  return 0;
}

int run_system_command(const char* op,
                       int (*fn)(const wcg_graph*, int, char**)) {
  GraphHandle g;
  if (int rc = load_graph(g)) return rc;
  OwnedStr out;
  int rc = fn(g.h, args.unchecked ? 1 : 0, &out.p);
  if (rc != WCG_OK) return report_failure(op, rc);
  print_json_text(out.p);
  return 0;
}

int run_verify(const std::string& suite) {
  OwnedStr rep;
  int ok = 0;
  int rc = wcg_verify(suite.c_str(), args.n, args.count, args.seed, &rep.p, &ok);
  if (rc != WCG_OK) return report_failure("verify", rc);
  print_json_text(rep.p);
  if (!ok) std::cerr << "verify: unexpected disagreements, see report\n";
  return ok ? 0 : 1;
}

int run_reproduce() {
  OwnedStr rep;
  int ok = 0;
  const char* dir = args.data_dir.empty() ? nullptr : args.data_dir.c_str();
  int rc = wcg_reproduce_paper(dir, &rep.p, &ok);
  if (rc != WCG_OK) return report_failure("reproduce-paper", rc);
  print_json_text(rep.p);
  if (!ok) std::cerr << "reproduce-paper: unexpected disagreements, see report\n";
  return ok ? 0 : 1;
}

int enum_callback(const char* graph_json, void* user) {
  auto* remaining = static_cast<uint64_t*>(user);
  print_json_text(graph_json);
  if (*remaining == 0) return 0;  // unlimited
  return --*remaining == 0 ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"well-covered graph toolkit: recognition, weight spaces, reductions, oracles"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "indent JSON output");

  auto add_graph = [](CLI::App* s) {
    s->add_option("--graph", args.graph_file, "graph file (JSON or edge list, '-' for stdin)")
        ->required();
  };
  auto add_cnf = [](CLI::App* s) {
    s->add_option("--cnf,--in", args.cnf_file, "formula file (JSON or DIMACS, '-' for stdin)")
        ->required();
  };
  auto add_unchecked = [](CLI::App* s) {
    s->add_flag("--unchecked", args.unchecked, "skip the graph-family gate");
  };
  auto add_sides = [](CLI::App* s) {
    s->add_option("--bx", args.bx, "first side, comma-separated vertex ids")
        ->required()
        ->delimiter(',');
    s->add_option("--by", args.by, "second side, comma-separated vertex ids")
        ->required()
        ->delimiter(',');
  };

  // --- direct algorithms -------------------------------------------------
  auto* sc_gen = app.add_subcommand("generating", "is (bx, by) a generating subgraph?");
  add_graph(sc_gen);
  add_sides(sc_gen);
  add_unchecked(sc_gen);
  sc_gen->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      int out = 0;
      int rc = wcg_generating(g.h, args.bx.data(), args.bx.size(), args.by.data(),
                              args.by.size(), args.unchecked ? 1 : 0, &out);
      if (rc != WCG_OK) return report_failure("generating", rc);
      print_json({{"generating", out != 0}});
      return 0;
    };
  });

  auto* sc_m1 = app.add_subcommand("maxgen1", "largest generating star around x");
  add_graph(sc_m1);
  sc_m1->add_option("--x", args.x, "center vertex")->required();
  add_unchecked(sc_m1);
  sc_m1->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_maxgen1(g.h, args.x, args.unchecked ? 1 : 0, &out.p);
      return emit_keyed("maxgen1", rc, out, "t");
    };
  });

  auto* sc_m2 = app.add_subcommand("maxgen2", "largest generating subgraph around x1, x2");
  add_graph(sc_m2);
  sc_m2->add_option("--x1", args.x1, "first center")->required();
  sc_m2->add_option("--x2", args.x2, "second center")->required();
  add_unchecked(sc_m2);
  sc_m2->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_maxgen2(g.h, args.x1, args.x2, args.unchecked ? 1 : 0, &out.p);
      return emit_keyed("maxgen2", rc, out, "t");
    };
  });

  auto* sc_wcw = app.add_subcommand("wcw", "constraint system for the weight space");
  add_graph(sc_wcw);
  add_unchecked(sc_wcw);
  sc_wcw->callback([] { action = [] { return run_system_command("wcw", wcg_wcw); }; });

  auto* sc_wc = app.add_subcommand("well-covered", "decide well-coveredness");
  add_graph(sc_wc);
  add_unchecked(sc_wc);
  sc_wc->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      int out = 0;
      int rc = wcg_well_covered(g.h, args.unchecked ? 1 : 0, &out);
      if (rc != WCG_OK) return report_failure("well-covered", rc);
      print_json({{"well_covered", out != 0}});
      return 0;
    };
  });

  auto* sc_leaf = app.add_subcommand("wcw-leaf", "leaf-driven weight-space system");
  add_graph(sc_leaf);
  add_unchecked(sc_leaf);
  sc_leaf->callback(
      [] { action = [] { return run_system_command("wcw-leaf", wcg_wcw_leaf); }; });

  auto* sc_rel = app.add_subcommand("relating-edge", "does a generating subgraph split u, v?");
  add_graph(sc_rel);
  sc_rel->add_option("--u", args.u, "edge endpoint")->required();
  sc_rel->add_option("--v", args.v, "edge endpoint")->required();
  sc_rel->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      int out = 0;
      int rc = wcg_relating_edge(g.h, args.u, args.v, &out);
      if (rc != WCG_OK) return report_failure("relating-edge", rc);
      print_json({{"relating", out != 0}});
      return 0;
    };
  });

  // --- oracles -----------------------------------------------------------
  auto* sc_oracle = app.add_subcommand("oracle", "brute-force reference computations");
  sc_oracle->require_subcommand(1);

  auto* o_mis = sc_oracle->add_subcommand("mis", "all maximal independent sets");
  add_graph(o_mis);
  o_mis->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_oracle_mis(g.h, &out.p);
      return emit_keyed("oracle mis", rc, out, "sets");
    };
  });

  auto* o_wc = sc_oracle->add_subcommand("wc", "well-coveredness by enumeration");
  add_graph(o_wc);
  o_wc->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      int out = 0;
      int rc = wcg_oracle_well_covered(g.h, &out);
      if (rc != WCG_OK) return report_failure("oracle wc", rc);
      print_json({{"well_covered", out != 0}});
      return 0;
    };
  });

  auto* o_wcw = sc_oracle->add_subcommand("wcw", "weight space by enumeration");
  add_graph(o_wcw);
  o_wcw->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_oracle_wcw(g.h, &out.p);
      if (rc != WCG_OK) return report_failure("oracle wcw", rc);
      print_json_text(out.p);
      return 0;
    };
  });

  auto* o_gen = sc_oracle->add_subcommand("generating", "generating status with witness");
  add_graph(o_gen);
  add_sides(o_gen);
  o_gen->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_oracle_generating(g.h, args.bx.data(), args.bx.size(), args.by.data(),
                                     args.by.size(), &out.p);
      if (rc != WCG_OK) return report_failure("oracle generating", rc);
      nlohmann::json witness = nlohmann::json::parse(std::string(out.p));
      print_json({{"generating", !witness.is_null()}, {"witness", witness}});
      return 0;
    };
  });

  auto* o_sat = sc_oracle->add_subcommand("sat", "satisfiability by enumeration");
  add_cnf(o_sat);
  o_sat->callback([] {
    action = [] {
      CnfHandle f;
      if (int rc = load_cnf(f)) return rc;
      OwnedStr out;
      int rc = wcg_oracle_sat(f.h, &out.p);
      if (rc != WCG_OK) return report_failure("oracle sat", rc);
      nlohmann::json a = nlohmann::json::parse(std::string(out.p));
      print_json({{"satisfiable", !a.is_null()}, {"assignment", a}});
      return 0;
    };
  });

  // --- reductions --------------------------------------------------------
  auto* sc_reduce = app.add_subcommand("reduce", "formula and graph constructions");
  sc_reduce->require_subcommand(1);

  auto* r_dd = sc_reduce->add_subcommand("dsat-to-dmsat", "split clauses to the modified form");
  add_cnf(r_dd);
  r_dd->callback([] {
    action = [] {
      CnfHandle f;
      if (int rc = load_cnf(f)) return rc;
      CnfHandle out;
      int rc = wcg_dsat_to_dmsat(f.h, &out.h);
      if (rc != WCG_OK) return report_failure("reduce dsat-to-dmsat", rc);
      OwnedStr j;
      rc = wcg_cnf_to_json(out.h, &j.p);
      if (rc != WCG_OK) return report_failure("reduce dsat-to-dmsat", rc);
      print_json_text(j.p);
      return 0;
    };
  });

  auto make_gs = [](CLI::App* s, int (*fn)(const wcg_cnf*, wcg_artifact**), const char* op) {
    s->callback([fn, op] {
      action = [fn, op] {
        CnfHandle f;
        if (int rc = load_cnf(f)) return rc;
        ArtifactHandle out;
        int rc = fn(f.h, &out.h);
        if (rc != WCG_OK) return report_failure(op, rc);
        OwnedStr j;
        rc = wcg_artifact_to_json(out.h, &j.p);
        if (rc != WCG_OK) return report_failure(op, rc);
        print_json_text(j.p);
        return 0;
      };
    });
  };
  auto* r_dg = sc_reduce->add_subcommand("dmsat-to-gs", "incidence graph with designated star");
  add_cnf(r_dg);
  make_gs(r_dg, wcg_dmsat_to_gs, "reduce dmsat-to-gs");
  auto* r_mg = sc_reduce->add_subcommand("monotone-to-gs", "incidence graph for monotone form");
  add_cnf(r_mg);
  make_gs(r_mg, wcg_monotone_to_gs, "reduce monotone-to-gs");

  auto* r_ext = sc_reduce->add_subcommand("extend-kpq", "grow the designated subgraph");
  r_ext->add_option("--artifact,--in", args.artifact_file, "artifact JSON file")->required();
  r_ext->add_option("--p", args.p, "target first-side size (>= 1)")->required();
  r_ext->add_option("--q", args.q, "target second-side size (>= 2)")->required();
  r_ext->callback([] {
    action = [] {
      ArtifactHandle a;
      if (int rc = load_artifact(a)) return rc;
      ArtifactHandle out;
      int rc = wcg_extend_to_kpq(a.h, args.p, args.q, &out.h);
      if (rc != WCG_OK) return report_failure("reduce extend-kpq", rc);
      OwnedStr j;
      rc = wcg_artifact_to_json(out.h, &j.p);
      if (rc != WCG_OK) return report_failure("reduce extend-kpq", rc);
      print_json_text(j.p);
      return 0;
    };
  });

  // --- validation --------------------------------------------------------
  auto* sc_val = app.add_subcommand("validate", "membership checks with violation reports");
  sc_val->require_subcommand(1);

  auto* v_fam = sc_val->add_subcommand("family", "graph-family membership");
  add_graph(v_fam);
  v_fam->add_option("--family", args.family,
                    "bip-c6free | girth6 | no-c3c5 | c3c4c5c7-free | any");
  v_fam->callback([] {
    action = [] {
      GraphHandle g;
      if (int rc = load_graph(g)) return rc;
      OwnedStr out;
      int rc = wcg_graph_validate_family(g.h, args.family.c_str(), &out.p);
      if (rc != WCG_OK) return report_failure("validate family", rc);
      nlohmann::json vs = nlohmann::json::parse(std::string(out.p));
      print_json({{"family", args.family}, {"valid", vs.empty()}, {"violations", vs}});
      return 0;
    };
  });

  auto* v_cnf = sc_val->add_subcommand("cnf", "formula-kind membership");
  add_cnf(v_cnf);
  v_cnf->add_option("--kind", args.kind, "generic | monotone | dsat | dmsat")->required();
  v_cnf->callback([] {
    action = [] {
      CnfHandle f;
      if (int rc = load_cnf(f)) return rc;
      OwnedStr out;
      int rc = wcg_cnf_validate(f.h, args.kind.c_str(), &out.p);
      if (rc != WCG_OK) return report_failure("validate cnf", rc);
      nlohmann::json vs = nlohmann::json::parse(std::string(out.p));
      print_json({{"kind", args.kind}, {"valid", vs.empty()}, {"violations", vs}});
      return 0;
    };
  });

  // --- generation --------------------------------------------------------
  auto* sc_gen2 = app.add_subcommand("gen", "deterministic seeded instances");
  sc_gen2->require_subcommand(1);

  auto* g_graph = sc_gen2->add_subcommand("graph", "random graph inside a family");
  g_graph->add_option("--family", args.family, "target family");
  g_graph->add_option("--n", args.n, "vertex count");
  g_graph->add_option("--p-num", args.p_num, "edge probability numerator");
  g_graph->add_option("--p-den", args.p_den, "edge probability denominator");
  g_graph->add_option("--seed", args.seed, "RNG seed");
  g_graph->callback([] {
    action = [] {
      GraphHandle g;
      int rc = wcg_random_graph(args.family.c_str(), args.n, args.p_num, args.p_den,
                                args.seed, &g.h);
      if (rc != WCG_OK) return report_failure("gen graph", rc);
      OwnedStr j;
      rc = wcg_graph_to_json(g.h, &j.p);
      if (rc != WCG_OK) return report_failure("gen graph", rc);
      print_json_text(j.p);
      return 0;
    };
  });

  auto* g_tree = sc_gen2->add_subcommand("tree", "uniform random labeled tree");
  g_tree->add_option("--n", args.n, "vertex count");
  g_tree->add_option("--seed", args.seed, "RNG seed");
  g_tree->callback([] {
    action = [] {
      GraphHandle g;
      int rc = wcg_random_tree(args.n, args.seed, &g.h);
      if (rc != WCG_OK) return report_failure("gen tree", rc);
      OwnedStr j;
      rc = wcg_graph_to_json(g.h, &j.p);
      if (rc != WCG_OK) return report_failure("gen tree", rc);
      print_json_text(j.p);
      return 0;
    };
  });

  auto* g_dsat = sc_gen2->add_subcommand("dsat", "random designated-split formula");
  g_dsat->add_option("--n", args.n_vars, "variable count");
  g_dsat->add_option("--count", args.n_clauses, "clause count");
  g_dsat->add_option("--seed", args.seed, "RNG seed");
  g_dsat->callback([] {
    action = [] {
      CnfHandle f;
      int rc = wcg_random_cnf("dsat", args.n_vars, args.n_clauses, args.seed, &f.h);
      if (rc != WCG_OK) return report_failure("gen dsat", rc);
      OwnedStr j;
      rc = wcg_cnf_to_json(f.h, &j.p);
      if (rc != WCG_OK) return report_failure("gen dsat", rc);
      print_json_text(j.p);
      return 0;
    };
  });

  auto* g_enum = sc_gen2->add_subcommand("enum", "stream every family member, one per line");
  g_enum->add_option("--n", args.n, "vertex count (<= 9)");
  g_enum->add_option("--family", args.family, "target family");
  g_enum->add_option("--count", args.count, "stop after this many graphs (0 = all)");
  g_enum->callback([] {
    action = [] {
      uint64_t remaining = args.count;
      uint64_t visited = 0;
      int rc = wcg_enumerate_graphs(args.n, args.family.c_str(), enum_callback, &remaining,
                                    &visited);
      if (rc != WCG_OK) return report_failure("gen enum", rc);
      std::cerr << "gen enum: " << visited << " graphs\n";
      return 0;
    };
  });

  // --- verification ------------------------------------------------------
  auto* sc_ver = app.add_subcommand("verify", "run a fast-vs-oracle agreement suite");
  static std::string suite;
  sc_ver
      ->add_option("suite", suite,
                   "generating | maxgen | wcw | wc | leaf | dsat-chain | monotone-chain | "
                   "exhaustive")
      ->required()
      ->check(CLI::IsMember({"generating", "maxgen", "wcw", "wc", "leaf", "dsat-chain",
                             "monotone-chain", "exhaustive"}));
  sc_ver->add_option("--n", args.n, "vertex bound");
  sc_ver->add_option("--count", args.count, "instances to draw");
  sc_ver->add_option("--seed", args.seed, "RNG seed");
  sc_ver->add_option("--family", args.family, "instance family (bip-c6free only)")
      ->check(CLI::IsMember({"bip-c6free"}));
  sc_ver->callback([] { action = [] { return run_verify(suite); }; });

  auto* sc_rep = app.add_subcommand("reproduce-paper", "replay the worked examples");
  sc_rep->add_option("--data", args.data_dir, "fixture directory (default: $WELLCOVER_DATA_DIR, then 'data')");
  sc_rep->callback([] { action = [] { return run_reproduce(); }; });

  // Let --pretty appear after any subcommand.
  std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
    for (CLI::App* sub : a->get_subcommands([](CLI::App*) { return true; })) {
      sub->fallthrough();
      allow_fallthrough(sub);
    }
  };
  allow_fallthrough(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    return action();
  } catch (const std::exception& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 1;
  }
}
