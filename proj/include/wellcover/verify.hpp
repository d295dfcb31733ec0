#pragma once
// Cross-validation harness: runs the fast algorithms against the brute-force
// oracles over seeded random corpora or exhaustive small-graph sweeps and
// reports per-instance agreement. Also re-derives the bundled worked
// examples (reproduce_paper) against the shipped fixtures and the
// known-discrepancy registry.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace wc {

struct VerifyRecord {
  std::string id;         // instance id, stable and sortable
  std::string algorithm;  // fast-path result, rendered
  std::string oracle;     // oracle result, rendered
  bool agree = false;
  bool expected_disagreement = false;  // matched a registry entry
  int64_t micros = 0;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyRecord> records;   // sorted by id
  uint64_t total = 0;
  uint64_t agreed = 0;
  uint64_t expected_disagreements = 0;
  bool records_truncated = false;      // exhaustive sweeps keep only disagreements
  std::vector<std::string> disagreement_dumps;  // full instance dumps

  bool ok() const { return agreed + expected_disagreements == total; }
};

nlohmann::json report_to_json(const VerifyReport& r);

// Randomized suites (n caps the instance size; count instances; fixed seed).
VerifyReport verify_generating(uint32_t n, uint32_t count, uint64_t seed);
VerifyReport verify_maxgen(uint32_t n, uint32_t count, uint64_t seed);
VerifyReport verify_wcw(uint32_t n, uint32_t count, uint64_t seed);
VerifyReport verify_wc(uint32_t n, uint32_t count, uint64_t seed);
VerifyReport verify_leaf(uint32_t n, uint32_t count, uint64_t seed);
VerifyReport verify_dsat_chain(uint32_t count, uint64_t seed);
VerifyReport verify_monotone_chain(uint32_t count, uint64_t seed);

// Exhaustive sweep over every bipartite 6-cycle-free graph on up to max_n
// vertices, cross-checking the recognizer (per induced complete bipartite
// subgraph with a side of at most 2), the weight-space algorithm, and the
// well-coveredness decision. Aggregates only (records_truncated).
VerifyReport verify_exhaustive(uint32_t max_n);

VerifyReport verify_suite(const std::string& suite, uint32_t n, uint32_t count, uint64_t seed);

// Re-derives the bundled worked examples from data_dir and checks them
// against the fixtures; disagreements listed in the registry count as
// expected. Returns a per-check report.
VerifyReport reproduce_paper(const std::string& data_dir);

}  // namespace wc
