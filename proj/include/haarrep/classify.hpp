// Exhaustive small-order classification: subset equivalence classes, per-group
// verdicts, the every-Haar-graph-is-Cayley question, and table reproduction.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarrep/base.hpp"
#include "haarrep/graph_aut.hpp"
#include "haarrep/group.hpp"

namespace hgr {

struct ClassifyOptions {
  int exhaustive_cap = 12;      // largest order classified exhaustively
  long long budget = 0;         // per-graph engine budget (0 = default)
  int workers = 0;              // 0 = library default thread count
  uint64_t seed = 0;            // randomized consistency sampling
  int samples = 200;            // samples per group above the exhaustive cap
  bool serial_reference = false;  // force the serial code path
};

// One orbit of subsets under left translation, right translation, and group
// automorphisms; rep is the minimal member as a bitmask over element indices.
struct ConnectionClass {
  uint32_t rep = 0;
  uint64_t orbit_size = 0;
};

// Exactly one representative per orbit, ascending by bitmask. |G| <= 16.
std::vector<ConnectionClass> enumerate_connection_classes(const FiniteGroup& G);

struct ClassificationReport {
  std::string group;
  int order = 0;
  Verdict admits_hgr = Verdict::unknown;
  Verdict admits_rigid_bipartition = Verdict::unknown;
  std::optional<EltSet> hgr_witness;
  std::optional<EltSet> rigid_witness;
  uint64_t class_count = 0;
  uint64_t classes_failed = 0;  // representatives lost to budget exhaustion
  bool exhaustive = false;
};

// Exhaustive verdicts over all subset classes. Witnesses are re-verified by a
// fresh engine run before the report is returned.
ClassificationReport classify_group(const FiniteGroup& G, const ClassifyOptions& opts = {});

struct CayleyReport {
  std::string group;
  int order = 0;
  Verdict verdict = Verdict::unknown;   // yes: every class Cayley
  std::optional<EltSet> witness;        // a verified non-Cayley set on "no"
  uint64_t classes_total = 0;
  uint64_t classes_decided = 0;
  std::vector<uint32_t> undecided;      // representatives left unknown
};

// Decides whether every Haar graph over G is a Cayley graph. Nonabelian G
// with |G| <= 16.
CayleyReport every_haar_is_cayley(const FiniteGroup& G, const ClassifyOptions& opts = {});

struct TableRow {
  int order = 0;
  std::string group;
  bool expected_t1 = false;  // listed as exceptional for representations
  bool expected_t2 = false;  // listed as exceptional for rigid bipartitions
  Verdict computed_t1 = Verdict::unknown;
  Verdict computed_t2 = Verdict::unknown;
  bool exhaustive = false;   // false: randomized consistency run only
  bool match = false;
};

struct TablesReport {
  std::vector<TableRow> rows;
  bool all_match = false;
};

// Catalog verdicts for orders 3..max_order compared against the stored table
// flags; exhaustive through opts.exhaustive_cap, randomized consistency above.
TablesReport reproduce_tables(int max_order, const ClassifyOptions& opts = {});

}  // namespace hgr
