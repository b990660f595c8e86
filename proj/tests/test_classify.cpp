#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "haarrep/classify.hpp"
#include "haarrep/named.hpp"

using namespace hgr;

namespace {

EltSet mask_to_set(int n, uint32_t mask) {
  EltSet S(n);
  for (int x = 0; x < n; ++x)
    if (mask >> x & 1) S.add(x);
  return S;
}

}  // namespace

TEST_CASE("connection classes") {
  FiniteGroup C3 = group_by_name("C3");
  auto classes = enumerate_connection_classes(C3);
  // Subsets of a 3-element group up to translation and automorphism: one
  // class per size.
  REQUIRE(classes.size() == 4);
  CHECK(classes[0].rep == 0u);
  CHECK(classes[1].rep == 1u);

  // Orbit sizes partition the power set.
  for (const char* name : {"C3", "C6", "D6", "C8"}) {
    FiniteGroup G = group_by_name(name);
    uint64_t total = 0;
    for (const ConnectionClass& c : enumerate_connection_classes(G)) total += c.orbit_size;
    CAPTURE(name);
    CHECK(total == (uint64_t{1} << G.n));
  }

  // Representatives are ascending and within range.
  FiniteGroup D8 = group_by_name("D8");
  auto d8 = enumerate_connection_classes(D8);
  for (size_t i = 1; i < d8.size(); ++i) CHECK(d8[i - 1].rep < d8[i].rep);

  CHECK_THROWS_AS(enumerate_connection_classes(group_by_name("G18")), HgrError);
}

TEST_CASE("class equivalence is sound") {
  // Translating on both sides and applying a group automorphism never leaves
  // the equivalence class: the graphs stay isomorphic.
  std::mt19937_64 rng(83);
  for (const char* name : {"C8", "D8", "D10"}) {
    FiniteGroup G = group_by_name(name);
    auto classes = enumerate_connection_classes(G);
    auto autos = group_automorphisms(G);
    OrderedPartition parts = haar_parts_partition(G.n);
    for (int trial = 0; trial < 30; ++trial) {
      const ConnectionClass& cls = classes[rng() % classes.size()];
      EltSet S = mask_to_set(G.n, cls.rep);
      int g = static_cast<int>(rng() % G.n);
      int h = static_cast<int>(rng() % G.n);
      const auto& alpha = autos[rng() % autos.size()];
      EltSet T(G.n);
      for (int s : S.elements()) T.add(alpha[G.mul(g, G.mul(s, h))]);
      HaarGraph HS = build_haar(G, S);
      HaarGraph HT = build_haar(G, T);
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(find_graph_isomorphism(HS.graph, parts, HT.graph, parts).has_value());
    }
  }
}

TEST_CASE("group verdicts at small orders") {
  SUBCASE("abelian groups never admit a full representation") {
    for (const char* name : {"C8", "C9", "C12"}) {
      ClassificationReport rep = classify_group(group_by_name(name));
      CAPTURE(name);
      CHECK(rep.admits_hgr == Verdict::no);
      CHECK(rep.exhaustive);
      CHECK(rep.classes_failed == 0);
      CHECK_FALSE(rep.hgr_witness.has_value());
    }
  }
  SUBCASE("rigid bipartitions exist beyond the exception list") {
    ClassificationReport rep = classify_group(group_by_name("C8"));
    CHECK(rep.admits_rigid_bipartition == Verdict::yes);
    REQUIRE(rep.rigid_witness.has_value());
    HgrCheck c = is_hgr(group_by_name("C8"), *rep.rigid_witness);
    CHECK(c.aut0_order == u128{8});
  }
  SUBCASE("the three flip groups") {
    // No full representation, yet a rigid bipartition witness exists.
    for (const char* name : {"A4", "D12", "Dic12"}) {
      ClassificationReport rep = classify_group(group_by_name(name));
      CAPTURE(name);
      CHECK(rep.admits_hgr == Verdict::no);
      CHECK(rep.admits_rigid_bipartition == Verdict::yes);
      REQUIRE(rep.rigid_witness.has_value());
      HgrCheck c = is_hgr(group_by_name(name), *rep.rigid_witness);
      CHECK(c.aut0_order == u128{static_cast<unsigned>(rep.order)});
      CHECK(c.aut_order > c.aut0_order);
    }
  }
  SUBCASE("doubly exceptional groups") {
    for (const char* name : {"D8", "Q8", "C4"}) {
      ClassificationReport rep = classify_group(group_by_name(name));
      CAPTURE(name);
      CHECK(rep.admits_hgr == Verdict::no);
      CHECK(rep.admits_rigid_bipartition == Verdict::no);
    }
  }
  SUBCASE("a positive group of order sixteen") {
    ClassificationReport rep = classify_group(group_by_name("D16"));
    CHECK(rep.admits_hgr == Verdict::yes);
    CHECK(rep.admits_rigid_bipartition == Verdict::yes);
    REQUIRE(rep.hgr_witness.has_value());
    HgrCheck c = is_hgr(group_by_name("D16"), *rep.hgr_witness);
    CHECK(c.is_hgr);
  }
}

TEST_CASE("complement coherence") {
  // A set and its bipartite complement always share the part-preserving
  // order, across every class representative at small orders.
  for (const CatalogEntry& e : catalog()) {
    if (e.order < 3 || e.order > 10) continue;
    FiniteGroup G = catalog_group(e.name);
    for (const ConnectionClass& cls : enumerate_connection_classes(G)) {
      EltSet S = mask_to_set(G.n, cls.rep);
      EltSet T = bipartite_complement(G, S);
      CAPTURE(e.name);
      CHECK(is_hgr(G, S).aut0_order == is_hgr(G, T).aut0_order);
    }
  }
}

TEST_CASE("serial and parallel classification agree") {
  ClassifyOptions serial;
  serial.serial_reference = true;
  for (const char* name : {"D12", "C6xC2"}) {
    ClassificationReport a = classify_group(group_by_name(name));
    ClassificationReport b = classify_group(group_by_name(name), serial);
    CAPTURE(name);
    CHECK(a.admits_hgr == b.admits_hgr);
    CHECK(a.admits_rigid_bipartition == b.admits_rigid_bipartition);
    CHECK(a.class_count == b.class_count);
    CHECK(a.classes_failed == b.classes_failed);
    CHECK(a.hgr_witness.has_value() == b.hgr_witness.has_value());
    if (a.rigid_witness && b.rigid_witness) CHECK(*a.rigid_witness == *b.rigid_witness);
  }
}

TEST_CASE("group-graph sweeps") {
  SUBCASE("groups whose graphs are all group graphs") {
    for (const char* name : {"D6", "Q8"}) {
      CayleyReport rep = every_haar_is_cayley(group_by_name(name));
      CAPTURE(name);
      CHECK(rep.verdict == Verdict::yes);
      CHECK(rep.classes_decided == rep.classes_total);
      CHECK(rep.undecided.empty());
      CHECK_FALSE(rep.witness.has_value());
    }
  }
  SUBCASE("a witness appears at order twelve") {
    CayleyReport rep = every_haar_is_cayley(group_by_name("A4"));
    CHECK(rep.verdict == Verdict::no);
    REQUIRE(rep.witness.has_value());
    CayleyOutcome check = decide_cayley(group_by_name("A4"), *rep.witness);
    CHECK(check.verdict == Verdict::no);
  }
  SUBCASE("abelian groups are rejected") {
    CHECK_THROWS_AS(every_haar_is_cayley(group_by_name("C8")), HgrError);
  }
  SUBCASE("serial reference agrees") {
    ClassifyOptions serial;
    serial.serial_reference = true;
    CayleyReport a = every_haar_is_cayley(group_by_name("D8"));
    CayleyReport b = every_haar_is_cayley(group_by_name("D8"), serial);
    CHECK(a.verdict == b.verdict);
    CHECK(a.classes_total == b.classes_total);
    CHECK(a.classes_decided == b.classes_decided);
  }
}

TEST_CASE("table reproduction at order eight") {
  TablesReport rep = reproduce_tables(8);
  CHECK(rep.all_match);
  // Orders three through eight cover twelve isomorphism types.
  CHECK(rep.rows.size() == 12);
  for (const TableRow& row : rep.rows) {
    CAPTURE(row.group);
    CHECK(row.exhaustive);
    CHECK(row.match);
    CHECK(row.order >= 3);
    CHECK(row.order <= 8);
  }
}

TEST_CASE("table rows are ordered and flagged") {
  TablesReport rep = reproduce_tables(12);
  CHECK(rep.all_match);
  CHECK(rep.rows.size() == 22);
  for (size_t i = 1; i < rep.rows.size(); ++i)
    CHECK(rep.rows[i - 1].order <= rep.rows[i].order);
  int flips = 0;
  for (const TableRow& row : rep.rows)
    if (row.expected_t1 && !row.expected_t2) {
      ++flips;
      CHECK(row.computed_t1 == Verdict::yes);
      CHECK(row.computed_t2 == Verdict::no);
    }
  // The three nonabelian groups whose obstruction is only the part swap.
  CHECK(flips == 3);
}

TEST_CASE("sampled consistency above the exhaustive cap") {
  ClassifyOptions opts;
  opts.samples = 40;
  TablesReport rep = reproduce_tables(14, opts);
  bool saw_sampled = false;
  for (const TableRow& row : rep.rows) {
    if (row.order <= 12) {
      CHECK(row.exhaustive);
    } else {
      saw_sampled = true;
      CHECK_FALSE(row.exhaustive);
      CHECK(row.match);
    }
  }
  CHECK(saw_sampled);
  CHECK(rep.all_match);
}
