#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "haarrep/haar.hpp"
#include "haarrep/named.hpp"

using namespace hgr;

namespace {

EltSet random_subset(int n, std::mt19937_64& rng) {
  EltSet S(n);
  for (int x = 0; x < n; ++x)
    if (rng() & 1) S.add(x);
  return S;
}

bool perm_preserves_edges(const Graph& g, const Perm& p) {
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if (g.has(u, v) != g.has(p[u], p[v])) return false;
  return true;
}

}  // namespace

TEST_CASE("edge rule") {
  FiniteGroup C4 = group_by_name("C4");
  HaarGraph H = build_haar(C4, EltSet::of(4, {0, 1}));
  CHECK(H.graph.n == 8);
  CHECK(H.graph.edge_count() == 8);
  // Every vertex has degree two and the graph is connected: an 8-cycle.
  for (int v = 0; v < 8; ++v) CHECK(H.graph.degree(v) == 2);
  CHECK(graph_connected(H.graph));

  // (g,-1) ~ (h,+1) exactly when h g^-1 lies in the set.
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    FiniteGroup G = group_by_name(trial % 2 ? "D12" : "C6xC2");
    EltSet S = random_subset(G.n, rng);
    HaarGraph R = build_haar(G, S);
    for (int g = 0; g < G.n; ++g)
      for (int h = 0; h < G.n; ++h)
        CHECK(R.graph.has(g, G.n + h) == S.test(G.mul(h, G.inv(g))));
  }
}

TEST_CASE("degenerate sets") {
  FiniteGroup C5 = group_by_name("C5");
  CHECK(build_haar(C5, EltSet(5)).graph.edge_count() == 0);
  HaarGraph full = build_haar(C5, EltSet::full(5));
  CHECK(full.graph.edge_count() == 25);
  for (int v = 0; v < 10; ++v) CHECK(full.graph.degree(v) == 5);
}

TEST_CASE("both parts are regular of degree equal to the set size") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 25; ++trial) {
    FiniteGroup G = group_by_name(trial % 2 ? "D16" : "C3^2");
    EltSet S = random_subset(G.n, rng);
    HaarGraph H = build_haar(G, S);
    for (int v = 0; v < 2 * G.n; ++v) CHECK(H.graph.degree(v) == S.count());
  }
}

TEST_CASE("parts partition") {
  OrderedPartition p = haar_parts_partition(5);
  CHECK(p.num_cells() == 2);
  CHECK(p.cell(0) == std::vector<int>({0, 1, 2, 3, 4}));
  CHECK(p.cell(1) == std::vector<int>({5, 6, 7, 8, 9}));
}

TEST_CASE("connectivity matches the subgroup criterion") {
  FiniteGroup C6 = group_by_name("C6");
  CHECK_FALSE(is_connected_connection(C6, EltSet::of(6, {0})));
  CHECK(is_connected_connection(C6, EltSet::of(6, {0, 1})));
  CHECK_FALSE(is_connected_connection(C6, EltSet(6)));

  // A set inside a coset of a proper subgroup leaves the graph disconnected.
  FiniteGroup D6 = group_by_name("D6");
  int r = -1;
  for (int x = 1; x < 6; ++x)
    if (D6.mul(x, x) == 0) r = x;
  REQUIRE(r >= 0);
  CHECK_FALSE(is_connected_connection(D6, EltSet::of(6, {0, r})));

  FiniteGroup C12 = group_by_name("C12");
  CHECK(is_connected_connection(C12, EltSet::of(12, {0, 1, 2, 3, 4, 5, 6, 8})));
}

TEST_CASE("connectivity agrees with graph search") {
  std::mt19937_64 rng(17);
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog())
    if (e.order >= 3 && e.order <= 16) names.push_back(e.name);
  int trials = 0;
  for (int i = 0; trials < 500; ++i) {
    FiniteGroup G = catalog_group(names[i % names.size()]);
    EltSet S = random_subset(G.n, rng);
    HaarGraph H = build_haar(G, S);
    CAPTURE(G.name);
    CHECK(is_connected_connection(G, S) == graph_connected(H.graph));
    ++trials;
  }
}

TEST_CASE("bipartite complement") {
  FiniteGroup C6 = group_by_name("C6");
  EltSet S = EltSet::of(6, {0, 2, 3});
  EltSet T = bipartite_complement(C6, S);
  CHECK(S.count() + T.count() == 6);
  CHECK(bipartite_complement(C6, T) == S);
  // Complement edges are exactly the cross-part non-edges.
  HaarGraph HS = build_haar(C6, S);
  HaarGraph HT = build_haar(C6, T);
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h) CHECK(HS.graph.has(g, 6 + h) != HT.graph.has(g, 6 + h));
}

TEST_CASE("translations are automorphisms") {
  FiniteGroup D24 = group_by_name("D24");
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    int g = static_cast<int>(rng() % 24);
    int h = static_cast<int>(rng() % 24);
    CHECK(perm_compose(rho(D24, g), rho(D24, h)) == rho(D24, D24.mul(g, h)));
  }
  CHECK(perm_is_identity(rho(D24, 0)));

  for (int trial = 0; trial < 10; ++trial) {
    EltSet S = random_subset(24, rng);
    HaarGraph H = build_haar(D24, S);
    int g = static_cast<int>(rng() % 24);
    CHECK(perm_preserves_edges(H.graph, rho(D24, g)));
  }

  // Translations act without fixed points away from the identity.
  for (int g = 1; g < 24; ++g) {
    Perm p = rho(D24, g);
    for (int v = 0; v < 48; ++v) CHECK(p[v] != v);
  }
}

TEST_CASE("inversion swap") {
  FiniteGroup C12 = group_by_name("C12");
  Perm io = iota(C12);
  CHECK(perm_is_identity(perm_compose(io, io)));
  CHECK(io[0] == 12);

  // Over an abelian group it preserves every Haar graph.
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 15; ++trial) {
    EltSet S = random_subset(12, rng);
    CHECK(perm_preserves_edges(build_haar(C12, S).graph, io));
  }

  // Over a nonabelian group some set breaks it.
  FiniteGroup D6 = group_by_name("D6");
  Perm jo = iota(D6);
  bool broken = false;
  for (uint32_t mask = 0; mask < 64 && !broken; ++mask) {
    EltSet S(6);
    for (int x = 0; x < 6; ++x)
      if (mask >> x & 1) S.add(x);
    if (!perm_preserves_edges(build_haar(D6, S).graph, jo)) broken = true;
  }
  CHECK(broken);
}

TEST_CASE("induced coset subgraphs") {
  FiniteGroup C12 = group_by_name("C12");
  EltSet S = EltSet::of(12, {0, 1, 2, 4, 7});
  HaarGraph H = build_haar(C12, S);

  SUBCASE("the full subgroup reproduces the graph") {
    HaarGraph W = induced_coset_subgraph(H, EltSet::full(12), 0);
    CHECK(W.n() == 12);
    CHECK(W.graph.edge_count() == H.graph.edge_count());
    CHECK(W.conn == S);
  }
  SUBCASE("a proper coset carries the intersected set") {
    EltSet evens(12);
    for (int x = 0; x < 12; x += 2) evens.add(x);
    for (int r : {0, 1}) {
      HaarGraph W = induced_coset_subgraph(H, evens, r);
      CHECK(W.n() == 6);
      // The relabeled connection set is S intersected with the subgroup.
      EltSet expect(6);
      std::vector<int> members = evens.elements();
      for (int i = 0; i < 6; ++i)
        if (S.test(members[i])) expect.add(i);
      CHECK(W.conn == expect);
      // The graph matches a fresh build over the subgroup view.
      HaarGraph fresh = build_haar(W.group, W.conn);
      CHECK(W.graph.edge_count() == fresh.graph.edge_count());
      for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) CHECK(W.graph.has(u, v) == fresh.graph.has(u, v));
    }
  }
  SUBCASE("the trivial subgroup keeps one pair") {
    HaarGraph W = induced_coset_subgraph(H, EltSet::of(12, {0}), 3);
    CHECK(W.n() == 1);
    CHECK(W.graph.edge_count() == (S.test(0) ? 1 : 0));
  }
}

TEST_CASE("translated sets give isomorphic graphs") {
  std::mt19937_64 rng(41);
  for (const char* name : {"C12", "D12", "A4"}) {
    FiniteGroup G = group_by_name(name);
    for (int trial = 0; trial < 5; ++trial) {
      EltSet S = random_subset(G.n, rng);
      int g = static_cast<int>(rng() % G.n);
      int h = static_cast<int>(rng() % G.n);
      EltSet T(G.n);
      for (int s : S.elements()) T.add(G.mul(g, G.mul(s, h)));
      HaarGraph HS = build_haar(G, S);
      HaarGraph HT = build_haar(G, T);
      OrderedPartition parts = haar_parts_partition(G.n);
      CAPTURE(name);
      CAPTURE(trial);
      CHECK(find_graph_isomorphism(HS.graph, parts, HT.graph, parts).has_value());
    }
  }
}
