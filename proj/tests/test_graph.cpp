#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "haarrep/graph.hpp"
#include "haarrep/haar.hpp"
#include "haarrep/named.hpp"

using namespace hgr;

namespace {

Graph cycle(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph complete(int n) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g = Graph::empty(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  return g;
}

Graph petersen() {
  Graph g = Graph::empty(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph random_graph(int n, std::mt19937_64& rng) {
  Graph g = Graph::empty(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() & 1) g.add_edge(i, j);
  return g;
}

std::vector<std::vector<int>> cell_sets(const OrderedPartition& p) {
  std::vector<std::vector<int>> out;
  for (int c = 0; c < p.num_cells(); ++c) {
    std::vector<int> cell = p.cell(c);
    std::sort(cell.begin(), cell.end());
    out.push_back(cell);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("graph basics") {
  Graph g = Graph::empty(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(g.has(0, 1));
  CHECK(g.has(1, 0));
  CHECK_FALSE(g.has(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_count() == 2);
  CHECK_THROWS_AS(g.add_edge(2, 2), HgrError);
  CHECK_THROWS_AS(Graph::empty(0), HgrError);
  CHECK_THROWS_AS(Graph::empty(Graph::kMaxVertices + 1), HgrError);
}

TEST_CASE("connectivity and components") {
  CHECK(graph_connected(cycle(5)));
  Graph two = Graph::empty(6);
  for (int b : {0, 3}) {
    two.add_edge(b, b + 1);
    two.add_edge(b + 1, b + 2);
    two.add_edge(b, b + 2);
  }
  CHECK_FALSE(graph_connected(two));
  auto comps = graph_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
}

TEST_CASE("refinement separates vertices by degree profile") {
  // Path on three vertices: the middle vertex splits from the endpoints.
  Graph p3 = Graph::empty(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  OrderedPartition r = refine(p3, OrderedPartition::unit(3));
  CHECK(r.num_cells() == 2);
  auto cells = cell_sets(r);
  CHECK(cells == std::vector<std::vector<int>>({{0, 2}, {1}}));

  // Regular graphs stay unsplit.
  CHECK(refine(cycle(6), OrderedPartition::unit(6)).num_cells() == 1);

  // A star splits center from leaves.
  Graph star = Graph::empty(5);
  for (int i = 1; i < 5; ++i) star.add_edge(0, i);
  CHECK(refine(star, OrderedPartition::unit(5)).num_cells() == 2);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(OrderedPartition::from_cells(3, {{0, 1}}), HgrError);
  CHECK_THROWS_AS(OrderedPartition::from_cells(3, {{0, 1}, {1, 2}}), HgrError);
  OrderedPartition p = OrderedPartition::from_cells(4, {{0, 2}, {1, 3}});
  CHECK(p.num_cells() == 2);
  CHECK_FALSE(p.discrete());
  CHECK(OrderedPartition::unit(1).discrete());
}

TEST_CASE("automorphism groups of standard graphs") {
  CHECK(automorphism_group(cycle(8), OrderedPartition::unit(8)).order == u128{16});
  CHECK(automorphism_group(complete(4), OrderedPartition::unit(4)).order == u128{24});
  CHECK(automorphism_group(complete_bipartite(3, 3), OrderedPartition::unit(6)).order ==
        u128{72});
  CHECK(automorphism_group(petersen(), OrderedPartition::unit(10)).order == u128{120});

  Graph p4 = Graph::empty(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(automorphism_group(p4, OrderedPartition::unit(4)).order == u128{2});
}

TEST_CASE("initial cells act as colors") {
  Graph c6 = cycle(6);
  PermGroupDescriptor full = automorphism_group(c6, OrderedPartition::unit(6));
  CHECK(full.order == u128{12});
  // Pinning one vertex keeps only its stabilizer.
  PermGroupDescriptor pinned =
      automorphism_group(c6, OrderedPartition::from_cells(6, {{0}, {1, 2, 3, 4, 5}}));
  CHECK(pinned.order == u128{2});
  for (const Perm& g : pinned.generators) CHECK(g[0] == 0);
}

TEST_CASE("generators returned are automorphisms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_graph(8, rng);
    PermGroupDescriptor d = automorphism_group(g, OrderedPartition::unit(8));
    for (const Perm& p : d.generators)
      for (int u = 0; u < 8; ++u)
        for (int v = u + 1; v < 8; ++v) CHECK(g.has(u, v) == g.has(p[u], p[v]));
  }
}

TEST_CASE("engine agrees with the naive oracle on random graphs") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = random_graph(n, rng);
    OrderedPartition unit = OrderedPartition::unit(n);
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(automorphism_group(g, unit).order == naive_automorphism_order(g, unit));
  }
}

TEST_CASE("engine agrees with the naive oracle under colors") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng);
    std::vector<std::vector<int>> cells(2);
    for (int v = 0; v < n; ++v) cells[v == 0 ? 0 : rng() % 2].push_back(v);
    if (cells[1].empty()) cells.pop_back();
    OrderedPartition p = OrderedPartition::from_cells(n, cells);
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(automorphism_group(g, p).order == naive_automorphism_order(g, p));
  }
}

TEST_CASE("engine agrees with the naive oracle on bipartite group graphs") {
  std::mt19937_64 rng(47);
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog())
    if (e.order >= 3 && e.order <= 8) names.push_back(e.name);
  for (int trial = 0; trial < 30; ++trial) {
    FiniteGroup G = catalog_group(names[rng() % names.size()]);
    EltSet S(G.n);
    for (int x = 0; x < G.n; ++x)
      if (rng() & 1) S.add(x);
    HaarGraph H = build_haar(G, S);
    OrderedPartition unit = OrderedPartition::unit(2 * G.n);
    CAPTURE(trial);
    CAPTURE(G.name);
    CHECK(automorphism_group(H.graph, unit).order ==
          naive_automorphism_order(H.graph, unit));
  }
}

TEST_CASE("isomorphism search") {
  std::mt19937_64 rng(5);
  SUBCASE("relabelings are recognized") {
    for (int trial = 0; trial < 15; ++trial) {
      int n = 5 + static_cast<int>(rng() % 5);
      Graph g = random_graph(n, rng);
      Perm relab(n);
      for (int i = 0; i < n; ++i) relab[i] = i;
      std::shuffle(relab.begin(), relab.end(), rng);
      Graph h = Graph::empty(n);
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (g.has(u, v)) h.add_edge(relab[u], relab[v]);
      auto iso = find_graph_isomorphism(g, OrderedPartition::unit(n), h,
                                        OrderedPartition::unit(n));
      REQUIRE(iso.has_value());
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) CHECK(g.has(u, v) == h.has((*iso)[u], (*iso)[v]));
    }
  }
  SUBCASE("non-isomorphic pairs are refused") {
    Graph path = Graph::empty(5);
    for (int i = 0; i + 1 < 5; ++i) path.add_edge(i, i + 1);
    CHECK_FALSE(find_graph_isomorphism(cycle(5), OrderedPartition::unit(5), path,
                                       OrderedPartition::unit(5))
                    .has_value());
  }
  SUBCASE("colors constrain the search") {
    Graph c4 = cycle(4);
    auto iso = find_graph_isomorphism(c4, OrderedPartition::from_cells(4, {{0}, {1, 2, 3}}),
                                      c4, OrderedPartition::from_cells(4, {{1}, {0, 2, 3}}));
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 1);
  }
}

TEST_CASE("node budgets are enforced") {
  Graph g = Graph::empty(14);
  CHECK_THROWS_AS(automorphism_group(g, OrderedPartition::unit(14), 3), ResourceLimit);
  std::mt19937_64 rng(3);
  Graph r = random_graph(9, rng);
  CHECK_THROWS_AS(naive_automorphism_order(r, OrderedPartition::unit(9), 2), ResourceLimit);
}
