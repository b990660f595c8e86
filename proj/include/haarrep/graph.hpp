#pragma once

#include <optional>
#include <vector>

#include "haarrep/perm.hpp"

namespace hgr {

// Undirected graph with bitset adjacency rows.
struct Graph {
  static constexpr int kMaxVertices = 8192;

  int n = 0;
  int words = 0;
  std::vector<uint64_t> adj;  // row-major, n rows of `words` words

  static Graph empty(int n);
  void add_edge(int u, int v);
  bool has(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1; }
  const uint64_t* row(int v) const { return adj.data() + static_cast<size_t>(v) * words; }
  uint64_t* row(int v) { return adj.data() + static_cast<size_t>(v) * words; }
  int degree(int v) const;
  long long edge_count() const;
};

bool graph_connected(const Graph& g);
std::vector<std::vector<int>> graph_components(const Graph& g);

// Ordered partition of the vertex set; cell order is significant and initial
// cells act as colors for all searches.
struct OrderedPartition {
  std::vector<int> verts;       // vertices grouped by cell
  std::vector<int> cell_start;  // per cell
  std::vector<int> cell_size;   // per cell
  std::vector<int> cell_of;     // per vertex
  int n = 0;

  static OrderedPartition unit(int n);
  static OrderedPartition from_cells(int n, const std::vector<std::vector<int>>& cells);
  int num_cells() const { return static_cast<int>(cell_start.size()); }
  bool discrete() const { return num_cells() == n; }
  std::vector<int> cell(int ci) const;
};

// Coarsest equitable refinement: every vertex of every cell has the same
// neighbor count into every cell. Deterministic and label-invariant at the
// cell level (cells split by ascending neighbor count).
OrderedPartition refine(const Graph& g, const OrderedPartition& p);

// Individualization-refinement automorphism search. The returned descriptor's
// generators preserve edges and map every initial cell to itself; its order is
// cross-checked against the stabilizer chain. budget counts search nodes;
// <= 0 means resolve_budget's default.
PermGroupDescriptor automorphism_group(const Graph& g, const OrderedPartition& initial,
                                       long long budget = 0);

// Color- and edge-preserving isomorphism between two graphs with aligned
// initial cell structures, if one exists.
std::optional<Perm> find_graph_isomorphism(const Graph& g1, const OrderedPartition& p1,
                                           const Graph& g2, const OrderedPartition& p2,
                                           long long budget = 0);

// Reference implementation without refinement: plain backtracking over image
// assignments with adjacency pruning, order via the full point-stabilizer
// tower. Test oracle only; exponential beyond small sizes.
u128 naive_automorphism_order(const Graph& g, const OrderedPartition& initial,
                              long long budget = 0);

}  // namespace hgr
