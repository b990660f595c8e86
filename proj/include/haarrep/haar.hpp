#pragma once

#include "haarrep/graph.hpp"
#include "haarrep/group.hpp"

namespace hgr {

// Bipartite graph on G x {-1,+1}: vertex x is (x,-1), vertex n+x is (x,+1),
// and (g,-1) ~ (h,+1) exactly when h*g^-1 lies in the connection set.
struct HaarGraph {
  FiniteGroup group;
  EltSet conn;
  Graph graph;

  int n() const { return group.n; }
};

HaarGraph build_haar(const FiniteGroup& G, const EltSet& S);

// The two parts as initial cells: bottom 0..n-1, top n..2n-1.
OrderedPartition haar_parts_partition(int n);

// True iff <S^-1 S> = G, which holds iff the graph is connected (empty S is
// disconnected by convention).
bool is_connected_connection(const FiniteGroup& G, const EltSet& S);

EltSet bipartite_complement(const FiniteGroup& G, const EltSet& S);

// rho(g): (x,e) -> (xg,e). An automorphism of every Haar graph over G.
Perm rho(const FiniteGroup& G, int g);
// iota: (x,e) -> (x^-1,-e). An automorphism whenever G is abelian.
Perm iota(const FiniteGroup& G);

// Induced subgraph on the coset Nr x {-1,+1}, relabeled along the ascending
// members of N. The right coset cancels the translation, so the result always
// carries connection set S cap N inside the subgroup group.
HaarGraph induced_coset_subgraph(const HaarGraph& H, const EltSet& N, int r);

}  // namespace hgr
