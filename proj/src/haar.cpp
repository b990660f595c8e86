#include "haarrep/haar.hpp"

namespace hgr {

HaarGraph build_haar(const FiniteGroup& G, const EltSet& S) {
  if (S.n != G.n) throw HgrError("build_haar: connection set belongs to a different group");
  HaarGraph H;
  H.group = G;
  H.conn = S;
  H.graph = Graph::empty(2 * G.n);
  for (int g = 0; g < G.n; ++g)
    for (int s : S.elements()) H.graph.add_edge(g, G.n + G.mul(s, g));
  return H;
}

OrderedPartition haar_parts_partition(int n) {
  std::vector<std::vector<int>> cells(2);
  for (int i = 0; i < n; ++i) {
    cells[0].push_back(i);
    cells[1].push_back(n + i);
  }
  return OrderedPartition::from_cells(2 * n, cells);
}

bool is_connected_connection(const FiniteGroup& G, const EltSet& S) {
  if (S.count() == 0) return false;
  std::vector<int> quotients;
  for (int s : S.elements())
    for (int t : S.elements()) quotients.push_back(G.mul(G.inv(s), t));
  return closure_set(G, quotients).count() == G.n;
}

EltSet bipartite_complement(const FiniteGroup& G, const EltSet& S) {
  EltSet T = EltSet::full(G.n);
  for (int s : S.elements()) T.remove(s);
  return T;
}

Perm rho(const FiniteGroup& G, int g) {
  Perm p(2 * G.n);
  for (int x = 0; x < G.n; ++x) {
    p[x] = G.mul(x, g);
    p[G.n + x] = G.n + G.mul(x, g);
  }
  return p;
}

Perm iota(const FiniteGroup& G) {
  Perm p(2 * G.n);
  for (int x = 0; x < G.n; ++x) {
    p[x] = G.n + G.inv(x);
    p[G.n + x] = G.inv(x);
  }
  return p;
}

HaarGraph induced_coset_subgraph(const HaarGraph& H, const EltSet& N, int r) {
  SubgroupGroup sub = sub_group(H.group, N, "induced");
  const FiniteGroup& G = H.group;
  int m = sub.group.n;
  std::vector<int> members = N.elements();  // ascending; members[i] has sub index i
  HaarGraph out;
  out.group = sub.group;
  out.conn = EltSet(m);
  for (int s : H.conn.elements())
    if (N.test(s)) out.conn.add(sub.from_parent[s]);
  out.graph = Graph::empty(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (H.graph.has(G.mul(members[i], r), G.n + G.mul(members[j], r)))
        out.graph.add_edge(i, m + j);
  return out;
}

}  // namespace hgr
