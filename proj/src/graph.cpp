// Graph storage, equitable refinement, and the automorphism engine.
//
// automorphism_group computes Aut recursively: refine, individualize the
// minimum vertex v of the target cell, recurse for the stabilizer, then grow
// the orbit of v by searching for an automorphism onto each unreached cell
// mate. Orbit-stabilizer gives the exact order, which is then cross-checked
// against a Schreier-Sims chain over the returned generators.

#include "haarrep/graph.hpp"

#include <algorithm>
#include <deque>

namespace hgr {

Graph Graph::empty(int n) {
  if (n < 1 || n > kMaxVertices) throw HgrError("graph: vertex count out of range");
  Graph g;
  g.n = n;
  g.words = (n + 63) / 64;
  g.adj.assign(static_cast<size_t>(n) * g.words, 0);
  return g;
}

void Graph::add_edge(int u, int v) {
  if (u == v) throw HgrError("graph: loops not supported");
  row(u)[v >> 6] |= uint64_t(1) << (v & 63);
  row(v)[u >> 6] |= uint64_t(1) << (u & 63);
}

int Graph::degree(int v) const {
  int d = 0;
  const uint64_t* r = row(v);
  for (int w = 0; w < words; ++w) d += __builtin_popcountll(r[w]);
  return d;
}

long long Graph::edge_count() const {
  long long total = 0;
  for (int v = 0; v < n; ++v) total += degree(v);
  return total / 2;
}

bool graph_connected(const Graph& g) { return graph_components(g).size() == 1; }

std::vector<std::vector<int>> graph_components(const Graph& g) {
  std::vector<int> owner(g.n, -1);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < g.n; ++s) {
    if (owner[s] >= 0) continue;
    std::vector<int> comp{s};
    owner[s] = static_cast<int>(comps.size());
    for (size_t head = 0; head < comp.size(); ++head) {
      int v = comp[head];
      const uint64_t* r = g.row(v);
      for (int w = 0; w < g.words; ++w) {
        uint64_t bits = r[w];
        while (bits) {
          int u = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (owner[u] < 0) {
            owner[u] = owner[s];
            comp.push_back(u);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

OrderedPartition OrderedPartition::unit(int n) {
  OrderedPartition p;
  p.n = n;
  p.verts.resize(n);
  for (int i = 0; i < n; ++i) p.verts[i] = i;
  p.cell_start = {0};
  p.cell_size = {n};
  p.cell_of.assign(n, 0);
  return p;
}

OrderedPartition OrderedPartition::from_cells(int n, const std::vector<std::vector<int>>& cells) {
  OrderedPartition p;
  p.n = n;
  p.cell_of.assign(n, -1);
  for (const auto& cell : cells) {
    if (cell.empty()) throw HgrError("partition: empty cell");
    p.cell_start.push_back(static_cast<int>(p.verts.size()));
    p.cell_size.push_back(static_cast<int>(cell.size()));
    for (int v : cell) {
      if (v < 0 || v >= n || p.cell_of[v] >= 0) throw HgrError("partition: cells must partition 0..n-1");
      p.cell_of[v] = static_cast<int>(p.cell_start.size()) - 1;
      p.verts.push_back(v);
    }
  }
  if (static_cast<int>(p.verts.size()) != n) throw HgrError("partition: cells must cover 0..n-1");
  return p;
}

std::vector<int> OrderedPartition::cell(int ci) const {
  return std::vector<int>(verts.begin() + cell_start[ci], verts.begin() + cell_start[ci] + cell_size[ci]);
}

namespace {

std::vector<uint64_t> cell_mask(const OrderedPartition& p, int ci, int words) {
  std::vector<uint64_t> mask(words, 0);
  for (int k = 0; k < p.cell_size[ci]; ++k) {
    int v = p.verts[p.cell_start[ci] + k];
    mask[v >> 6] |= uint64_t(1) << (v & 63);
  }
  return mask;
}

int count_into(const Graph& g, int v, const std::vector<uint64_t>& mask) {
  const uint64_t* r = g.row(v);
  int c = 0;
  for (int w = 0; w < g.words; ++w) c += __builtin_popcountll(r[w] & mask[w]);
  return c;
}

}  // namespace

OrderedPartition refine(const Graph& g, const OrderedPartition& input) {
  OrderedPartition p = input;
  std::deque<std::vector<uint64_t>> work;
  for (int ci = 0; ci < p.num_cells(); ++ci) work.push_back(cell_mask(p, ci, g.words));
  std::vector<std::pair<int, int>> keyed;
  while (!work.empty()) {
    std::vector<uint64_t> W = std::move(work.front());
    work.pop_front();
    std::vector<int> new_start, new_size;
    new_start.reserve(p.cell_start.size());
    new_size.reserve(p.cell_size.size());
    for (int ci = 0; ci < p.num_cells(); ++ci) {
      int start = p.cell_start[ci], size = p.cell_size[ci];
      if (size == 1) {
        new_start.push_back(start);
        new_size.push_back(1);
        continue;
      }
      keyed.clear();
      bool uniform = true;
      for (int k = 0; k < size; ++k) {
        int v = p.verts[start + k];
        int c = count_into(g, v, W);
        if (k > 0 && c != keyed[0].first) uniform = false;
        keyed.emplace_back(c, v);
      }
      if (uniform) {
        new_start.push_back(start);
        new_size.push_back(size);
        continue;
      }
      std::sort(keyed.begin(), keyed.end());
      int runstart = 0;
      for (int k = 0; k < size; ++k) {
        p.verts[start + k] = keyed[k].second;
        if (k + 1 == size || keyed[k + 1].first != keyed[k].first) {
          new_start.push_back(start + runstart);
          new_size.push_back(k - runstart + 1);
          std::vector<uint64_t> sub(g.words, 0);
          for (int j = runstart; j <= k; ++j) {
            int v = keyed[j].second;
            sub[v >> 6] |= uint64_t(1) << (v & 63);
          }
          work.push_back(std::move(sub));
          runstart = k + 1;
        }
      }
    }
    p.cell_start = std::move(new_start);
    p.cell_size = std::move(new_size);
  }
  for (int ci = 0; ci < p.num_cells(); ++ci)
    for (int k = 0; k < p.cell_size[ci]; ++k) p.cell_of[p.verts[p.cell_start[ci] + k]] = ci;
  return p;
}

namespace {

// Splits v into its own singleton cell placed directly before the remainder
// of its former cell.
OrderedPartition individualize(const OrderedPartition& p, int v) {
  OrderedPartition q;
  q.n = p.n;
  q.cell_of.assign(p.n, -1);
  for (int ci = 0; ci < p.num_cells(); ++ci) {
    if (p.cell_of[v] != ci) {
      q.cell_start.push_back(static_cast<int>(q.verts.size()));
      q.cell_size.push_back(p.cell_size[ci]);
      for (int k = 0; k < p.cell_size[ci]; ++k) q.verts.push_back(p.verts[p.cell_start[ci] + k]);
      continue;
    }
    q.cell_start.push_back(static_cast<int>(q.verts.size()));
    q.cell_size.push_back(1);
    q.verts.push_back(v);
    if (p.cell_size[ci] > 1) {
      q.cell_start.push_back(static_cast<int>(q.verts.size()));
      q.cell_size.push_back(p.cell_size[ci] - 1);
      for (int k = 0; k < p.cell_size[ci]; ++k) {
        int u = p.verts[p.cell_start[ci] + k];
        if (u != v) q.verts.push_back(u);
      }
    }
  }
  for (int ci = 0; ci < q.num_cells(); ++ci)
    for (int k = 0; k < q.cell_size[ci]; ++k) q.cell_of[q.verts[q.cell_start[ci] + k]] = ci;
  return q;
}

// First smallest non-singleton cell, or -1 when discrete.
int target_cell(const OrderedPartition& p) {
  int best = -1, best_size = 0;
  for (int ci = 0; ci < p.num_cells(); ++ci) {
    int size = p.cell_size[ci];
    if (size > 1 && (best < 0 || size < best_size)) {
      best = ci;
      best_size = size;
    }
  }
  return best;
}

bool same_cell_shape(const OrderedPartition& a, const OrderedPartition& b) {
  return a.cell_size == b.cell_size;
}

struct SearchContext {
  const Graph& g1;
  const Graph& g2;
  long long budget;

  void tick() {
    if (--budget < 0) throw ResourceLimit("automorphism search: node budget exhausted");
  }
};

// Lockstep isomorphism search: the left branch is pinned to the minimum
// vertex of its target cell, the right branch backtracks over its cell.
// Complete because any isomorphism must send the pinned vertex somewhere in
// the matching right cell.
bool iso_search(SearchContext& ctx, const OrderedPartition& p1, const OrderedPartition& p2,
                Perm& out) {
  ctx.tick();
  if (!same_cell_shape(p1, p2)) return false;
  int tc = target_cell(p1);
  if (tc < 0) {
    for (int i = 0; i < p1.n; ++i) out[p1.verts[i]] = p2.verts[i];
    for (int v = 0; v < p1.n; ++v) {
      const uint64_t* r = ctx.g1.row(v);
      for (int w = 0; w < ctx.g1.words; ++w) {
        uint64_t bits = r[w];
        while (bits) {
          int u = w * 64 + __builtin_ctzll(bits);
          bits &= bits - 1;
          if (!ctx.g2.has(out[v], out[u])) return false;
        }
      }
    }
    return true;
  }
  int v = p1.n;
  for (int k = 0; k < p1.cell_size[tc]; ++k) v = std::min(v, p1.verts[p1.cell_start[tc] + k]);
  OrderedPartition left = refine(ctx.g1, individualize(p1, v));
  std::vector<int> rights = p2.cell(tc);
  std::sort(rights.begin(), rights.end());
  for (int u : rights) {
    OrderedPartition right = refine(ctx.g2, individualize(p2, u));
    if (iso_search(ctx, left, right, out)) return true;
  }
  return false;
}

struct AutResult {
  std::vector<Perm> gens;
  u128 order = 1;
  std::vector<int> base;
};

// Orbit of v under the group generated by gens; forward closure suffices
// because every generator has finite order.
std::vector<bool> orbit_flags(int n, int v, const std::vector<Perm>& gens) {
  std::vector<bool> in(n, false);
  std::vector<int> stack{v};
  in[v] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const Perm& g : gens)
      if (!in[g[x]]) {
        in[g[x]] = true;
        stack.push_back(g[x]);
      }
  }
  return in;
}

AutResult aut_search(SearchContext& ctx, const OrderedPartition& p) {
  ctx.tick();
  int tc = target_cell(p);
  if (tc < 0) return {};
  std::vector<int> cell = p.cell(tc);
  std::sort(cell.begin(), cell.end());
  int v = cell[0];
  OrderedPartition pv = refine(ctx.g1, individualize(p, v));
  AutResult sub = aut_search(ctx, pv);
  AutResult res;
  res.gens = sub.gens;
  res.base.push_back(v);
  res.base.insert(res.base.end(), sub.base.begin(), sub.base.end());
  std::vector<bool> orb = orbit_flags(p.n, v, res.gens);
  for (int u : cell) {
    if (orb[u]) continue;
    Perm map(p.n);
    OrderedPartition pu = refine(ctx.g1, individualize(p, u));
    if (iso_search(ctx, pv, pu, map)) {
      res.gens.push_back(std::move(map));
      orb = orbit_flags(p.n, v, res.gens);
    }
  }
  u128 orbit_size = 0;
  for (bool b : orb) orbit_size += b ? 1 : 0;
  res.order = checked_mul_u128(sub.order, orbit_size);
  return res;
}

}  // namespace

PermGroupDescriptor automorphism_group(const Graph& g, const OrderedPartition& initial,
                                       long long budget) {
  SearchContext ctx{g, g, resolve_budget(budget)};
  OrderedPartition p = refine(g, initial);
  AutResult res = aut_search(ctx, p);
  PermGroupDescriptor d = make_descriptor(g.n, std::move(res.gens), res.base);
  if (d.order != res.order)
    throw HgrError("automorphism engine: search order " + u128_str(res.order) +
                   " disagrees with chain order " + u128_str(d.order));
  return d;
}

std::optional<Perm> find_graph_isomorphism(const Graph& g1, const OrderedPartition& p1,
                                           const Graph& g2, const OrderedPartition& p2,
                                           long long budget) {
  if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
  SearchContext ctx{g1, g2, resolve_budget(budget)};
  OrderedPartition r1 = refine(g1, p1);
  OrderedPartition r2 = refine(g2, p2);
  Perm map(g1.n);
  if (iso_search(ctx, r1, r2, map)) return map;
  return std::nullopt;
}

namespace {

struct NaiveContext {
  const Graph& g;
  const std::vector<int>& color;
  long long budget;
  std::vector<int> img;   // partial map, -1 unassigned
  std::vector<bool> used;

  void tick() {
    if (--budget < 0) throw ResourceLimit("naive automorphism search: budget exhausted");
  }

  bool consistent(int v, int u) {
    if (color[u] != color[v] || used[u]) return false;
    for (int a = 0; a < g.n; ++a) {
      if (img[a] < 0) continue;
      if (g.has(v, a) != g.has(u, img[a])) return false;
    }
    return true;
  }

  // Extends the current partial map to a full automorphism, assigning
  // vertices in index order.
  bool extend() {
    tick();
    int v = -1;
    for (int i = 0; i < g.n; ++i)
      if (img[i] < 0) {
        v = i;
        break;
      }
    if (v < 0) return true;
    for (int u = 0; u < g.n; ++u) {
      if (!consistent(v, u)) continue;
      img[v] = u;
      used[u] = true;
      if (extend()) {
        img[v] = -1;
        used[u] = false;
        return true;
      }
      img[v] = -1;
      used[u] = false;
    }
    return false;
  }

  // Product of orbit sizes over the point-stabilizer tower 0, 1, ..., n-1.
  u128 tower(int v) {
    while (v < g.n && img[v] >= 0) ++v;
    if (v >= g.n) return 1;
    u128 count = 0;
    for (int u = 0; u < g.n; ++u) {
      if (!consistent(v, u)) continue;
      img[v] = u;
      used[u] = true;
      bool ok = u == v || extend();
      img[v] = -1;
      used[u] = false;
      if (ok) ++count;
    }
    img[v] = v;
    used[v] = true;
    u128 rest = tower(v + 1);
    img[v] = -1;
    used[v] = false;
    return checked_mul_u128(count, rest);
  }
};

}  // namespace

u128 naive_automorphism_order(const Graph& g, const OrderedPartition& initial, long long budget) {
  NaiveContext ctx{g, initial.cell_of, resolve_budget(budget), std::vector<int>(g.n, -1),
                   std::vector<bool>(g.n, false)};
  return ctx.tower(0);
}

}  // namespace hgr
