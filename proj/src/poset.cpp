#include "haarrep/poset.hpp"

#include <algorithm>

#include "haarrep/graph.hpp"
#include "haarrep/perm.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hgr {

namespace {

int down_degree(const Poset& P, int i) {
  int c = 0;
  for (int w = 0; w < P.words; ++w)
    c += __builtin_popcountll(P.down[static_cast<size_t>(i) * P.words + w]);
  return c;
}

// Bottoms are the minimal elements (down-set = self); the rest must cover
// only bottoms for the two-layer routines to apply.
struct Layers {
  std::vector<int> bottom;
  std::vector<int> top;
};

Layers split_layers(const Poset& P) {
  Layers L;
  for (int i = 0; i < P.elements; ++i)
    (down_degree(P, i) == 1 ? L.bottom : L.top).push_back(i);
  for (int t : L.top) {
    for (int a = 0; a < P.elements; ++a) {
      if (a == t || !P.leq(a, t)) continue;
      if (down_degree(P, a) != 1) throw HgrError("poset is not two-layered");
    }
  }
  return L;
}

}  // namespace

Poset haar_to_poset(const HaarGraph& H) {
  int n = H.n();
  Poset P;
  P.elements = 2 * n;
  P.words = (P.elements + 63) / 64;
  P.down.assign(static_cast<size_t>(P.elements) * P.words, 0);
  auto set = [&](int row, int col) {
    P.down[static_cast<size_t>(row) * P.words + (col >> 6)] |= 1ull << (col & 63);
  };
  for (int i = 0; i < P.elements; ++i) set(i, i);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x)
      if (H.graph.has(x, n + y)) set(n + y, x);
  return P;
}

void validate_poset(const Poset& P) {
  for (int a = 0; a < P.elements; ++a)
    if (!P.leq(a, a)) throw HgrError("poset is not reflexive");
  for (int a = 0; a < P.elements; ++a)
    for (int b = 0; b < P.elements; ++b) {
      if (a != b && P.leq(a, b) && P.leq(b, a)) throw HgrError("poset is not antisymmetric");
      if (!P.leq(a, b)) continue;
      // down(a) must be contained in down(b)
      for (int w = 0; w < P.words; ++w) {
        uint64_t da = P.down[static_cast<size_t>(a) * P.words + w];
        uint64_t db = P.down[static_cast<size_t>(b) * P.words + w];
        if (da & ~db) throw HgrError("poset is not transitive");
      }
    }
}

PosetReport poset_representation_report(const Poset& P, long long budget) {
  validate_poset(P);
  Layers L = split_layers(P);
  if (L.top.empty()) throw HgrError("degenerate poset: no strict relation, layers indistinct");
  int deg = down_degree(P, L.top[0]);
  for (int t : L.top)
    if (down_degree(P, t) != deg)
      throw HgrError("top layer has nonuniform degrees; layer coloring unsound");

  Graph g = Graph::empty(P.elements);
  for (int t : L.top)
    for (int a = 0; a < P.elements; ++a)
      if (a != t && P.leq(a, t)) g.add_edge(a, t);
  OrderedPartition part = OrderedPartition::from_cells(P.elements, {L.bottom, L.top});
  PermGroupDescriptor A = automorphism_group(g, part, budget);

  PosetReport rep;
  rep.aut_order = A.order;
  rep.semiregular = true;
  std::vector<std::vector<int>> orbits = perm_orbits(P.elements, A.generators);
  rep.orbit_count = static_cast<int>(orbits.size());
  for (const auto& orb : orbits)
    if (static_cast<u128>(orb.size()) != A.order) rep.semiregular = false;
  return rep;
}

u128 count_ideals(const Poset& P) {
  Layers L = split_layers(P);
  int t = static_cast<int>(L.top.size());
  int nb = static_cast<int>(L.bottom.size());
  if (t > 24) throw HgrError("count_ideals: top layer above 24 elements");
  std::vector<int> bottom_pos(P.elements, -1);
  for (int i = 0; i < nb; ++i) bottom_pos[L.bottom[i]] = i;
  int wb = (std::max(nb, 1) + 63) / 64;
  // Down-sets of the top elements repacked over bottom indices.
  std::vector<uint64_t> mask(static_cast<size_t>(std::max(t, 1)) * wb, 0);
  for (int i = 0; i < t; ++i)
    for (int a = 0; a < P.elements; ++a) {
      if (a == L.top[i] || !P.leq(a, L.top[i])) continue;
      int p = bottom_pos[a];
      mask[static_cast<size_t>(i) * wb + (p >> 6)] |= 1ull << (p & 63);
    }

  int ta = t / 2, tb = t - ta;
  auto build_half = [&](int offset, int count) {
    std::vector<uint64_t> half(static_cast<size_t>(1u << count) * wb, 0);
    for (uint32_t m = 1; m < (1u << count); ++m) {
      uint32_t low = m & (m - 1);
      int bit = __builtin_ctz(m);
      for (int w = 0; w < wb; ++w)
        half[static_cast<size_t>(m) * wb + w] =
            half[static_cast<size_t>(low) * wb + w] |
            mask[static_cast<size_t>(offset + bit) * wb + w];
    }
    return half;
  };
  std::vector<uint64_t> ha = build_half(0, ta);
  std::vector<uint64_t> hb = build_half(ta, tb);

  u128 total = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    u128 local = 0;
#pragma omp for schedule(static)
    for (int a = 0; a < (1 << ta); ++a) {
      for (int b = 0; b < (1 << tb); ++b) {
        int covered = 0;
        for (int w = 0; w < wb; ++w)
          covered += __builtin_popcountll(ha[static_cast<size_t>(a) * wb + w] |
                                          hb[static_cast<size_t>(b) * wb + w]);
        local += u128{1} << (nb - covered);
      }
    }
#pragma omp critical
    total += local;
  }
#else
  for (int a = 0; a < (1 << ta); ++a)
    for (int b = 0; b < (1 << tb); ++b) {
      int covered = 0;
      for (int w = 0; w < wb; ++w)
        covered += __builtin_popcountll(ha[static_cast<size_t>(a) * wb + w] |
                                        hb[static_cast<size_t>(b) * wb + w]);
      total += u128{1} << (nb - covered);
    }
#endif
  return total;
}

u128 count_ideals_bruteforce(const Poset& P) {
  if (P.elements > 16) throw HgrError("count_ideals_bruteforce: above 16 elements");
  int e = P.elements;
  std::vector<uint32_t> down(e, 0);
  for (int i = 0; i < e; ++i)
    for (int a = 0; a < e; ++a)
      if (P.leq(a, i)) down[i] |= 1u << a;
  u128 total = 0;
  for (uint32_t I = 0; I < (1u << e); ++I) {
    bool closed = true;
    for (int i = 0; i < e && closed; ++i)
      if ((I >> i & 1u) && (down[i] & ~I)) closed = false;
    if (closed) ++total;
  }
  return total;
}

namespace {

struct PosetAutSearch {
  const Poset* P;
  int e;
  std::vector<int> img;
  std::vector<bool> used;
  u128 count = 0;

  bool compatible(int v, int w) const {
    // Relations against all previously assigned vertices must transfer.
    for (int u = 0; u < v; ++u) {
      if (P->leq(u, v) != P->leq(img[u], w)) return false;
      if (P->leq(v, u) != P->leq(w, img[u])) return false;
    }
    return P->leq(v, v) == P->leq(w, w);
  }

  void extend(int v) {
    if (v == e) {
      ++count;
      return;
    }
    for (int w = 0; w < e; ++w) {
      if (used[w] || !compatible(v, w)) continue;
      used[w] = true;
      img[v] = w;
      extend(v + 1);
      used[w] = false;
    }
  }
};

}  // namespace

u128 poset_automorphism_order_bruteforce(const Poset& P) {
  if (P.elements > 12) throw HgrError("poset_automorphism_order_bruteforce: above 12 elements");
  PosetAutSearch s{&P, P.elements, std::vector<int>(P.elements, -1),
                   std::vector<bool>(P.elements, false), 0};
  s.extend(0);
  return s.count;
}

LatticeBoundReport lattice_bound_check(const FiniteGroup& G, const EltSet& S) {
  if (G.n > 16) throw HgrError("lattice_bound_check: order above 16");
  if (S.n != G.n) throw HgrError("lattice_bound_check: set sized for a different group");
  int n = G.n;
  EltSet T = EltSet::full(n);
  for (int x : S.elements()) T.remove(x);
  HaarGraph H = build_haar(G, T);
  Poset P = haar_to_poset(H);

  LatticeBoundReport rep;
  rep.ideal_count = count_ideals(P);
  rep.bound = u128{1} << (3 * n / 2);
  rep.degenerate = T.empty();
  rep.window = S.count() >= 4 && 2 * S.count() <= n - 6;
  rep.premise = !rep.degenerate && 2 * T.count() >= n + 6;
  rep.within = rep.degenerate || rep.ideal_count <= rep.bound;
  if (rep.premise) {
    u128 p2n = u128{1} << n;
    rep.footnote_bound = 2 + (p2n - 1) + ((p2n - 1) << (n / 2 - 3));
    rep.footnote_within = rep.ideal_count <= rep.footnote_bound;
  }
  return rep;
}

}  // namespace hgr
