// Connection-set constructions and the inductive certificate driver.

#include "haarrep/construct.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "haarrep/classify.hpp"
#include "haarrep/haar.hpp"
#include "haarrep/named.hpp"

namespace hgr {

bool window_holds(int n, int k) { return k >= 4 && 2 * k <= n - 6; }

namespace {

constexpr int kRandomizedSamples = 1000000;

bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int lowest_outside(const EltSet& members, int n) {
  for (int x = 0; x < n; ++x)
    if (!members.test(x)) return x;
  throw HgrError("no element outside the subgroup");
}

EltSet base_power_set(const FiniteGroup& G, int s) {
  EltSet S(G.n);
  for (int i = 0; i <= 6; ++i) S.add(G.pow(s, i));
  S.add(G.pow(s, 8));
  return S;
}

}  // namespace

EltSet cyclic_connection(const FiniteGroup& G, int s) {
  if (s < 0 || s >= G.n) throw HgrError("cyclic_connection: element out of range");
  if (element_order(G, s) < 12) throw HgrError("cyclic_connection: element order below 12");
  EltSet S = base_power_set(G, s);
  if (S.count() != 8) throw HgrError("cyclic_connection: power collision");
  return S;
}

EltSet twogen_connection(const FiniteGroup& G, int s, int t, int variant) {
  if (variant != 1 && variant != 2) throw HgrError("twogen_connection: variant must be 1 or 2");
  if (element_order(G, s) < 12) throw HgrError("twogen_connection: element order below 12");
  if (closure_set(G, {s, t}).count() != G.n)
    throw HgrError("twogen_connection: the pair generates a proper subgroup");
  int st = G.conj(s, t);
  if (st == s) throw HgrError("twogen_connection: t centralizes s");
  if (variant == 1 && st == G.inv(s))
    throw HgrError("twogen_connection: conjugate is the inverse; variant 1 inapplicable");
  if (variant == 2 && !is_dihedral(G))
    throw HgrError("twogen_connection: variant 2 applies to dihedral groups only");
  EltSet S = base_power_set(G, s);
  S.add(t);
  S.add(G.mul(t, s));
  int expected = 10;
  if (variant == 2) {
    S.add(G.mul(t, G.pow(s, 3)));
    expected = 11;
  }
  if (S.count() != expected)
    throw HgrError("twogen_connection: set has " + std::to_string(S.count()) +
                   " elements, expected " + std::to_string(expected));
  return S;
}

EltSet lift_cyclic_quotient(const FiniteGroup& G, const Subgroup& N, const EltSet& S_N, int r,
                            int variant) {
  if (variant != 1 && variant != 2)
    throw HgrError("lift_cyclic_quotient: variant must be 1 or 2");
  if (N.members.n != G.n || S_N.n != G.n)
    throw HgrError("lift_cyclic_quotient: sets sized for a different group");
  if (!is_normal(G, N.members)) throw HgrError("lift_cyclic_quotient: subgroup is not normal");
  int m = N.order();
  if (!window_holds(m, S_N.count()))
    throw HgrError("lift_cyclic_quotient: S_N violates the size window");
  for (int x : S_N.elements())
    if (!N.members.test(x)) throw HgrError("lift_cyclic_quotient: S_N reaches outside N");
  if (N.members.test(r)) throw HgrError("lift_cyclic_quotient: r lies inside N");
  std::vector<int> gens = N.members.elements();
  gens.push_back(r);
  if (closure_set(G, gens).count() != G.n)
    throw HgrError("lift_cyclic_quotient: N and r generate a proper subgroup");
  int index = G.n / m;
  if (variant == 1 && index < 3)
    throw HgrError("lift_cyclic_quotient: variant 1 needs index at least 3");
  if (variant == 2 && index != 2) throw HgrError("lift_cyclic_quotient: variant 2 needs index 2");
  EltSet S1 = S_N;
  for (int x : N.members.elements()) {
    int y = G.mul(x, r);
    if (y != r) S1.add(y);
  }
  if (S1.count() != S_N.count() + m - 1)
    throw HgrError("lift_cyclic_quotient: size formula violated");
  if (variant == 1) return S1;
  EltSet S2 = EltSet::full(G.n);
  for (int x : S1.elements()) S2.remove(x);
  if (S2.count() != G.n - S_N.count() - m + 1)
    throw HgrError("lift_cyclic_quotient: complement size formula violated");
  return S2;
}

EltSet lift_simple_quotient(const FiniteGroup& G, const Subgroup& N, const EltSet& S_N, int r1,
                            int r2, int n1) {
  if (N.members.n != G.n || S_N.n != G.n)
    throw HgrError("lift_simple_quotient: sets sized for a different group");
  if (!is_normal(G, N.members)) throw HgrError("lift_simple_quotient: subgroup is not normal");
  int m = N.order();
  if (!window_holds(m, S_N.count()))
    throw HgrError("lift_simple_quotient: S_N violates the size window");
  for (int x : S_N.elements())
    if (!N.members.test(x)) throw HgrError("lift_simple_quotient: S_N reaches outside N");
  if (!N.members.test(n1) || n1 == 0)
    throw HgrError("lift_simple_quotient: n1 must be a nontrivial element of N");
  QuotientGroup Q = quotient_group(G, N.members);
  if (is_abelian(Q.group) || !is_simple(Q.group))
    throw HgrError("lift_simple_quotient: quotient is not nonabelian simple");
  int q2 = Q.projection(r2);
  if (element_order(Q.group, q2) < 5)
    throw HgrError("lift_simple_quotient: image of r2 has order below 5");
  std::vector<int> gens = N.members.elements();
  gens.push_back(r1);
  gens.push_back(r2);
  if (closure_set(G, gens).count() != G.n)
    throw HgrError("lift_simple_quotient: N, r1, r2 generate a proper subgroup");
  std::array<int, 5> cosets{0, Q.group.inv(q2), q2, Q.projection(r1),
                            Q.group.mul(q2, Q.projection(r1))};
  for (size_t i = 0; i < cosets.size(); ++i)
    for (size_t j = i + 1; j < cosets.size(); ++j)
      if (cosets[i] == cosets[j]) throw HgrError("lift_simple_quotient: coset collision");
  EltSet S = S_N;
  int r2i = G.inv(r2);
  for (int x : N.members.elements()) {
    int y = G.mul(x, r2i);
    if (y != r2i) S.add(y);
  }
  int n1r2 = G.mul(n1, r2);
  for (int x : N.members.elements()) {
    int y = G.mul(x, r2);
    if (y != r2 && y != n1r2) S.add(y);
  }
  S.add(r1);
  S.add(G.mul(r2, r1));
  if (S.count() != S_N.count() + 2 * m - 1)
    throw HgrError("lift_simple_quotient: size formula violated");
  return S;
}

MouraData moura_data(const FiniteGroup& G, const Subgroup& N, int r) {
  if (is_abelian(G)) throw HgrError("moura_data: ambient group is abelian");
  if (N.members.n != G.n) throw HgrError("moura_data: subgroup sized for a different group");
  if (2 * N.members.count() != G.n) throw HgrError("moura_data: subgroup is not of index 2");
  if (!is_normal(G, N.members)) throw HgrError("moura_data: subgroup is not normal");
  if (N.members.test(r)) throw HgrError("moura_data: r lies inside N");
  SubgroupGroup sub = sub_group(G, N.members, G.name + ".N");
  if (!is_abelian(sub.group)) throw HgrError("moura_data: subgroup is not abelian");

  std::vector<EltSet> subs = all_subgroups(sub.group);
  std::sort(subs.begin(), subs.end(), [](const EltSet& a, const EltSet& b) {
    if (a.count() != b.count()) return a.count() > b.count();
    return a.w < b.w;
  });
  for (const EltSet& N1 : subs) {
    if (N1.count() == sub.group.n) continue;
    std::vector<int> base = N1.elements();
    for (int n2 = 0; n2 < sub.group.n; ++n2) {
      if (N1.test(n2)) continue;
      std::vector<int> gens = base;
      gens.push_back(n2);
      if (closure_set(sub.group, gens).count() != sub.group.n) continue;
      int n2g = sub.to_parent[n2];
      int c = G.mul(G.mul(G.mul(r, n2g), G.inv(r)), G.inv(n2g));
      if (c == 0) continue;
      for (int n1 : base) {
        if (n1 == 0) continue;
        int n1g = sub.to_parent[n1];
        if (c == n1g) continue;
        EltSet N1g(G.n);
        for (int x : base) N1g.add(sub.to_parent[x]);
        return MouraData{Subgroup{&G, N1g}, n1g, n2g, ""};
      }
    }
  }
  if (G.n == 8) return MouraData{Subgroup{&G, EltSet(G.n)}, -1, -1, "order-8-dihedral-or-quaternion"};
  if (is_dihedral(G) && is_prime_int(G.n / 2))
    return MouraData{Subgroup{&G, EltSet(G.n)}, -1, -1, "dihedral-2p"};
  throw HgrError("moura_data: search exhausted outside the exceptional cases");
}

EltSet abelian_index2_connection(const FiniteGroup& G, const Subgroup& N, const Subgroup& N1,
                                 int n1, int n2, int r, const EltSet& S_N1) {
  if (is_abelian(G)) throw HgrError("abelian_index2_connection: ambient group is abelian");
  if (N.members.n != G.n || N1.members.n != G.n || S_N1.n != G.n)
    throw HgrError("abelian_index2_connection: sets sized for a different group");
  if (2 * N.members.count() != G.n)
    throw HgrError("abelian_index2_connection: N is not of index 2");
  if (!is_normal(G, N.members)) throw HgrError("abelian_index2_connection: N is not normal");
  for (int x : N.members.elements())
    for (int y : N.members.elements())
      if (G.mul(x, y) != G.mul(y, x))
        throw HgrError("abelian_index2_connection: N is not abelian");
  if (G.n == 8)
    throw HgrError("abelian_index2_connection: order-8 dihedral and quaternion groups are excluded");
  if (is_dihedral(G) && is_prime_int(G.n / 2))
    throw HgrError("abelian_index2_connection: dihedral groups of order 2p are excluded");
  int m1 = N1.members.count();
  if (m1 >= N.members.count())
    throw HgrError("abelian_index2_connection: N1 must be proper in N");
  for (int x : N1.members.elements())
    if (!N.members.test(x)) throw HgrError("abelian_index2_connection: N1 reaches outside N");
  if (n1 == 0 || !N1.members.test(n1))
    throw HgrError("abelian_index2_connection: n1 must be a nontrivial element of N1");
  if (N1.members.test(n2) || !N.members.test(n2))
    throw HgrError("abelian_index2_connection: n2 must lie in N outside N1");
  std::vector<int> gens = N1.members.elements();
  gens.push_back(n2);
  if (!(closure_set(G, gens) == N.members))
    throw HgrError("abelian_index2_connection: N1 and n2 do not generate N");
  if (N.members.test(r)) throw HgrError("abelian_index2_connection: r lies inside N");
  int c = G.mul(G.mul(G.mul(r, n2), G.inv(r)), G.inv(n2));
  if (c == 0 || c == n1)
    throw HgrError("abelian_index2_connection: commutator condition fails");
  if (!window_holds(m1, S_N1.count()))
    throw HgrError("abelian_index2_connection: S_N1 violates the size window");
  for (int x : S_N1.elements())
    if (!N1.members.test(x))
      throw HgrError("abelian_index2_connection: S_N1 reaches outside N1");
  EltSet S = S_N1;
  for (int u : N1.members.elements()) {
    int y = G.mul(n2, u);
    if (y != n2) S.add(y);
  }
  int n2r = G.mul(n2, r);
  S.add(r);
  S.add(n2r);
  S.add(G.mul(n1, n2r));
  if (S.count() != S_N1.count() + m1 + 2)
    throw HgrError("abelian_index2_connection: size formula violated");
  return S;
}

std::optional<GeneratingPair> find_generating_pair_high_order(const FiniteGroup& G,
                                                              int min_order) {
  std::vector<std::pair<int, int>> cands;  // (order, element), order >= min
  for (int x = 0; x < G.n; ++x) {
    int o = element_order(G, x);
    if (o >= min_order) cands.push_back({o, x});
  }
  std::sort(cands.begin(), cands.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::optional<GeneratingPair> inverted;
  for (const auto& [o, s] : cands) {
    int sinv = G.inv(s);
    for (int t = 0; t < G.n; ++t) {
      int st = G.conj(s, t);
      if (st == s) continue;
      if (st == sinv && inverted) continue;
      if (closure_set(G, {s, t}).count() != G.n) continue;
      if (st != sinv) return GeneratingPair{s, t, false};
      inverted = GeneratingPair{s, t, true};
    }
  }
  return inverted;
}

namespace {

HgrCertificate verified_cert(const FiniteGroup& G, const EltSet& S, const std::string& method,
                             long long budget) {
  HgrCheck c = is_hgr(G, S, budget);
  HgrCertificate cert;
  cert.group = G.name;
  cert.order = G.n;
  cert.conn = S;
  cert.aut_order = c.aut_order;
  cert.aut0_order = c.aut0_order;
  cert.is_hgr = c.is_hgr;
  cert.method = method;
  cert.window = window_holds(G.n, S.count());
  cert.verified = true;
  return cert;
}

HgrCertificate negative_cert(const FiniteGroup& G, const std::string& method) {
  HgrCertificate cert;
  cert.group = G.name;
  cert.order = G.n;
  cert.conn = EltSet(G.n);
  cert.method = method;
  cert.verified = true;
  return cert;
}

enum class Goal { representation, windowed_rigid };

bool goal_met(const HgrCertificate& c, const FiniteGroup& G, Goal goal) {
  u128 n = static_cast<u128>(G.n);
  if (goal == Goal::windowed_rigid) return c.window && c.aut0_order == n;
  if (is_abelian(G)) return c.aut0_order == n;
  return c.aut_order == n;
}

struct ScanHits {
  std::optional<EltSet> hgr;
  std::optional<EltSet> rigid;
  std::optional<EltSet> windowed_rigid;
};

// Walks every subset class ascending by representative; disconnected graphs
// and graphs with disconnected bipartite complement cannot carry either
// verdict and are skipped without an engine run.
ScanHits exhaustive_scan(const FiniteGroup& G, long long budget, bool need_hgr, bool need_rigid,
                         bool need_windowed) {
  ScanHits h;
  u128 n = static_cast<u128>(G.n);
  for (const ConnectionClass& cl : enumerate_connection_classes(G)) {
    bool done = (!need_hgr || h.hgr) && (!need_rigid || h.rigid) &&
                (!need_windowed || h.windowed_rigid);
    if (done) break;
    EltSet S(G.n);
    for (int x = 0; x < G.n; ++x)
      if (cl.rep >> x & 1u) S.add(x);
    if (!is_connected_connection(G, S)) continue;
    EltSet comp = EltSet::full(G.n);
    for (int x : S.elements()) comp.remove(x);
    if (!is_connected_connection(G, comp)) continue;
    HgrCheck c = is_hgr(G, S, budget);
    if (need_hgr && !h.hgr && c.aut_order == n) h.hgr = S;
    if (c.aut0_order == n) {
      if (need_rigid && !h.rigid) h.rigid = S;
      if (need_windowed && !h.windowed_rigid && window_holds(G.n, S.count()))
        h.windowed_rigid = S;
    }
  }
  return h;
}

enum class Target { full_aut, part_rigid };

std::optional<EltSet> randomized_search(const FiniteGroup& G, Target target, uint64_t seed,
                                        long long budget) {
  int n = G.n;
  int lo = 4, hi = (n - 6) / 2;
  if (hi < lo) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  for (int it = 0; it < kRandomizedSamples; ++it) {
    int k = lo + it % (hi - lo + 1);
    for (int i = 0; i < k; ++i) {
      std::uniform_int_distribution<int> d(i, n - 1);
      std::swap(idx[i], idx[d(rng)]);
    }
    EltSet S(n);
    for (int i = 0; i < k; ++i) S.add(idx[i]);
    if (!is_connected_connection(G, S)) continue;
    EltSet comp = EltSet::full(n);
    for (int x : S.elements()) comp.remove(x);
    if (!is_connected_connection(G, comp)) continue;
    try {
      HgrCheck c = is_hgr(G, S, budget);
      u128 want = static_cast<u128>(n);
      if (target == Target::full_aut ? c.aut_order == want : c.aut0_order == want) return S;
    } catch (const ResourceLimit&) {
      continue;
    }
  }
  return std::nullopt;
}

HgrCertificate drive(const FiniteGroup& G, Goal goal, long long budget, uint64_t seed, int depth);

// Recursive windowed rigid set for the subgroup on `members`, mapped back
// into G coordinates. Empty on any failure.
std::optional<EltSet> windowed_set_for(const FiniteGroup& G, const EltSet& members,
                                       long long budget, uint64_t seed, int depth) {
  SubgroupGroup sub = sub_group(G, members, G.name + ".N" + std::to_string(members.count()));
  HgrCertificate inner;
  try {
    inner = drive(sub.group, Goal::windowed_rigid, budget, seed, depth + 1);
  } catch (const HgrError&) {
    return std::nullopt;
  } catch (const ResourceLimit&) {
    return std::nullopt;
  }
  EltSet S(G.n);
  for (int x : inner.conn.elements()) S.add(sub.to_parent[x]);
  return S;
}

HgrCertificate drive(const FiniteGroup& G, Goal goal, long long budget, uint64_t seed,
                     int depth) {
  if (depth > 8) throw HgrError("construction recursion exceeded depth 8");
  int n = G.n;
  u128 un = static_cast<u128>(n);
  bool abelian = is_abelian(G);

  if (goal == Goal::representation) {
    if (n <= 2) return negative_cert(G, "trivial");
    if (n <= 13) {
      ScanHits h = exhaustive_scan(G, budget, !abelian, abelian, false);
      if (!abelian && h.hgr) return verified_cert(G, *h.hgr, "search", budget);
      if (abelian && h.rigid) return verified_cert(G, *h.rigid, "search", budget);
      return negative_cert(G, "exceptional");
    }
    for (const CatalogEntry& e : catalog()) {
      if (e.order != n || !e.t1) continue;
      if (is_isomorphic(G, make_named(e.spec))) return negative_cert(G, "exceptional");
    }
  } else {
    if (n < 14) throw HgrError("no windowed set exists below order 14");
    for (const CatalogEntry& e : catalog()) {
      if (e.order != n || !e.t2) continue;
      if (is_isomorphic(G, make_named(e.spec)))
        throw HgrError("exceptional group: no rigid bipartition set exists");
    }
  }

  if (is_cyclic(G) && n >= 22) {
    int s = -1;
    for (int x = 0; x < n && s < 0; ++x)
      if (element_order(G, x) == n) s = x;
    HgrCertificate cert = verified_cert(G, cyclic_connection(G, s), "cyclic", budget);
    if (cert.aut0_order != un || cert.aut_order != 2 * un)
      throw HgrError("cyclic construction failed verification");
    return cert;
  }

  if (abelian && !is_cyclic(G)) {
    std::vector<EltSet> maxes = maximal_subgroups(G);
    std::sort(maxes.begin(), maxes.end(), [](const EltSet& a, const EltSet& b) {
      if (a.count() != b.count()) return a.count() > b.count();
      return a.w < b.w;
    });
    for (const EltSet& members : maxes) {
      int m = members.count();
      if (m < 14) continue;
      std::optional<EltSet> S_N = windowed_set_for(G, members, budget, seed, depth);
      if (!S_N) continue;
      int r = lowest_outside(members, n);
      int variant = (n / m == 2) ? 2 : 1;
      Subgroup N{&G, members};
      EltSet S = lift_cyclic_quotient(G, N, *S_N, r, variant);
      HgrCertificate cert =
          verified_cert(G, S, variant == 1 ? "lift-cyclic-S1" : "lift-cyclic-S2", budget);
      if (goal_met(cert, G, goal)) return cert;
    }
  }

  if (!abelian) {
    std::optional<GeneratingPair> pair = find_generating_pair_high_order(G, 12);
    if (pair && (!pair->inverted || is_dihedral(G))) {
      int variant = pair->inverted ? 2 : 1;
      int size = variant == 1 ? 10 : 11;
      if (goal == Goal::representation || window_holds(n, size)) {
        EltSet S = twogen_connection(G, pair->s, pair->t, variant);
        HgrCertificate cert =
            verified_cert(G, S, variant == 1 ? "twogen-S1" : "twogen-S2", budget);
        if (goal == Goal::representation) {
          if (cert.aut_order != un)
            throw HgrError("two-generator construction failed verification");
          return cert;
        }
        if (goal_met(cert, G, goal)) return cert;
      }
    }

    std::vector<SimpleQuotient> sqs = normal_subgroups_with_simple_quotient(G);
    for (const SimpleQuotient& sq : sqs) {
      const EltSet& Nm = sq.kernel.members;
      if (Nm.count() < 14) continue;
      std::optional<EltSet> S_N = windowed_set_for(G, Nm, budget, seed, depth);
      if (!S_N) continue;
      Subgroup N{&G, Nm};
      if (is_cyclic(sq.quotient)) {
        int r = -1;
        for (int x = 0; x < n && r < 0; ++x)
          if (sq.projection(x) != 0) r = x;
        int p = sq.quotient.n;
        int variant = (p == 2) ? 2 : 1;
        EltSet S = lift_cyclic_quotient(G, N, *S_N, r, variant);
        HgrCertificate cert =
            verified_cert(G, S, variant == 1 ? "lift-cyclic-S1" : "lift-cyclic-S2", budget);
        if (goal_met(cert, G, goal)) return cert;
        bool swap_survived =
            goal == Goal::representation && cert.aut0_order == un && cert.aut_order == 2 * un;
        if (swap_survived && p == 2) {
          bool n_abelian = true;
          for (int x : Nm.elements()) {
            for (int y : Nm.elements())
              if (G.mul(x, y) != G.mul(y, x)) {
                n_abelian = false;
                break;
              }
            if (!n_abelian) break;
          }
          if (n_abelian) {
            MouraData md = moura_data(G, N, r);
            if (md.has_triple() && md.N1.members.count() >= 14) {
              std::optional<EltSet> S_N1 =
                  windowed_set_for(G, md.N1.members, budget, seed, depth);
              if (S_N1) {
                EltSet S2 =
                    abelian_index2_connection(G, N, md.N1, md.n1, md.n2, r, *S_N1);
                HgrCertificate c2 = verified_cert(G, S2, "abelian-index2", budget);
                if (goal_met(c2, G, goal)) return c2;
              }
            }
          }
        }
      } else if (is_simple(sq.quotient)) {
        const FiniteGroup& Q = sq.quotient;
        int r2 = -1;
        for (int x = 0; x < n && r2 < 0; ++x)
          if (element_order(Q, sq.projection(x)) >= 5) r2 = x;
        if (r2 < 0) continue;
        int q2 = sq.projection(r2);
        int q2i = Q.inv(q2);
        int r1 = -1;
        for (int x = 0; x < n && r1 < 0; ++x) {
          int q1 = sq.projection(x);
          std::array<int, 5> ids{0, q2i, q2, q1, Q.mul(q2, q1)};
          bool distinct = true;
          for (size_t i = 0; i < ids.size() && distinct; ++i)
            for (size_t j = i + 1; j < ids.size(); ++j)
              if (ids[i] == ids[j]) {
                distinct = false;
                break;
              }
          if (!distinct) continue;
          if (closure_set(Q, {q1, q2}).count() != Q.n) continue;
          r1 = x;
        }
        if (r1 < 0) continue;
        int n1 = -1;
        for (int x : Nm.elements())
          if (x != 0) {
            n1 = x;
            break;
          }
        if (n1 < 0) continue;
        EltSet S = lift_simple_quotient(G, N, *S_N, r1, r2, n1);
        HgrCertificate cert = verified_cert(G, S, "lift-simple", budget);
        if (goal_met(cert, G, goal)) return cert;
      }
    }
  }

  if (n <= 16) {
    if (goal == Goal::windowed_rigid) {
      ScanHits h = exhaustive_scan(G, budget, false, false, true);
      if (h.windowed_rigid) return verified_cert(G, *h.windowed_rigid, "search", budget);
      throw HgrError("exhaustive search found no windowed rigid set");
    }
    ScanHits h = exhaustive_scan(G, budget, !abelian, abelian, false);
    if (!abelian && h.hgr) return verified_cert(G, *h.hgr, "search", budget);
    if (abelian && h.rigid) return verified_cert(G, *h.rigid, "search", budget);
    return negative_cert(G, "exceptional");
  }

  Target target = (goal == Goal::representation && !abelian) ? Target::full_aut
                                                             : Target::part_rigid;
  std::optional<EltSet> S = randomized_search(G, target, seed, budget);
  if (S) {
    HgrCertificate cert = verified_cert(G, *S, "search", budget);
    if (goal_met(cert, G, goal)) return cert;
  }
  throw ResourceLimit("randomized search exhausted after " +
                      std::to_string(kRandomizedSamples) + " samples");
}

}  // namespace

HgrCertificate construct_hgr(const FiniteGroup& G, long long budget, uint64_t seed) {
  return drive(G, Goal::representation, budget, seed, 0);
}

HgrCertificate construct_windowed_rigid(const FiniteGroup& G, long long budget, uint64_t seed) {
  return drive(G, Goal::windowed_rigid, budget, seed, 0);
}

}  // namespace hgr
