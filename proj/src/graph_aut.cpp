// Automorphism-engine applications: part-preserving subgroups, point
// stabilizers, regular-subgroup search, and the Cayley decision ladder.

#include "haarrep/graph_aut.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace hgr {

PermGroupDescriptor haar_aut(const HaarGraph& H, long long budget) {
  return automorphism_group(H.graph, OrderedPartition::unit(H.graph.n), budget);
}

PermGroupDescriptor aut0(const HaarGraph& H, long long budget) {
  return automorphism_group(H.graph, haar_parts_partition(H.n()), budget);
}

PermGroupDescriptor point_stabilizer(const PermGroupDescriptor& P, int v) {
  if (v < 0 || v >= P.degree) throw HgrError("point_stabilizer: vertex out of range");
  StabChain chain = StabChain::build(P.degree, P.generators, {v});
  u128 orbit = chain.levels().empty() ? 1 : chain.levels()[0].orbit.size();
  PermGroupDescriptor d = make_descriptor(P.degree, chain.stabilizer_generators());
  if (checked_mul_u128(d.order, orbit) != P.order)
    throw HgrError("point_stabilizer: orbit-stabilizer mismatch");
  return d;
}

HgrCheck is_hgr(const FiniteGroup& G, const EltSet& S, long long budget) {
  HaarGraph H = build_haar(G, S);
  HgrCheck out;
  out.aut_order = haar_aut(H, budget).order;
  out.aut0_order = aut0(H, budget).order;
  out.is_hgr = out.aut_order == static_cast<u128>(G.n);
  return out;
}

namespace {

constexpr u128 kStabilizerMaterializeCap = 100000;

struct RegularSearch {
  int N;  // target order = degree
  long long budget;
  std::vector<Perm> stab0;          // stabilizer of vertex 0, materialized
  const StabChain* chain;

  void tick() {
    if (--budget < 0) throw ResourceLimit("regular-subgroup search: budget exhausted");
  }

  // Closure of elems; empty result signals overflow past N.
  std::vector<Perm> close(std::vector<Perm> elems) {
    std::set<Perm> seen(elems.begin(), elems.end());
    for (size_t i = 0; i < elems.size(); ++i) {
      tick();
      for (size_t j = 0; j < elems.size(); ++j) {
        for (const Perm& p : {perm_compose(elems[i], elems[j]), perm_compose(elems[j], elems[i])}) {
          if (seen.insert(p).second) {
            elems.push_back(p);
            if (static_cast<int>(elems.size()) > N) return {};
          }
        }
      }
    }
    return elems;
  }

  bool distinct_images(const std::vector<Perm>& elems) {
    std::set<int> img;
    for (const Perm& p : elems)
      if (!img.insert(p[0]).second) return false;
    return true;
  }

  std::optional<std::vector<Perm>> grow(std::vector<Perm> gens, const std::vector<Perm>& elems) {
    tick();
    if (static_cast<int>(elems.size()) == N) return gens;
    std::vector<bool> hit(N, false);
    for (const Perm& p : elems) hit[p[0]] = true;
    int v = 0;
    while (hit[v]) ++v;
    int pos = chain->levels()[0].orbit_pos[v];
    if (pos < 0) return std::nullopt;
    const Perm& uv = chain->levels()[0].transversal[pos];
    for (const Perm& s : stab0) {
      Perm cand = perm_compose(s, uv);
      std::vector<Perm> grown = elems;
      grown.push_back(cand);
      grown = close(std::move(grown));
      if (grown.empty()) continue;
      if (N % static_cast<int>(grown.size()) != 0) continue;
      if (!distinct_images(grown)) continue;
      std::vector<Perm> g2 = gens;
      g2.push_back(cand);
      if (auto r = grow(std::move(g2), grown)) return r;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<Perm>> find_regular_subgroup(const PermGroupDescriptor& P,
                                                       long long budget) {
  if (P.order < static_cast<u128>(P.degree)) return std::nullopt;
  if (P.order % P.degree != 0) return std::nullopt;
  StabChain chain = StabChain::build(P.degree, P.generators, {0});
  if (static_cast<int>(chain.levels()[0].orbit.size()) != P.degree)
    return std::nullopt;  // intransitive: no transitive subgroup exists
  u128 stab_size = P.order / P.degree;
  if (stab_size > kStabilizerMaterializeCap)
    throw ResourceLimit("regular-subgroup search: stabilizer of size " + u128_str(stab_size) +
                        " exceeds materialization cap");
  RegularSearch rs{P.degree, resolve_budget(budget),
                   StabChain::build(P.degree, chain.stabilizer_generators(), {})
                       .materialize(kStabilizerMaterializeCap),
                   &chain};
  return rs.grow({}, {perm_identity(P.degree)});
}

SwapDecomposition induced_group_automorphism(const HaarGraph& H, const Perm& phi) {
  const FiniteGroup& G = H.group;
  int n = G.n;
  if (static_cast<int>(phi.size()) != 2 * n)
    throw HgrError("induced_group_automorphism: permutation degree mismatch");
  if (!graph_connected(H.graph)) throw HgrError("induced_group_automorphism: graph disconnected");
  if (phi[0] != n) throw HgrError("induced_group_automorphism: phi must map (1,-1) to (1,1)");
  for (int v = 0; v < 2 * n; ++v) {
    const uint64_t* r = H.graph.row(v);
    for (int w = 0; w < H.graph.words; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int u = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (!H.graph.has(phi[v], phi[u]))
          throw HgrError("induced_group_automorphism: phi is not a graph automorphism");
      }
    }
  }
  GroupHom f;
  f.source = &H.group;
  f.target = &H.group;
  f.image.resize(n);
  for (int r = 0; r < n; ++r) {
    if (phi[r] < n) throw HgrError("induced_group_automorphism: phi does not swap the parts");
    f.image[r] = static_cast<uint16_t>(phi[r] - n);
  }
  if (!f.is_bijective() || !f.is_homomorphism())
    throw HgrError("induced_group_automorphism: induced map is not a group automorphism");
  std::vector<int> finv(n);
  for (int r = 0; r < n; ++r) finv[f.image[r]] = r;
  int x = phi[n];
  if (x >= n) throw HgrError("induced_group_automorphism: phi does not swap the parts");
  for (int r = 0; r < n; ++r)
    if (phi[n + r] != G.mul(finv[r], x))
      throw HgrError("induced_group_automorphism: phi is not of the translation-twisted shape");
  return {std::move(f), x};
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::unknown: return "unknown";
    case Verdict::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

std::vector<Perm> rho_generators(const FiniteGroup& G) {
  std::vector<Perm> gens;
  for (int g : generating_set(G)) gens.push_back(rho(G, g));
  if (gens.empty()) gens.push_back(perm_identity(2 * G.n));
  return gens;
}

// Verifies that perm preserves the edge set of H.
bool preserves_edges(const HaarGraph& H, const Perm& p) {
  for (int v = 0; v < H.graph.n; ++v) {
    const uint64_t* r = H.graph.row(v);
    for (int w = 0; w < H.graph.words; ++w) {
      uint64_t bits = r[w];
      while (bits) {
        int u = w * 64 + __builtin_ctzll(bits);
        bits &= bits - 1;
        if (!H.graph.has(p[v], p[u])) return false;
      }
    }
  }
  return true;
}

CayleyOutcome affine_swap_scan(const FiniteGroup& G, const HaarGraph& H) {
  CayleyOutcome out;
  std::vector<std::vector<uint16_t>> auts;
  try {
    auts = group_automorphisms(G);
  } catch (const HgrError&) {
    return out;  // too many group automorphisms; leave verdict unknown
  }
  int n = G.n;
  EltSet Sinv(n);
  for (int s : H.conn.elements()) Sinv.add(G.inv(s));
  for (const auto& alpha : auts) {
    EltSet T(n);
    for (int s : Sinv.elements()) T.add(alpha[s]);
    for (int c = 0; c < n; ++c) {
      EltSet cT(n);
      for (int t : T.elements()) cT.add(G.mul(c, t));
      if (!(cT == H.conn)) continue;
      Perm psi(2 * n);
      for (int x = 0; x < n; ++x) {
        psi[x] = n + G.mul(alpha[x], c);
        psi[n + x] = alpha[x];
      }
      if (!preserves_edges(H, psi)) continue;
      std::vector<Perm> gens = rho_generators(G);
      gens.push_back(psi);
      StabChain chain = StabChain::build(2 * n, gens, {});
      if (chain.order() == static_cast<u128>(2 * n)) {
        out.verdict = Verdict::yes;
        out.regular_gens = std::move(gens);
        out.reason = "part-swapping translation-twisted automorphism closes a regular group";
        return out;
      }
    }
  }
  return out;
}

}  // namespace

CayleyOutcome decide_cayley(const FiniteGroup& G, const EltSet& S, long long budget) {
  CayleyOutcome out;
  int n = G.n;
  if (S.count() == 0 || S.count() == n) {
    // Empty and complete bipartite graphs are Cayley graphs of any group of
    // order 2n that swaps the parts; G x C2 works uniformly.
    Perm tau(2 * n);
    for (int x = 0; x < n; ++x) {
      tau[x] = n + x;
      tau[n + x] = x;
    }
    out.regular_gens = rho_generators(G);
    out.regular_gens.push_back(tau);
    StabChain chain = StabChain::build(2 * n, out.regular_gens, {});
    if (chain.order() != static_cast<u128>(2 * n))
      throw HgrError("decide_cayley: degenerate witness has wrong order");
    out.verdict = Verdict::yes;
    out.reason = S.count() == 0 ? "empty graph" : "complete bipartite graph";
    return out;
  }
  if (!is_connected_connection(G, S)) {
    // Each component is the Haar graph of <S^-1 S> with connection set
    // s0^-1 S; the disjoint union is Cayley exactly when the component is.
    std::vector<int> quot;
    for (int s : S.elements())
      for (int t : S.elements()) quot.push_back(G.mul(G.inv(s), t));
    EltSet Hset = closure_set(G, quot);
    SubgroupGroup comp = sub_group(G, Hset, G.name + "-component");
    int s0 = S.elements().front();
    EltSet Scomp(comp.group.n);
    for (int s : S.elements()) {
      int t = G.mul(G.inv(s0), s);
      if (comp.from_parent[t] < 0) throw HgrError("decide_cayley: component reduction failed");
      Scomp.add(comp.from_parent[t]);
    }
    CayleyOutcome inner = decide_cayley(comp.group, Scomp, budget);
    out.verdict = inner.verdict;
    out.reason = "disconnected; reduced to component over subgroup of order " +
                 std::to_string(comp.group.n) + (inner.reason.empty() ? "" : "; " + inner.reason);
    return out;
  }
  HaarGraph H = build_haar(G, S);
  PermGroupDescriptor A = haar_aut(H, budget);
  StabChain orbit_chain = StabChain::build(2 * n, A.generators, {0});
  if (static_cast<int>(orbit_chain.levels()[0].orbit.size()) != 2 * n) {
    out.verdict = Verdict::no;
    out.reason = "automorphism group preserves the parts; no transitive subgroup";
    return out;
  }
  if (A.order == static_cast<u128>(2 * n)) {
    out.verdict = Verdict::yes;
    out.regular_gens = A.generators;
    out.reason = "full automorphism group is itself regular";
    return out;
  }
  CayleyOutcome affine = affine_swap_scan(G, H);
  if (affine.verdict == Verdict::yes) return affine;
  try {
    auto reg = find_regular_subgroup(A, budget);
    if (reg) {
      out.verdict = Verdict::yes;
      out.regular_gens = std::move(*reg);
      out.reason = "regular subgroup found by exhaustive search";
    } else {
      out.verdict = Verdict::no;
      out.reason = "exhaustive regular-subgroup search ruled every candidate out";
    }
  } catch (const ResourceLimit& e) {
    out.verdict = Verdict::unknown;
    out.reason = e.what();
  }
  return out;
}

}  // namespace hgr
