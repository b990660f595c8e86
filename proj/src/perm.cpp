// Permutation utilities and a deterministic Schreier-Sims stabilizer chain.
// The chain is complete when every Schreier generator of every level sifts to
// the identity; build() pushes them through a work queue until that holds.

#include "haarrep/perm.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace hgr {

Perm perm_identity(int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    if (p[i] != i) return false;
  return true;
}

Perm perm_compose(const Perm& p, const Perm& q) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = q[p[i]];
  return r;
}

Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

u128 perm_order(const Perm& p) {
  int n = static_cast<int>(p.size());
  std::vector<bool> seen(n, false);
  u128 ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    u128 len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = p[j];
    }
    u128 g = std::gcd(static_cast<unsigned long long>(ord % len), static_cast<unsigned long long>(len));
    ord = checked_mul_u128(ord, len / g);
  }
  return ord;
}

std::pair<Perm, size_t> StabChain::sift(Perm g) const {
  for (size_t li = 0; li < levels_.size(); ++li) {
    const Level& L = levels_[li];
    int img = g[L.beta];
    int pos = L.orbit_pos[img];
    if (pos < 0) return {std::move(g), li};
    g = perm_compose(g, perm_inverse(L.transversal[pos]));
  }
  return {std::move(g), levels_.size()};
}

size_t StabChain::extend_orbit(size_t li) {
  Level& L = levels_[li];
  if (L.orbit.empty()) {
    L.orbit.assign(1, L.beta);
    L.transversal.assign(1, perm_identity(degree_));
    L.orbit_pos.assign(degree_, -1);
    L.orbit_pos[L.beta] = 0;
  }
  size_t before = L.orbit.size();
  for (size_t head = 0; head < L.orbit.size(); ++head) {
    int pt = L.orbit[head];
    for (size_t lj = li; lj < levels_.size(); ++lj)
      for (const Perm& s : levels_[lj].gens) {
        int img = s[pt];
        if (L.orbit_pos[img] < 0) {
          L.orbit_pos[img] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(img);
          L.transversal.push_back(perm_compose(L.transversal[head], s));
        }
      }
  }
  return before;
}

StabChain StabChain::build(int degree, const std::vector<Perm>& gens,
                           const std::vector<int>& forced_base) {
  StabChain chain;
  chain.degree_ = degree;
  for (int b : forced_base) {
    if (b < 0 || b >= degree) throw HgrError("stabilizer chain: base point out of range");
    Level L;
    L.beta = b;
    chain.levels_.push_back(std::move(L));
    chain.extend_orbit(chain.levels_.size() - 1);
  }
  std::deque<Perm> pending(gens.begin(), gens.end());
  auto schreier = [&](size_t li, size_t k, const Perm& s) {
    const Level& L = chain.levels_[li];
    int img = s[L.orbit[k]];
    Perm sg = perm_compose(perm_compose(L.transversal[k], s),
                           perm_inverse(L.transversal[L.orbit_pos[img]]));
    if (!perm_is_identity(sg)) pending.push_back(std::move(sg));
  };
  while (!pending.empty()) {
    Perm g = std::move(pending.front());
    pending.pop_front();
    auto [rem, li] = chain.sift(std::move(g));
    if (perm_is_identity(rem)) continue;
    if (li == chain.levels_.size()) {
      int beta = -1;
      for (int i = 0; i < degree; ++i)
        if (rem[i] != i) {
          beta = i;
          break;
        }
      Level L;
      L.beta = beta;
      chain.levels_.push_back(std::move(L));
      chain.extend_orbit(chain.levels_.size() - 1);
    }
    const Perm& added = chain.levels_[li].gens.emplace_back(std::move(rem));
    // The residue fixes the base points of every level above li, so it joins
    // the acting set of levels 0..li. Since transversal entries never change,
    // the only Schreier elements not already queued are those involving the
    // new generator or a newly reached orbit point.
    for (size_t j = li + 1; j-- > 0;) {
      size_t before = chain.extend_orbit(j);
      const Level& L = chain.levels_[j];
      for (size_t k = 0; k < L.orbit.size(); ++k) schreier(j, k, added);
      for (size_t k = before; k < L.orbit.size(); ++k)
        for (size_t lj = j; lj < chain.levels_.size(); ++lj)
          for (const Perm& s : chain.levels_[lj].gens) schreier(j, k, s);
    }
  }
  return chain;
}

std::vector<int> StabChain::base() const {
  std::vector<int> b;
  for (const Level& L : levels_) b.push_back(L.beta);
  return b;
}

u128 StabChain::order() const {
  u128 ord = 1;
  for (const Level& L : levels_) ord = checked_mul_u128(ord, L.orbit.size());
  return ord;
}

bool StabChain::contains(const Perm& g) const {
  if (static_cast<int>(g.size()) != degree_) return false;
  auto [rem, li] = sift(g);
  (void)li;
  return perm_is_identity(rem);
}

std::vector<Perm> StabChain::stabilizer_generators() const {
  std::vector<Perm> out;
  for (size_t li = 1; li < levels_.size(); ++li)
    for (const Perm& s : levels_[li].gens) out.push_back(s);
  return out;
}

std::vector<Perm> StabChain::materialize(u128 cap) const {
  if (order() > cap)
    throw ResourceLimit("materialize: group order " + u128_str(order()) + " exceeds cap");
  std::vector<Perm> elems{perm_identity(degree_)};
  for (size_t li = levels_.size(); li-- > 0;) {
    const Level& L = levels_[li];
    std::vector<Perm> next;
    next.reserve(elems.size() * L.orbit.size());
    for (const Perm& h : elems)
      for (const Perm& u : L.transversal) next.push_back(perm_compose(h, u));
    elems = std::move(next);
  }
  return elems;
}

PermGroupDescriptor make_descriptor(int degree, std::vector<Perm> generators,
                                    const std::vector<int>& forced_base) {
  PermGroupDescriptor d;
  d.degree = degree;
  d.generators = std::move(generators);
  auto chain = std::make_shared<StabChain>(StabChain::build(degree, d.generators, forced_base));
  d.order = chain->order();
  d.base = chain->base();
  d.chain = std::move(chain);
  return d;
}

std::vector<std::vector<int>> perm_orbits(int degree, const std::vector<Perm>& gens) {
  std::vector<int> owner(degree, -1);
  std::vector<std::vector<int>> orbits;
  for (int v = 0; v < degree; ++v) {
    if (owner[v] >= 0) continue;
    std::vector<int> orbit{v};
    owner[v] = static_cast<int>(orbits.size());
    for (size_t head = 0; head < orbit.size(); ++head)
      for (const Perm& g : gens) {
        int img = g[orbit[head]];
        if (owner[img] < 0) {
          owner[img] = owner[v];
          orbit.push_back(img);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

}  // namespace hgr
