#pragma once

#include <memory>
#include <vector>

#include "haarrep/base.hpp"

namespace hgr {

// A permutation of 0..degree-1 stored as its image list.
using Perm = std::vector<int>;

Perm perm_identity(int degree);
bool perm_is_identity(const Perm& p);
// compose(p, q) applies p first, then q: result[i] = q[p[i]].
Perm perm_compose(const Perm& p, const Perm& q);
Perm perm_inverse(const Perm& p);
u128 perm_order(const Perm& p);

// Stabilizer chain with explicit transversals. A generator is stored at the
// deepest level whose leading base points it fixes; the group acting at level
// i is generated by everything stored at levels i and deeper. Transversal
// entries are append-only, so sift results never change retroactively.
class StabChain {
 public:
  struct Level {
    int beta = -1;
    std::vector<Perm> gens;            // generators that landed at this level
    std::vector<int> orbit;            // discovery order, orbit[0] == beta
    std::vector<Perm> transversal;     // transversal[k] maps beta to orbit[k]
    std::vector<int> orbit_pos;        // degree-sized, -1 when outside
  };

  // forced_base points become the leading base points even when some are
  // fixed by the whole group (their levels are then trivial).
  static StabChain build(int degree, const std::vector<Perm>& gens,
                         const std::vector<int>& forced_base = {});

  int degree() const { return degree_; }
  const std::vector<Level>& levels() const { return levels_; }
  std::vector<int> base() const;
  u128 order() const;
  bool contains(const Perm& g) const;

  // Generators of the pointwise stabilizer of the first base point.
  std::vector<Perm> stabilizer_generators() const;

  // Every element, as transversal products; throws when order() > cap.
  std::vector<Perm> materialize(u128 cap) const;

 private:
  int degree_ = 0;
  std::vector<Level> levels_;

  // Returns (remainder, level); remainder == identity means membership.
  std::pair<Perm, size_t> sift(Perm g) const;
  // Grows the orbit under the generators of levels li and deeper, keeping
  // existing entries; returns the orbit size before the call.
  size_t extend_orbit(size_t li);
};

// A permutation group attached to a graph or poset: generator list plus a
// verified stabilizer chain.
struct PermGroupDescriptor {
  int degree = 0;
  std::vector<Perm> generators;
  u128 order = 1;
  std::vector<int> base;
  std::shared_ptr<const StabChain> chain;

  bool contains(const Perm& g) const { return chain && chain->contains(g); }
};

PermGroupDescriptor make_descriptor(int degree, std::vector<Perm> generators,
                                    const std::vector<int>& forced_base = {});

// Orbits of 0..degree-1 under the generator set, each sorted ascending,
// ordered by smallest member.
std::vector<std::vector<int>> perm_orbits(int degree, const std::vector<Perm>& gens);

}  // namespace hgr
