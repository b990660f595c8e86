// Two-layer posets from Haar graphs, their automorphism reports, and exact
// order-ideal counting with the lattice bound checks.
#pragma once

#include <vector>

#include "haarrep/base.hpp"
#include "haarrep/group.hpp"
#include "haarrep/haar.hpp"

namespace hgr {

// Finite poset as per-element down-sets (each includes the element itself),
// stored as flat bitset rows of `words` machine words.
struct Poset {
  int elements = 0;
  int words = 0;
  std::vector<uint64_t> down;

  bool leq(int a, int b) const { return (down[static_cast<size_t>(b) * words + (a >> 6)] >> (a & 63)) & 1; }
};

// Orders R x {-1,1} by (a,-1) < (b,1) exactly when the graph has the edge.
Poset haar_to_poset(const HaarGraph& H);

// Throws unless reflexive, antisymmetric, and transitive.
void validate_poset(const Poset& P);

struct PosetReport {
  u128 aut_order = 0;
  bool semiregular = false;
  int orbit_count = 0;
};

// Aut(P) for a two-layer poset, computed through the graph engine with the
// layers as initial colors. Requires at least one strict relation and uniform
// down-degrees on the top layer (otherwise the layer coloring is unsound and
// the call refuses).
PosetReport poset_representation_report(const Poset& P, long long budget = 0);

// Exact number of down-closed subsets; top layer capped at 24 elements.
u128 count_ideals(const Poset& P);

// Subset-enumeration oracle, capped at 16 elements.
u128 count_ideals_bruteforce(const Poset& P);

// Direct order-preserving backtracking count, capped at 12 elements.
u128 poset_automorphism_order_bruteforce(const Poset& P);

struct LatticeBoundReport {
  u128 ideal_count = 0;
  u128 bound = 0;           // 2^floor(3|R|/2)
  bool within = false;
  bool window = false;      // 4 <= |S| <= (|R|-6)/2 for the input S
  bool premise = false;     // every top element has >= |R|/2 + 3 below
  u128 footnote_bound = 0;  // 2 + (2^|R|-1) + (2^|R|-1) * 2^(|R|/2-3)
  bool footnote_within = false;
  bool degenerate = false;  // S = R, so the complement poset is an antichain
};

// Counts the ideals of the poset of Haar(G, R \ S) and compares against the
// closed-form bounds. |G| <= 16.
LatticeBoundReport lattice_bound_check(const FiniteGroup& G, const EltSet& S);

}  // namespace hgr
