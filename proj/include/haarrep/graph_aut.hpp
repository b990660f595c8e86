#pragma once

#include <optional>
#include <string>

#include "haarrep/haar.hpp"

namespace hgr {

// Full automorphism group (unit initial partition).
PermGroupDescriptor haar_aut(const HaarGraph& H, long long budget = 0);

// Subgroup mapping each part of the natural bipartition to itself, computed
// by seeding the search with the two parts as distinct cells.
PermGroupDescriptor aut0(const HaarGraph& H, long long budget = 0);

PermGroupDescriptor point_stabilizer(const PermGroupDescriptor& P, int v);

struct HgrCheck {
  bool is_hgr = false;
  u128 aut_order = 0;
  u128 aut0_order = 0;
};
HgrCheck is_hgr(const FiniteGroup& G, const EltSet& S, long long budget = 0);

// Exhaustive backtracking for a sharply transitive subgroup of P. Absence is
// a proof; blowing the node budget or the stabilizer materialization cap
// raises ResourceLimit.
std::optional<std::vector<Perm>> find_regular_subgroup(const PermGroupDescriptor& P,
                                                       long long budget = 0);

// Decomposes a part-swapping automorphism phi with (1,-1)^phi = (1,1) of a
// connected bipartition-rigid Haar graph into a group automorphism and a
// translation element: (r,-1)^phi = (r^f,1) and (r,1)^phi = (r^{f^-1} x,-1).
struct SwapDecomposition {
  GroupHom f;
  int x = 0;
};
SwapDecomposition induced_group_automorphism(const HaarGraph& H, const Perm& phi);

enum class Verdict { yes, no, unknown, skipped };
std::string verdict_name(Verdict v);

struct CayleyOutcome {
  Verdict verdict = Verdict::unknown;
  std::vector<Perm> regular_gens;  // witness when verdict == yes
  std::string reason;
};

// Decides whether Haar(G,S) is a Cayley graph. Ladder: degenerate sets,
// disconnected reduction, intransitive refusal, order-2n regularity, affine
// part-swap scan, exhaustive regular-subgroup search.
CayleyOutcome decide_cayley(const FiniteGroup& G, const EltSet& S, long long budget = 0);

}  // namespace hgr
