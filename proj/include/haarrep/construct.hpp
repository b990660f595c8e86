// Explicit connection-set constructions and the inductive driver that
// assembles verified Haar graphical representation certificates.
#pragma once

#include <optional>
#include <string>

#include "haarrep/base.hpp"
#include "haarrep/group.hpp"
#include "haarrep/graph_aut.hpp"

namespace hgr {

// Outcome of a construction run. For positive results conn holds the
// connection set and the aut orders are recomputed from scratch by the graph
// engine before verified is set. Negative verdicts (method "exceptional" or
// "trivial") carry an empty set, zero aut orders, and verified = true meaning
// the verdict itself is certified (by exhaustion at small orders, by the
// catalog above them).
struct HgrCertificate {
  std::string group;
  int order = 0;
  EltSet conn;
  u128 aut_order = 0;
  u128 aut0_order = 0;
  bool is_hgr = false;
  // One of: cyclic, twogen-S1, twogen-S2, lift-cyclic-S1, lift-cyclic-S2,
  // lift-simple, abelian-index2, search, exceptional, trivial.
  std::string method;
  bool window = false;
  bool verified = false;
};

// Data for the abelian-index-2 construction: a proper subgroup N1 of the
// index-2 subgroup N together with n1 in N1 \ {1} and n2 in N \ N1 such that
// <N1, n2> = N and r n2 r^-1 n2^-1 avoids {1, n1}. When no such triple exists
// the tag names the exceptional isomorphism type of the ambient group.
struct MouraData {
  Subgroup N1;
  int n1 = -1;
  int n2 = -1;
  std::string tag;  // empty, "dihedral-2p", or "order-8-dihedral-or-quaternion"
  bool has_triple() const { return tag.empty(); }
};

// A generating pair (s, t) with o(s) large; inverted records s^t = s^-1.
struct GeneratingPair {
  int s = -1;
  int t = -1;
  bool inverted = false;
};

// True when 4 <= k <= (n - 6) / 2.
bool window_holds(int n, int k);

// The eight-element set {s^0, ..., s^6, s^8}. Requires o(s) >= 12.
EltSet cyclic_connection(const FiniteGroup& G, int s);

// Variant 1: {s^0..s^6, s^8} + {t, ts} (ten elements, needs s^t outside
// {s, s^-1}); variant 2 adds ts^3 (eleven elements, needs G dihedral).
// Both require <s, t> = G, o(s) >= 12, and s^t != s.
EltSet twogen_connection(const FiniteGroup& G, int s, int t, int variant);

// Variant 1: S_N + (Nr \ {r}), window needs index >= 3. Variant 2: the
// complement of variant 1, window needs index 2. Requires N normal,
// G = <N, r>, and 4 <= |S_N| <= (|N| - 6) / 2.
EltSet lift_cyclic_quotient(const FiniteGroup& G, const Subgroup& N, const EltSet& S_N, int r,
                            int variant);

// S_N + (Nr2^-1 \ {r2^-1}) + (Nr2 \ {r2, n1 r2}) + {r1} + {r2 r1} for a
// nonabelian simple quotient G/N with o(r2 N) >= 5; the five cosets involved
// are checked pairwise distinct at runtime.
EltSet lift_simple_quotient(const FiniteGroup& G, const Subgroup& N, const EltSet& S_N, int r1,
                            int r2, int n1);

// Deterministic search for MouraData over proper subgroups of N (descending
// order, then ascending membership), n2 ascending, n1 ascending. Requires G
// nonabelian, N abelian normal of index 2, r outside N.
MouraData moura_data(const FiniteGroup& G, const Subgroup& N, int r);

// S_N1 + (n2 N1 \ {n2}) + {r, n2 r, n1 n2 r}. Requires the MouraData
// invariants, the window on S_N1, and G neither dihedral of order 8 or 2p
// nor quaternion.
EltSet abelian_index2_connection(const FiniteGroup& G, const Subgroup& N, const Subgroup& N1,
                                 int n1, int n2, int r, const EltSet& S_N1);

// Exhaustive scan for (s, t) with <s, t> = G, o(s) >= min_order, s^t != s,
// ordered by decreasing o(s) then ascending indices; pairs with
// s^t != s^-1 are preferred globally over inverted ones.
std::optional<GeneratingPair> find_generating_pair_high_order(const FiniteGroup& G, int min_order);

// The inductive driver. Returns a verified certificate: a Haar graphical
// representation for nonabelian G (aut_order = |G|), a rigid bipartition
// witness for abelian G (aut0_order = |G|, aut_order = 2|G|), or a certified
// negative verdict. Throws ResourceLimit when the bounded fallback search is
// exhausted without a verdict.
HgrCertificate construct_hgr(const FiniteGroup& G, long long budget = 0, uint64_t seed = 0);

// Same ladder restricted to windowed sets with aut0_order = |G|, the currency
// the lift constructions consume. Throws HgrError when no windowed rigid set
// exists (order below 14 or an exceptional group) and ResourceLimit when the
// search is exhausted.
HgrCertificate construct_windowed_rigid(const FiniteGroup& G, long long budget = 0,
                                        uint64_t seed = 0);

}  // namespace hgr
