#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "haarrep/base.hpp"

namespace hgr {

// Dense bitset over the elements of a single group. The universe size is fixed
// at construction and all member indices must stay below it.
struct EltSet {
  int n = 0;
  std::vector<uint64_t> w;

  EltSet() = default;
  explicit EltSet(int universe) : n(universe), w((universe + 63) / 64, 0) {}

  void add(int i) { w[i >> 6] |= 1ull << (i & 63); }
  void remove(int i) { w[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  int count() const;
  bool empty() const { return count() == 0; }
  bool operator==(const EltSet&) const = default;

  std::vector<int> elements() const;
  static EltSet of(int universe, const std::vector<int>& elts);
  static EltSet full(int universe);
};

// A finite group as a complete multiplication table with labeled elements.
// Element 0 is always the identity; constructors renumber to guarantee it.
// The table representation caps the order at 4096 so that products stay O(1)
// and the tables of every group used here fit comfortably in memory.
class FiniteGroup {
 public:
  static constexpr int kMaxOrder = 4096;

  int n = 1;
  std::string name = "C1";
  std::vector<uint16_t> table;   // n*n row-major: table[a*n+b] = a*b
  std::vector<uint16_t> invv;    // invv[a]*a = a*invv[a] = identity
  std::vector<std::string> labels;

  int mul(int a, int b) const { return table[static_cast<size_t>(a) * n + b]; }
  int inv(int a) const { return invv[a]; }
  int conj(int a, int g) const { return mul(inv(g), mul(a, g)); }  // g^-1 a g
  int pow(int g, long long k) const;

  // Validates all type invariants and returns the group. Associativity is
  // checked exhaustively for n <= 64 and by seeded sampling of 10*n*n triples
  // above that.
  static FiniteGroup from_table(std::string name, int n,
                                std::vector<uint16_t> table,
                                std::vector<std::string> labels = {});
};

// A subgroup is carried as a bitset plus a pointer to its parent group; the
// caller keeps the parent alive.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  EltSet members;
  int order() const { return members.count(); }
};

// A homomorphism given by its per-element image map.
struct GroupHom {
  const FiniteGroup* source = nullptr;
  const FiniteGroup* target = nullptr;
  std::vector<uint16_t> image;

  int operator()(int g) const { return image[g]; }
  bool is_homomorphism() const;
  bool is_bijective() const;
};

struct StructureInfo {
  bool is_abelian = false;
  Subgroup center;
  Subgroup derived;
};

int element_order(const FiniteGroup& G, int g);
Subgroup closure(const FiniteGroup& G, const std::vector<int>& seed);
EltSet closure_set(const FiniteGroup& G, const std::vector<int>& seed);
StructureInfo structure_queries(const FiniteGroup& G);
Subgroup centralizer(const FiniteGroup& G, const Subgroup& sub, int g);

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G);
bool is_normal(const FiniteGroup& G, const EltSet& H);

// Every normal subgroup, ascending by order, then lexicographic on members.
std::vector<EltSet> normal_subgroups(const FiniteGroup& G);

// Every subgroup (intended for small groups; throws past 100000 subgroups).
std::vector<EltSet> all_subgroups(const FiniteGroup& G);
std::vector<EltSet> maximal_subgroups(const FiniteGroup& G);

struct SimpleQuotient {
  Subgroup kernel;
  FiniteGroup quotient;
  GroupHom projection;
};

// Maximal proper normal subgroups paired with their simple quotients. The
// quotient is simple exactly when the kernel is maximal normal, so the list
// is nonempty for every |G| >= 2.
std::vector<SimpleQuotient> normal_subgroups_with_simple_quotient(
    const FiniteGroup& G);

bool is_simple(const FiniteGroup& G);
bool is_abelian(const FiniteGroup& G);
bool is_cyclic(const FiniteGroup& G);
// Dihedral here means order 2m with a cyclic index-2 subgroup inverted by an
// outside involution (m >= 1, so C2 and C2xC2 count as degenerate cases).
bool is_dihedral(const FiniteGroup& G);

// Greedy small generating sequence (deterministic, ascending element scan).
std::vector<int> generating_set(const FiniteGroup& G);

// Isomorphism testing: invariant fingerprint first, then backtracking over
// generator images. Returns a witness when one exists.
std::optional<GroupHom> isomorphism(const FiniteGroup& G, const FiniteGroup& H);
bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H);

// All automorphisms of G as element maps (throws if more than `cap`).
std::vector<std::vector<uint16_t>> group_automorphisms(const FiniteGroup& G,
                                                       size_t cap = 200000);
std::vector<std::vector<uint16_t>> group_automorphism_generators(
    const FiniteGroup& G);

// The subgroup on `members` as a standalone group plus index maps both ways.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<uint16_t> to_parent;   // sub index -> parent index
  std::vector<int> from_parent;      // parent index -> sub index or -1
};
SubgroupGroup sub_group(const FiniteGroup& G, const EltSet& members,
                        const std::string& name);

struct QuotientGroup {
  FiniteGroup group;
  GroupHom projection;  // projection.target always points at this->group
  std::vector<uint16_t> reps;  // quotient index -> lowest parent representative

  QuotientGroup() = default;
  QuotientGroup(QuotientGroup&& other) noexcept
      : group(std::move(other.group)),
        projection(std::move(other.projection)),
        reps(std::move(other.reps)) {
    projection.target = &group;
  }
  QuotientGroup& operator=(QuotientGroup&& other) noexcept {
    group = std::move(other.group);
    projection = std::move(other.projection);
    reps = std::move(other.reps);
    projection.target = &group;
    return *this;
  }
  QuotientGroup(const QuotientGroup& other)
      : group(other.group), projection(other.projection), reps(other.reps) {
    projection.target = &group;
  }
  QuotientGroup& operator=(const QuotientGroup& other) {
    group = other.group;
    projection = other.projection;
    reps = other.reps;
    projection.target = &group;
    return *this;
  }
};
QuotientGroup quotient_group(const FiniteGroup& G, const EltSet& N);

}  // namespace hgr
