#pragma once

#include <string>
#include <vector>

#include "haarrep/group.hpp"

namespace hgr {

// Descriptor for a named group family. Supported families:
//   trivial            []               order 1
//   cyclic             [n]              C_n
//   abelian            [n1, n2, ...]    C_n1 x C_n2 x ...
//   dihedral           [n]              order n (n even), rotations + flips
//   dicyclic           [n]              order n = 4m: <x,y | x^{2m}=1, y^2=x^m,
//                                       y^-1 x y = x^-1>; n = 8 is quaternion
//   alternating        [k]              Alt(k), k <= 7 under the table cap
//   symmetric          [k]              Sym(k), k <= 7
//   g18                []               <e1,e2,x | e1^3=e2^3=x^2=[e1,e2]=1,
//                                       e1^x=e1^-1, e2^x=e2^-1>, order 18
//   semidirect_cc      [m, k, e]        C_m : C_k with action x -> x^e,
//                                       requires e^k = 1 (mod m)
//   product            sub-descriptors  direct product of the factors
struct NamedGroupSpec {
  std::string family;
  std::vector<long long> params;
  std::vector<NamedGroupSpec> factors;  // only for family == "product"
};

FiniteGroup make_named(const NamedGroupSpec& spec);

// Compact name parser. Grammar (case-sensitive):
//   C12        cyclic            D6      dihedral of order 6
//   C2^3       elementary power  Q8      dicyclic of order 8
//   Dic12      dicyclic          A5, S4  alternating / symmetric
//   G18        the order-18 exception
//   C13:C3@3   semidirect C13 : C3 with action exponent 3
//   AxB        direct product of parsed names (right associative)
NamedGroupSpec parse_group_name(const std::string& name);
FiniteGroup group_by_name(const std::string& name);

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B);

// Builds the abstract group of a permutation closure. Generators act on
// 0..degree-1. The closure may not exceed `cap` elements, and the resulting
// table is subject to the global 4096 cap.
FiniteGroup group_from_generators(int degree,
                                  const std::vector<std::vector<int>>& gens,
                                  int cap = 10000);

// Catalog shipped in data/catalog.json: every group of order <= 12 plus the
// named exception-table groups above that. The three flags carry the expected
// verdicts used by the table-reproduction reports (true = exceptional).
struct CatalogEntry {
  std::string name;
  int order = 0;
  bool t1 = false;  // no Haar graph has full automorphism group of size |G|
  bool t2 = false;  // no Haar graph is bipartition-rigid
  bool t3 = false;  // no 2-orbit semiregular poset representation
  std::string note;
  NamedGroupSpec spec;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* catalog_find(const std::string& name);
FiniteGroup catalog_group(const std::string& name);

// Resolves a group source: catalog name, parseable family name, or a path to
// a JSON group file.
FiniteGroup resolve_group(const std::string& source);

}  // namespace hgr
