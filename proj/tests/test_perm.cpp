#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "haarrep/perm.hpp"

using namespace hgr;

namespace {

// Closure by breadth-first products, for cross-checking chain orders.
std::set<Perm> brute_closure(int degree, const std::vector<Perm>& gens) {
  std::set<Perm> seen{perm_identity(degree)};
  std::vector<Perm> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    Perm p = queue.back();
    queue.pop_back();
    for (const Perm& g : gens) {
      Perm q = perm_compose(p, g);
      if (seen.insert(q).second) queue.push_back(q);
    }
  }
  return seen;
}

Perm random_perm(int degree, std::mt19937_64& rng) {
  Perm p(degree);
  for (int i = 0; i < degree; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("composition applies left factor first") {
  Perm p{1, 2, 0};
  Perm q{1, 0, 2};
  Perm r = perm_compose(p, q);
  CHECK(r[0] == 0);
  CHECK(r[1] == 2);
  CHECK(r[2] == 1);
  CHECK(perm_is_identity(perm_compose(p, perm_inverse(p))));
  CHECK(perm_is_identity(perm_compose(perm_inverse(p), p)));
}

TEST_CASE("permutation order") {
  CHECK(perm_order(perm_identity(4)) == u128{1});
  Perm p{1, 2, 0, 4, 5, 6, 7, 3};  // 3-cycle times 5-cycle
  CHECK(perm_order(p) == u128{15});
}

TEST_CASE("chain on two transpositions with a forced base") {
  // A generator fixing the first base point must still act on level 0's
  // orbit through the deeper levels.
  std::vector<Perm> gens{{1, 0, 2}, {0, 2, 1}};
  StabChain chain = StabChain::build(3, gens, {0, 1});
  CHECK(chain.order() == u128{6});
  CHECK(chain.contains({2, 1, 0}));
  CHECK(chain.contains({2, 0, 1}));
}

TEST_CASE("chain orders for known groups") {
  CHECK(StabChain::build(6, {{1, 2, 3, 4, 5, 0}}, {}).order() == u128{6});
  CHECK(StabChain::build(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}}, {}).order() == u128{120});
  CHECK(StabChain::build(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, {}).order() == u128{12});
  CHECK(StabChain::build(3, {}, {}).order() == u128{1});
}

TEST_CASE("chain membership") {
  StabChain A4 = StabChain::build(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, {});
  CHECK(A4.contains(perm_identity(4)));
  CHECK(A4.contains({1, 0, 3, 2}));
  CHECK_FALSE(A4.contains({1, 0, 2, 3}));  // odd
  CHECK_FALSE(A4.contains({0, 1, 2}));     // wrong degree is never a member
}

TEST_CASE("chain order agrees with brute closure") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int degree = 3 + static_cast<int>(rng() % 5);
    int k = 1 + static_cast<int>(rng() % 3);
    std::vector<Perm> gens;
    for (int i = 0; i < k; ++i) gens.push_back(random_perm(degree, rng));
    auto closure = brute_closure(degree, gens);
    StabChain chain = StabChain::build(degree, gens, {});
    CAPTURE(trial);
    CAPTURE(degree);
    CAPTURE(k);
    CHECK(chain.order() == u128{closure.size()});
    for (const Perm& p : closure) CHECK(chain.contains(p));
  }
}

TEST_CASE("materialize") {
  StabChain S3 = StabChain::build(3, {{1, 0, 2}, {0, 2, 1}}, {});
  std::vector<Perm> all = S3.materialize(10);
  CHECK(all.size() == 6);
  std::set<Perm> uniq(all.begin(), all.end());
  CHECK(uniq.size() == 6);
  for (const Perm& p : all)
    for (const Perm& q : all) CHECK(uniq.count(perm_compose(p, q)) == 1);
  CHECK_THROWS_AS(S3.materialize(5), ResourceLimit);
}

TEST_CASE("stabilizer generators") {
  StabChain S4 = StabChain::build(4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, {0});
  CHECK(S4.order() == u128{24});
  CHECK(S4.base().front() == 0);
  std::vector<Perm> stab = S4.stabilizer_generators();
  for (const Perm& p : stab) CHECK(p[0] == 0);
  CHECK(StabChain::build(4, stab, {}).order() == u128{6});
}

TEST_CASE("forced base validation") {
  CHECK_THROWS_AS(StabChain::build(3, {{1, 0, 2}}, {5}), HgrError);
}

TEST_CASE("orbits") {
  auto orbits = perm_orbits(5, {{1, 0, 2, 3, 4}, {0, 1, 3, 2, 4}});
  REQUIRE(orbits.size() == 3);
  CHECK(orbits[0] == std::vector<int>({0, 1}));
  CHECK(orbits[1] == std::vector<int>({2, 3}));
  CHECK(orbits[2] == std::vector<int>({4}));
}

TEST_CASE("descriptors") {
  PermGroupDescriptor d = make_descriptor(4, {{1, 2, 3, 0}});
  CHECK(d.order == u128{4});
  CHECK(d.contains({2, 3, 0, 1}));
  CHECK_FALSE(d.contains({1, 0, 2, 3}));
}

TEST_CASE("chain construction is deterministic") {
  std::vector<Perm> gens{{1, 2, 3, 4, 0, 5}, {0, 2, 1, 3, 5, 4}};
  StabChain a = StabChain::build(6, gens, {});
  StabChain b = StabChain::build(6, gens, {});
  CHECK(a.base() == b.base());
  CHECK(a.order() == b.order());
}
