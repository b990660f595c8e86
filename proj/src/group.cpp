#include "haarrep/group.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_set>

namespace hgr {

int EltSet::count() const {
  int c = 0;
  for (uint64_t x : w) c += std::popcount(x);
  return c;
}

std::vector<int> EltSet::elements() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

EltSet EltSet::of(int universe, const std::vector<int>& elts) {
  EltSet s(universe);
  for (int e : elts) {
    if (e < 0 || e >= universe) throw HgrError("element index out of range");
    s.add(e);
  }
  return s;
}

EltSet EltSet::full(int universe) {
  EltSet s(universe);
  for (int i = 0; i < universe; ++i) s.add(i);
  return s;
}

int FiniteGroup::pow(int g, long long k) const {
  if (k < 0) {
    g = inv(g);
    k = -k;
  }
  int acc = 0;
  int base = g;
  while (k > 0) {
    if (k & 1) acc = mul(acc, base);
    base = mul(base, base);
    k >>= 1;
  }
  return acc;
}

FiniteGroup FiniteGroup::from_table(std::string name, int n,
                                    std::vector<uint16_t> table,
                                    std::vector<std::string> labels) {
  if (n < 1) throw HgrError("group order must be positive");
  if (n > kMaxOrder) throw HgrError("group order exceeds table limit 4096");
  if (table.size() != static_cast<size_t>(n) * n)
    throw HgrError("multiplication table has wrong shape");

  FiniteGroup G;
  G.n = n;
  G.name = std::move(name);
  G.table = std::move(table);

  auto at = [&](int a, int b) { return G.table[static_cast<size_t>(a) * n + b]; };

  // Rows and columns must be permutations of 0..n-1.
  for (int a = 0; a < n; ++a) {
    std::vector<bool> row(n, false), col(n, false);
    for (int b = 0; b < n; ++b) {
      int r = at(a, b), c = at(b, a);
      if (r >= n || c >= n || row[r] || col[c])
        throw HgrError("table row or column is not a permutation");
      row[r] = col[c] = true;
    }
  }
  // Identity at index 0.
  for (int g = 0; g < n; ++g) {
    if (at(0, g) != g || at(g, 0) != g)
      throw HgrError("element 0 is not an identity");
  }
  // Inverses exist by the Latin square property; record them.
  G.invv.assign(n, 0);
  for (int g = 0; g < n; ++g) {
    for (int h = 0; h < n; ++h) {
      if (at(g, h) == 0) {
        if (at(h, g) != 0) throw HgrError("one-sided inverse found");
        G.invv[g] = static_cast<uint16_t>(h);
        break;
      }
    }
  }
  // Associativity: exhaustive up to order 64, seeded sampling above.
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (at(at(a, b), c) != at(a, at(b, c)))
            throw HgrError("table is not associative");
  } else {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ull ^ static_cast<uint64_t>(n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    long long samples = 10LL * n * n;
    for (long long i = 0; i < samples; ++i) {
      int a = pick(rng), b = pick(rng), c = pick(rng);
      if (at(at(a, b), c) != at(a, at(b, c)))
        throw HgrError("table is not associative");
    }
  }

  if (labels.empty()) {
    G.labels.resize(n);
    G.labels[0] = "e";
    for (int g = 1; g < n; ++g) G.labels[g] = "g" + std::to_string(g);
  } else {
    if (labels.size() != static_cast<size_t>(n))
      throw HgrError("label list has wrong length");
    G.labels = std::move(labels);
  }
  return G;
}

bool GroupHom::is_homomorphism() const {
  const FiniteGroup& S = *source;
  const FiniteGroup& T = *target;
  if (image.size() != static_cast<size_t>(S.n)) return false;
  for (int a = 0; a < S.n; ++a)
    for (int b = 0; b < S.n; ++b)
      if (image[S.mul(a, b)] != T.mul(image[a], image[b])) return false;
  return true;
}

bool GroupHom::is_bijective() const {
  if (source->n != target->n) return false;
  std::vector<bool> seen(target->n, false);
  for (int g = 0; g < source->n; ++g) {
    if (seen[image[g]]) return false;
    seen[image[g]] = true;
  }
  return true;
}

int element_order(const FiniteGroup& G, int g) {
  if (g < 0 || g >= G.n) throw HgrError("element index out of range");
  int k = 1;
  int acc = g;
  while (acc != 0) {
    acc = G.mul(acc, g);
    ++k;
  }
  return k;
}

EltSet closure_set(const FiniteGroup& G, const std::vector<int>& seed) {
  EltSet mem(G.n);
  mem.add(0);
  std::vector<int> frontier{0};
  std::vector<int> gens;
  for (int s : seed) {
    if (s < 0 || s >= G.n) throw HgrError("element index out of range");
    gens.push_back(s);
    gens.push_back(G.inv(s));
  }
  size_t head = 0;
  while (head < frontier.size()) {
    int x = frontier[head++];
    for (int s : gens) {
      int y = G.mul(x, s);
      if (!mem.test(y)) {
        mem.add(y);
        frontier.push_back(y);
      }
    }
  }
  return mem;
}

Subgroup closure(const FiniteGroup& G, const std::vector<int>& seed) {
  return Subgroup{&G, closure_set(G, seed)};
}

StructureInfo structure_queries(const FiniteGroup& G) {
  StructureInfo info;
  EltSet center(G.n);
  for (int z = 0; z < G.n; ++z) {
    bool central = true;
    for (int g = 0; g < G.n && central; ++g)
      central = G.mul(z, g) == G.mul(g, z);
    if (central) center.add(z);
  }
  info.is_abelian = center.count() == G.n;
  info.center = Subgroup{&G, center};

  std::vector<int> comms;
  for (int a = 0; a < G.n; ++a)
    for (int b = 0; b < G.n; ++b)
      comms.push_back(G.mul(G.inv(G.mul(b, a)), G.mul(a, b)));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  info.derived = closure(G, comms);
  return info;
}

Subgroup centralizer(const FiniteGroup& G, const Subgroup& sub, int g) {
  EltSet out(G.n);
  for (int x : sub.members.elements())
    if (G.mul(x, g) == G.mul(g, x)) out.add(x);
  return Subgroup{&G, out};
}

std::vector<std::vector<int>> conjugacy_classes(const FiniteGroup& G) {
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(G.n, false);
  for (int x = 0; x < G.n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < G.n; ++g) {
      int y = G.conj(x, g);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_normal(const FiniteGroup& G, const EltSet& H) {
  for (int h : H.elements())
    for (int g = 0; g < G.n; ++g)
      if (!H.test(G.conj(h, g))) return false;
  return true;
}

namespace {

struct EltSetHash {
  size_t operator()(const EltSet& s) const {
    size_t h = 1469598103934665603ull;
    for (uint64_t x : s.w) {
      h ^= static_cast<size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

void sort_subgroup_list(std::vector<EltSet>& out) {
  std::sort(out.begin(), out.end(), [](const EltSet& a, const EltSet& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.w < b.w;
  });
}

}  // namespace

std::vector<EltSet> normal_subgroups(const FiniteGroup& G) {
  // Normal subgroups are exactly the joins of normal closures of single
  // conjugacy classes, so a join-closure pass over class closures finds all.
  auto classes = conjugacy_classes(G);
  std::vector<EltSet> seeds;
  for (const auto& cls : classes) seeds.push_back(closure_set(G, cls));

  std::unordered_set<EltSet, EltSetHash> seen;
  std::vector<EltSet> out;
  std::queue<EltSet> todo;
  for (const auto& s : seeds) {
    if (seen.insert(s).second) {
      out.push_back(s);
      todo.push(s);
    }
  }
  while (!todo.empty()) {
    EltSet cur = todo.front();
    todo.pop();
    for (const auto& s : seeds) {
      std::vector<int> join = cur.elements();
      for (int e : s.elements()) join.push_back(e);
      EltSet j = closure_set(G, join);
      if (seen.insert(j).second) {
        out.push_back(j);
        todo.push(j);
      }
    }
  }
  sort_subgroup_list(out);
  return out;
}

std::vector<EltSet> all_subgroups(const FiniteGroup& G) {
  std::unordered_set<EltSet, EltSetHash> seen;
  std::vector<EltSet> out;
  std::queue<EltSet> todo;
  EltSet triv(G.n);
  triv.add(0);
  seen.insert(triv);
  out.push_back(triv);
  todo.push(triv);
  while (!todo.empty()) {
    EltSet cur = todo.front();
    todo.pop();
    for (int g = 1; g < G.n; ++g) {
      if (cur.test(g)) continue;
      std::vector<int> gen = cur.elements();
      gen.push_back(g);
      EltSet ext = closure_set(G, gen);
      if (seen.insert(ext).second) {
        if (out.size() > 100000) throw HgrError("subgroup lattice too large");
        out.push_back(ext);
        todo.push(ext);
      }
    }
  }
  sort_subgroup_list(out);
  return out;
}

std::vector<EltSet> maximal_subgroups(const FiniteGroup& G) {
  auto subs = all_subgroups(G);
  std::vector<EltSet> proper;
  for (const auto& s : subs)
    if (s.count() < G.n) proper.push_back(s);
  std::vector<EltSet> out;
  for (const auto& s : proper) {
    bool maximal = true;
    for (const auto& t : proper) {
      if (t.count() <= s.count() || t == s) continue;
      bool contains = true;
      for (size_t i = 0; i < s.w.size() && contains; ++i)
        contains = (s.w[i] & ~t.w[i]) == 0;
      if (contains) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  sort_subgroup_list(out);
  return out;
}

bool is_abelian(const FiniteGroup& G) {
  for (int a = 0; a < G.n; ++a)
    for (int b = a + 1; b < G.n; ++b)
      if (G.mul(a, b) != G.mul(b, a)) return false;
  return true;
}

bool is_cyclic(const FiniteGroup& G) {
  for (int g = 0; g < G.n; ++g)
    if (element_order(G, g) == G.n) return true;
  return false;
}

bool is_dihedral(const FiniteGroup& G) {
  if (G.n % 2 != 0) return false;
  int m = G.n / 2;
  for (int s = 0; s < G.n; ++s) {
    if (element_order(G, s) != m) continue;
    EltSet rot = closure_set(G, {s});
    if (rot.count() != m) continue;
    for (int t = 0; t < G.n; ++t) {
      if (rot.test(t)) continue;
      if (element_order(G, t) == 2 && G.conj(s, t) == G.inv(s)) return true;
    }
  }
  return false;
}

bool is_simple(const FiniteGroup& G) {
  if (G.n < 2) return false;
  auto normals = normal_subgroups(G);
  for (const auto& N : normals) {
    int c = N.count();
    if (c != 1 && c != G.n) return false;
  }
  return true;
}

std::vector<int> generating_set(const FiniteGroup& G) {
  std::vector<int> gens;
  EltSet have(G.n);
  have.add(0);
  for (int g = 1; g < G.n && have.count() < G.n; ++g) {
    if (have.test(g)) continue;
    gens.push_back(g);
    have = closure_set(G, gens);
  }
  return gens;
}

namespace {

// Shared backtracking over generator images. Maps gens[i] -> targets[i],
// extends by multiplication closure, prunes on conflicts. Collects witnesses
// until `want_all` is exhausted or a single witness is found.
struct HomSearch {
  const FiniteGroup& G;
  const FiniteGroup& H;
  std::vector<int> gens;
  std::vector<std::vector<int>> word;  // how each element of G is reached:
                                       // word[x] = {y, gi} with x = y*gens[gi]
  std::vector<int> build_order;
  bool want_all = false;
  std::vector<std::vector<uint16_t>> found;

  HomSearch(const FiniteGroup& g, const FiniteGroup& h) : G(g), H(h) {
    gens = generating_set(G);
    word.assign(G.n, {});
    std::vector<int> frontier{0};
    EltSet seen(G.n);
    seen.add(0);
    size_t head = 0;
    while (head < frontier.size()) {
      int x = frontier[head++];
      for (size_t gi = 0; gi < gens.size(); ++gi) {
        int y = G.mul(x, gens[gi]);
        if (!seen.test(y)) {
          seen.add(y);
          word[y] = {x, static_cast<int>(gi)};
          build_order.push_back(y);
          frontier.push_back(y);
        }
      }
    }
  }

  // Completes the image map from generator images; returns empty on conflict.
  std::vector<uint16_t> complete(const std::vector<int>& gimg) const {
    std::vector<uint16_t> img(G.n, 0);
    std::vector<bool> used(H.n, false);
    used[0] = true;
    for (int x : build_order) {
      int y = word[x][0], gi = word[x][1];
      int v = H.mul(img[y], gimg[gi]);
      if (used[v]) return {};
      used[v] = true;
      img[x] = static_cast<uint16_t>(v);
    }
    // Full homomorphism check; the closure construction alone does not
    // guarantee relations are respected.
    for (int a = 0; a < G.n; ++a)
      for (int b = 0; b < G.n; ++b)
        if (img[G.mul(a, b)] != H.mul(img[a], img[b])) return {};
    return img;
  }

  bool rec(size_t i, std::vector<int>& gimg,
           const std::vector<std::vector<int>>& candidates) {
    if (i == gens.size()) {
      auto img = complete(gimg);
      if (img.empty()) return false;
      found.push_back(std::move(img));
      return !want_all;
    }
    for (int c : candidates[i]) {
      gimg[i] = c;
      // Cheap prune: the partial closure must stay injective.
      if (!partial_ok(i, gimg)) continue;
      if (rec(i + 1, gimg, candidates)) return true;
    }
    return false;
  }

  bool partial_ok(size_t upto, const std::vector<int>& gimg) const {
    // Walk the build order but only through elements expressible with the
    // first upto+1 generators; detect image collisions early.
    std::vector<int> img(G.n, -1);
    img[0] = 0;
    std::vector<bool> used(H.n, false);
    used[0] = true;
    for (int x : build_order) {
      int y = word[x][0], gi = word[x][1];
      if (static_cast<size_t>(gi) > upto || img[y] < 0) continue;
      int v = H.mul(img[y], gimg[gi]);
      if (img[x] >= 0) continue;
      if (used[v]) return false;
      used[v] = true;
      img[x] = v;
    }
    return true;
  }

  void run(bool all) {
    want_all = all;
    if (G.n != H.n) return;
    std::vector<std::vector<int>> candidates(gens.size());
    for (size_t i = 0; i < gens.size(); ++i) {
      int ord = element_order(G, gens[i]);
      for (int h = 0; h < H.n; ++h)
        if (element_order(H, h) == ord) candidates[i].push_back(h);
    }
    std::vector<int> gimg(gens.size(), 0);
    if (gens.empty()) {
      // Trivial group.
      found.push_back(std::vector<uint16_t>(G.n, 0));
      return;
    }
    rec(0, gimg, candidates);
  }
};

std::multiset<int> order_profile(const FiniteGroup& G) {
  std::multiset<int> out;
  for (int g = 0; g < G.n; ++g) out.insert(element_order(G, g));
  return out;
}

}  // namespace

std::optional<GroupHom> isomorphism(const FiniteGroup& G,
                                    const FiniteGroup& H) {
  if (G.n != H.n) return std::nullopt;
  if (order_profile(G) != order_profile(H)) return std::nullopt;
  auto sg = structure_queries(G);
  auto sh = structure_queries(H);
  if (sg.is_abelian != sh.is_abelian) return std::nullopt;
  if (sg.center.order() != sh.center.order()) return std::nullopt;
  if (sg.derived.order() != sh.derived.order()) return std::nullopt;
  if (conjugacy_classes(G).size() != conjugacy_classes(H).size())
    return std::nullopt;

  HomSearch search(G, H);
  search.run(false);
  if (search.found.empty()) return std::nullopt;
  return GroupHom{&G, &H, search.found.front()};
}

bool is_isomorphic(const FiniteGroup& G, const FiniteGroup& H) {
  return isomorphism(G, H).has_value();
}

std::vector<std::vector<uint16_t>> group_automorphisms(const FiniteGroup& G,
                                                       size_t cap) {
  HomSearch search(G, G);
  search.run(true);
  if (search.found.size() > cap)
    throw HgrError("automorphism group of the group is too large to list");
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

std::vector<std::vector<uint16_t>> group_automorphism_generators(
    const FiniteGroup& G) {
  auto all = group_automorphisms(G);
  // Greedy: grow a generating subset until its closure covers everything.
  std::set<std::vector<uint16_t>> want(all.begin(), all.end());
  std::vector<std::vector<uint16_t>> gens;
  std::set<std::vector<uint16_t>> have;
  std::vector<uint16_t> id(G.n);
  for (int i = 0; i < G.n; ++i) id[i] = static_cast<uint16_t>(i);
  have.insert(id);
  auto close = [&]() {
    std::queue<std::vector<uint16_t>> todo;
    for (const auto& a : have) todo.push(a);
    while (!todo.empty()) {
      auto cur = todo.front();
      todo.pop();
      for (const auto& g : gens) {
        std::vector<uint16_t> prod(G.n);
        for (int i = 0; i < G.n; ++i) prod[i] = g[cur[i]];
        if (have.insert(prod).second) todo.push(prod);
      }
    }
  };
  for (const auto& a : all) {
    if (have.count(a)) continue;
    gens.push_back(a);
    close();
  }
  return gens;
}

std::vector<SimpleQuotient> normal_subgroups_with_simple_quotient(
    const FiniteGroup& G) {
  if (G.n < 2) throw HgrError("trivial group has no simple quotient");
  auto normals = normal_subgroups(G);
  // Maximal proper normal subgroups: no other proper normal strictly between.
  std::vector<EltSet> maximal;
  for (const auto& N : normals) {
    if (N.count() == G.n) continue;
    bool is_max = true;
    for (const auto& M : normals) {
      if (M.count() == G.n || M.count() <= N.count() || M == N) continue;
      bool contains = true;
      for (size_t i = 0; i < N.w.size() && contains; ++i)
        contains = (N.w[i] & ~M.w[i]) == 0;
      if (contains) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(N);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const EltSet& a, const EltSet& b) {
              if (a.count() != b.count()) return a.count() > b.count();
              return a.w < b.w;
            });
  std::vector<SimpleQuotient> out;
  for (const auto& N : maximal) {
    QuotientGroup q = quotient_group(G, N);
    out.push_back(SimpleQuotient{Subgroup{&G, N}, std::move(q.group),
                                 GroupHom{}});
  }
  // Projections must point at the stored quotient groups; fill after moves.
  size_t idx = 0;
  for (const auto& N : maximal) {
    QuotientGroup q = quotient_group(G, N);
    out[idx].projection =
        GroupHom{&G, &out[idx].quotient, std::move(q.projection.image)};
    ++idx;
  }
  return out;
}

SubgroupGroup sub_group(const FiniteGroup& G, const EltSet& members,
                        const std::string& name) {
  auto elems = members.elements();
  if (elems.empty() || elems.front() != 0)
    throw HgrError("subgroup must contain the identity");
  int m = static_cast<int>(elems.size());
  std::vector<int> from_parent(G.n, -1);
  for (int i = 0; i < m; ++i) from_parent[elems[i]] = i;
  std::vector<uint16_t> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int p = G.mul(elems[a], elems[b]);
      if (from_parent[p] < 0) throw HgrError("member set is not closed");
      table[static_cast<size_t>(a) * m + b] =
          static_cast<uint16_t>(from_parent[p]);
    }
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) labels[i] = G.labels[elems[i]];
  SubgroupGroup out;
  out.group = FiniteGroup::from_table(name, m, std::move(table), std::move(labels));
  out.to_parent.assign(elems.begin(), elems.end());
  out.from_parent = std::move(from_parent);
  return out;
}

QuotientGroup quotient_group(const FiniteGroup& G, const EltSet& N) {
  if (!N.test(0)) throw HgrError("kernel must contain the identity");
  if (!is_normal(G, N)) throw HgrError("kernel is not normal");
  std::vector<int> coset_of(G.n, -1);
  std::vector<uint16_t> reps;
  for (int g = 0; g < G.n; ++g) {
    if (coset_of[g] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<uint16_t>(g));
    for (int h : N.elements()) coset_of[G.mul(h, g)] = id;  // coset N*g
  }
  int q = static_cast<int>(reps.size());
  std::vector<uint16_t> table(static_cast<size_t>(q) * q);
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      table[static_cast<size_t>(a) * q + b] =
          static_cast<uint16_t>(coset_of[G.mul(reps[a], reps[b])]);
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) labels[i] = "[" + G.labels[reps[i]] + "]";
  QuotientGroup out;
  out.group = FiniteGroup::from_table(G.name + "/N" + std::to_string(N.count()),
                                      q, std::move(table), std::move(labels));
  std::vector<uint16_t> img(G.n);
  for (int g = 0; g < G.n; ++g) img[g] = static_cast<uint16_t>(coset_of[g]);
  out.projection = GroupHom{&G, &out.group, std::move(img)};
  out.reps = std::move(reps);
  return out;
}

}  // namespace hgr
