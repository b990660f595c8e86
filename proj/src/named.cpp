// Named group families, the compact name parser, and the shipped catalog.
// Everything funnels into FiniteGroup::from_table so the type invariants are
// validated once, in one place.

#include "haarrep/named.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>

#include "json.hpp"

#include "haarrep/base.hpp"

namespace hgr {
namespace {

using json = nlohmann::json;

FiniteGroup build_cyclic(long long n) {
  if (n < 1 || n > FiniteGroup::kMaxOrder) throw HgrError("cyclic: bad order");
  int m = static_cast<int>(n);
  std::vector<uint16_t> table(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) table[static_cast<size_t>(a) * m + b] = static_cast<uint16_t>((a + b) % m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) labels[a] = a == 0 ? "1" : (a == 1 ? "x" : "x^" + std::to_string(a));
  return FiniteGroup::from_table("C" + std::to_string(m), m, table, labels);
}

FiniteGroup build_abelian(const std::vector<long long>& ns) {
  if (ns.empty()) throw HgrError("abelian: no factors");
  long long order = 1;
  for (long long n : ns) {
    if (n < 1) throw HgrError("abelian: bad factor");
    order *= n;
    if (order > FiniteGroup::kMaxOrder) throw HgrError("abelian: order exceeds table cap");
  }
  int m = static_cast<int>(order);
  int k = static_cast<int>(ns.size());
  // Mixed-radix encoding, last factor fastest.
  auto decode = [&](int idx) {
    std::vector<int> v(k);
    for (int i = k - 1; i >= 0; --i) {
      v[i] = idx % static_cast<int>(ns[i]);
      idx /= static_cast<int>(ns[i]);
    }
    return v;
  };
  auto encode = [&](const std::vector<int>& v) {
    int idx = 0;
    for (int i = 0; i < k; ++i) idx = idx * static_cast<int>(ns[i]) + v[i];
    return idx;
  };
  std::vector<uint16_t> table(static_cast<size_t>(m) * m);
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    auto va = decode(a);
    std::string lab = "(";
    for (int i = 0; i < k; ++i) lab += (i ? "," : "") + std::to_string(va[i]);
    labels[a] = lab + ")";
    for (int b = 0; b < m; ++b) {
      auto vb = decode(b);
      std::vector<int> vc(k);
      for (int i = 0; i < k; ++i) vc[i] = (va[i] + vb[i]) % static_cast<int>(ns[i]);
      table[static_cast<size_t>(a) * m + b] = static_cast<uint16_t>(encode(vc));
    }
  }
  std::string name;
  for (size_t i = 0; i < ns.size(); ++i) name += (i ? "x" : "") + ("C" + std::to_string(ns[i]));
  return FiniteGroup::from_table(name, m, table, labels);
}

// Elements r^i f^e with f r f = r^-1; index = i + m*e.
FiniteGroup build_dihedral(long long order) {
  if (order < 2 || order % 2 != 0 || order > FiniteGroup::kMaxOrder)
    throw HgrError("dihedral: order must be even and positive");
  int m = static_cast<int>(order / 2);
  int n = static_cast<int>(order);
  auto mul = [&](int a, int b) {
    int i = a % m, e = a / m, j = b % m, g = b / m;
    int k = e == 0 ? (i + j) % m : ((i - j) % m + m) % m;
    return k + m * ((e + g) % 2);
  };
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(mul(a, b));
  std::vector<std::string> labels(n);
  for (int i = 0; i < m; ++i) {
    std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
    labels[i] = i == 0 ? "1" : rot;
    labels[m + i] = i == 0 ? "f" : rot + "*f";
  }
  return FiniteGroup::from_table("D" + std::to_string(n), n, table, labels);
}

// <x,y | x^{2m}=1, y^2=x^m, y^-1 x y = x^-1>; elements x^i y^e, index i + 2m*e.
FiniteGroup build_dicyclic(long long order) {
  if (order < 4 || order % 4 != 0 || order > FiniteGroup::kMaxOrder)
    throw HgrError("dicyclic: order must be a positive multiple of 4");
  int m = static_cast<int>(order / 4);
  int n = static_cast<int>(order);
  int twom = 2 * m;
  auto mul = [&](int a, int b) {
    int i = a % twom, e = a / twom, j = b % twom, g = b / twom;
    int k = e == 0 ? (i + j) % twom : ((i - j) % twom + twom) % twom;
    int h = e + g;
    if (h == 2) {
      k = (k + m) % twom;
      h = 0;
    }
    return k + twom * h;
  };
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(mul(a, b));
  std::vector<std::string> labels(n);
  for (int i = 0; i < twom; ++i) {
    std::string p = i == 0 ? "" : (i == 1 ? "x" : "x^" + std::to_string(i));
    labels[i] = i == 0 ? "1" : p;
    labels[twom + i] = i == 0 ? "y" : p + "*y";
  }
  std::string name = order == 8 ? "Q8" : "Dic" + std::to_string(order);
  return FiniteGroup::from_table(name, n, table, labels);
}

std::string cycle_label(const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  std::vector<bool> seen(k, false);
  std::string out;
  for (int i = 0; i < k; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      out += (first ? "" : " ") + std::to_string(j);
      first = false;
      j = p[j];
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

FiniteGroup group_from_perm_list(std::vector<std::vector<int>> elems, const std::string& name) {
  std::sort(elems.begin(), elems.end());
  int n = static_cast<int>(elems.size());
  if (n > FiniteGroup::kMaxOrder)
    throw HgrError(name + ": order " + std::to_string(n) + " exceeds the 4096 table cap");
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) index[elems[i]] = i;
  int k = static_cast<int>(elems[0].size());
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  std::vector<int> comp(k);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      for (int i = 0; i < k; ++i) comp[i] = elems[a][elems[b][i]];
      auto it = index.find(comp);
      if (it == index.end()) throw HgrError(name + ": element list not closed");
      table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(it->second);
    }
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = cycle_label(elems[i]);
  return FiniteGroup::from_table(name, n, table, labels);
}

bool perm_is_even(const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  std::vector<bool> seen(k, false);
  int transpositions = 0;
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    int len = 0, j = i;
    while (!seen[j]) {
      seen[j] = true;
      ++len;
      j = p[j];
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

FiniteGroup build_symmetric_like(long long k, bool even_only) {
  if (k < 1 || k > 7) throw HgrError("symmetric/alternating: degree must be 1..7");
  std::vector<int> p(static_cast<size_t>(k));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> elems;
  do {
    if (!even_only || perm_is_even(p)) elems.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::string name = (even_only ? "A" : "S") + std::to_string(k);
  return group_from_perm_list(std::move(elems), name);
}

// <e1,e2,x | e1^3=e2^3=x^2=[e1,e2]=1, e1^x=e1^-1, e2^x=e2^-1>.
// Elements e1^a e2^b x^c, index = (a*3+b) + 9*c.
FiniteGroup build_g18() {
  int n = 18;
  auto mul = [&](int u, int v) {
    int a = (u % 9) / 3, b = u % 3, c = u / 9;
    int d = (v % 9) / 3, e = v % 3, f = v / 9;
    int sign = c == 0 ? 1 : -1;
    int a2 = ((a + sign * d) % 3 + 3) % 3;
    int b2 = ((b + sign * e) % 3 + 3) % 3;
    return (a2 * 3 + b2) + 9 * ((c + f) % 2);
  };
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(mul(a, b));
  std::vector<std::string> labels(n);
  for (int u = 0; u < n; ++u) {
    int a = (u % 9) / 3, b = u % 3, c = u / 9;
    std::string lab;
    if (a) lab += a == 1 ? "e1" : "e1^2";
    if (b) lab += std::string(lab.empty() ? "" : "*") + (b == 1 ? "e2" : "e2^2");
    if (c) lab += std::string(lab.empty() ? "" : "*") + "x";
    labels[u] = lab.empty() ? "1" : lab;
  }
  return FiniteGroup::from_table("G18", n, table, labels);
}

long long powmod(long long base, long long exp, long long mod) {
  long long r = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

// C_m : C_k with (i,j)*(i',j') = (i + e^j i' mod m, j + j' mod k).
// Index = j*m + i so the C_m part occupies 0..m-1.
FiniteGroup build_semidirect_cc(long long m, long long k, long long e) {
  if (m < 1 || k < 1 || m * k > FiniteGroup::kMaxOrder) throw HgrError("semidirect: bad orders");
  e = ((e % m) + m) % m;
  if (std::gcd(e, m) != 1) throw HgrError("semidirect: action exponent not invertible");
  if (powmod(e, k, m) != 1 % m) throw HgrError("semidirect: e^k != 1 (mod m), relation check fails");
  int n = static_cast<int>(m * k);
  std::vector<long long> epow(static_cast<size_t>(k));
  for (long long j = 0; j < k; ++j) epow[j] = powmod(e, j, m);
  auto mul = [&](int u, int v) {
    long long i = u % m, j = u / m, i2 = v % m, j2 = v / m;
    long long ii = (i + epow[j] * i2) % m;
    long long jj = (j + j2) % k;
    return static_cast<int>(jj * m + ii);
  };
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(mul(a, b));
  std::vector<std::string> labels(n);
  for (int u = 0; u < n; ++u) labels[u] = "(" + std::to_string(u % m) + "," + std::to_string(u / m) + ")";
  std::string name = "C" + std::to_string(m) + ":C" + std::to_string(k) + "@" + std::to_string(e);
  return FiniteGroup::from_table(name, n, table, labels);
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B) {
  long long order = static_cast<long long>(A.n) * B.n;
  if (order > FiniteGroup::kMaxOrder) throw HgrError("direct_product: order exceeds table cap");
  int n = static_cast<int>(order);
  std::vector<uint16_t> table(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  // Index = a*|B| + b; identity (0,0) stays at 0.
  for (int a = 0; a < A.n; ++a)
    for (int b = 0; b < B.n; ++b) {
      int u = a * B.n + b;
      labels[u] = "(" + A.labels[a] + "," + B.labels[b] + ")";
      for (int c = 0; c < A.n; ++c)
        for (int d = 0; d < B.n; ++d) {
          int v = c * B.n + d;
          table[static_cast<size_t>(u) * n + v] =
              static_cast<uint16_t>(A.mul(a, c) * B.n + B.mul(b, d));
        }
    }
  return FiniteGroup::from_table(A.name + "x" + B.name, n, table, labels);
}

FiniteGroup make_named(const NamedGroupSpec& spec) {
  const auto& f = spec.family;
  auto want = [&](size_t c) {
    if (spec.params.size() != c) throw HgrError("make_named: family " + f + " expects " + std::to_string(c) + " parameter(s)");
  };
  if (f == "trivial") {
    want(0);
    return build_cyclic(1);
  }
  if (f == "cyclic") {
    want(1);
    return build_cyclic(spec.params[0]);
  }
  if (f == "abelian") return build_abelian(spec.params);
  if (f == "dihedral") {
    want(1);
    return build_dihedral(spec.params[0]);
  }
  if (f == "dicyclic") {
    want(1);
    return build_dicyclic(spec.params[0]);
  }
  if (f == "alternating") {
    want(1);
    return build_symmetric_like(spec.params[0], true);
  }
  if (f == "symmetric") {
    want(1);
    return build_symmetric_like(spec.params[0], false);
  }
  if (f == "g18") {
    want(0);
    return build_g18();
  }
  if (f == "semidirect_cc") {
    want(3);
    return build_semidirect_cc(spec.params[0], spec.params[1], spec.params[2]);
  }
  if (f == "product") {
    if (spec.factors.size() < 2) throw HgrError("make_named: product needs at least two factors");
    FiniteGroup g = make_named(spec.factors[0]);
    for (size_t i = 1; i < spec.factors.size(); ++i) g = direct_product(g, make_named(spec.factors[i]));
    return g;
  }
  throw HgrError("make_named: unsupported family " + f);
}

NamedGroupSpec parse_group_name(const std::string& name) {
  // Split on 'x' first; no atom contains that letter.
  if (name.find('x') != std::string::npos) {
    NamedGroupSpec prod;
    prod.family = "product";
    std::stringstream in(name);
    std::string part;
    while (std::getline(in, part, 'x')) {
      if (part.empty()) throw HgrError("parse_group_name: empty product factor in " + name);
      prod.factors.push_back(parse_group_name(part));
    }
    if (prod.factors.size() < 2) throw HgrError("parse_group_name: bad product " + name);
    return prod;
  }
  static const std::regex re_power(R"(^C(\d+)\^(\d+)$)");
  static const std::regex re_semi(R"(^C(\d+):C(\d+)@(\d+)$)");
  static const std::regex re_cyclic(R"(^C(\d+)$)");
  static const std::regex re_dihedral(R"(^D(\d+)$)");
  static const std::regex re_dicyclic(R"(^(?:Dic|Q)(\d+)$)");
  static const std::regex re_alt(R"(^A(\d+)$)");
  static const std::regex re_sym(R"(^S(\d+)$)");
  std::smatch m;
  NamedGroupSpec s;
  if (name == "G18") {
    s.family = "g18";
    return s;
  }
  if (std::regex_match(name, m, re_power)) {
    s.family = "abelian";
    long long base = std::stoll(m[1]), exp = std::stoll(m[2]);
    if (exp < 1 || exp > 12) throw HgrError("parse_group_name: bad exponent in " + name);
    for (long long i = 0; i < exp; ++i) s.params.push_back(base);
    return s;
  }
  if (std::regex_match(name, m, re_semi)) {
    s.family = "semidirect_cc";
    s.params = {std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3])};
    return s;
  }
  auto one = [&](const std::regex& re, const char* fam) {
    if (!std::regex_match(name, m, re)) return false;
    s.family = fam;
    s.params = {std::stoll(m[1])};
    return true;
  };
  if (one(re_cyclic, "cyclic") || one(re_dihedral, "dihedral") || one(re_dicyclic, "dicyclic") ||
      one(re_alt, "alternating") || one(re_sym, "symmetric"))
    return s;
  throw HgrError("parse_group_name: cannot parse \"" + name + "\"");
}

FiniteGroup group_by_name(const std::string& name) {
  FiniteGroup g = make_named(parse_group_name(name));
  g.name = name;
  return g;
}

FiniteGroup group_from_generators(int degree, const std::vector<std::vector<int>>& gens, int cap) {
  if (degree < 1) throw HgrError("group_from_generators: degree must be positive");
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != degree) throw HgrError("group_from_generators: generator has wrong degree");
    std::vector<bool> hit(degree, false);
    for (int v : g) {
      if (v < 0 || v >= degree || hit[v]) throw HgrError("group_from_generators: not a permutation");
      hit[v] = true;
    }
  }
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> elems{id};
  seen[id] = 0;
  for (size_t head = 0; head < elems.size(); ++head) {
    std::vector<int> cur = elems[head];
    for (const auto& g : gens) {
      std::vector<int> nxt(degree);
      for (int i = 0; i < degree; ++i) nxt[i] = cur[g[i]];
      if (seen.emplace(nxt, static_cast<int>(elems.size())).second) {
        elems.push_back(nxt);
        if (static_cast<int>(elems.size()) > cap)
          throw HgrError("group_from_generators: closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  return group_from_perm_list(std::move(elems), "perm-closure");
}

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("HAARREP_DATA_DIR")) return env;
#ifdef HAARREP_DATA_DIR
  return HAARREP_DATA_DIR;
#else
  return "data";
#endif
}

std::vector<CatalogEntry> load_catalog() {
  std::string path = data_dir() + "/catalog.json";
  std::ifstream in(path);
  if (!in) throw HgrError("catalog: cannot open " + path);
  json doc = json::parse(in);
  std::vector<CatalogEntry> out;
  for (const auto& row : doc.at("groups")) {
    CatalogEntry e;
    e.name = row.at("name").get<std::string>();
    e.order = row.at("order").get<int>();
    e.t1 = row.at("t1").get<bool>();
    e.t2 = row.at("t2").get<bool>();
    e.t3 = row.at("t3").get<bool>();
    if (row.contains("note")) e.note = row.at("note").get<std::string>();
    e.spec = parse_group_name(e.name);
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

const CatalogEntry* catalog_find(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

FiniteGroup catalog_group(const std::string& name) {
  const CatalogEntry* e = catalog_find(name);
  if (!e) throw HgrError("catalog: no group named " + name);
  FiniteGroup g = make_named(e->spec);
  g.name = e->name;
  return g;
}

FiniteGroup resolve_group(const std::string& source) {
  std::ifstream in(source);
  if (in) try {
    json doc = json::parse(in);
    std::string kind = doc.at("kind").get<std::string>();
    FiniteGroup g = [&] {
      if (kind == "table") {
        auto rows = doc.at("mul").get<std::vector<std::vector<int>>>();
        int n = static_cast<int>(rows.size());
        std::vector<uint16_t> table;
        table.reserve(static_cast<size_t>(n) * n);
        for (const auto& r : rows) {
          if (static_cast<int>(r.size()) != n) throw HgrError(source + ": mul table is not square");
          for (int v : r) table.push_back(static_cast<uint16_t>(v));
        }
        return FiniteGroup::from_table(doc.value("name", source), n, table);
      }
      if (kind == "permutation")
        return group_from_generators(doc.at("degree").get<int>(),
                                     doc.at("generators").get<std::vector<std::vector<int>>>());
      if (kind == "presentation") {
        NamedGroupSpec spec;
        spec.family = doc.at("family").get<std::string>();
        if (doc.contains("params")) spec.params = doc.at("params").get<std::vector<long long>>();
        return make_named(spec);
      }
      throw HgrError(source + ": unknown group kind " + kind);
    }();
    if (doc.contains("name")) g.name = doc.at("name").get<std::string>();
    if (doc.contains("order") && doc.at("order").get<int>() != g.n)
      throw HgrError(source + ": declared order " + std::to_string(doc.at("order").get<int>()) +
                     " does not match computed order " + std::to_string(g.n));
    return g;
  } catch (const json::exception& e) {
    throw HgrError(source + ": " + e.what());
  }
  return group_by_name(source);
}

}  // namespace hgr
