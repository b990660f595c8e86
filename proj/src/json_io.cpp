#include "haarrep/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hgr {

namespace {

using ordered_json = nlohmann::ordered_json;

// Numbers above 2^53 lose precision as JSON doubles; emit those as strings.
ordered_json u128_field(u128 v) {
  if (v <= (u128{1} << 53)) return static_cast<uint64_t>(v);
  return u128_str(v);
}

u128 u128_from(const nlohmann::json& j) {
  if (j.is_string()) return parse_u128(j.get<std::string>());
  return static_cast<u128>(j.get<uint64_t>());
}

std::string verdict_field(Verdict v) { return verdict_name(v); }

}  // namespace

std::string certificate_to_json(const HgrCertificate& cert) {
  ordered_json j;
  j["group"] = cert.group;
  j["order"] = cert.order;
  j["connection_set"] = cert.conn.elements();
  j["aut_order"] = u128_field(cert.aut_order);
  j["aut0_order"] = u128_field(cert.aut0_order);
  j["is_hgr"] = cert.is_hgr;
  j["method"] = cert.method;
  j["window"] = cert.window;
  j["verified"] = cert.verified;
  return j.dump(2) + "\n";
}

HgrCertificate certificate_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  HgrCertificate cert;
  cert.group = j.at("group").get<std::string>();
  cert.order = j.at("order").get<int>();
  if (cert.order < 1 || cert.order > FiniteGroup::kMaxOrder)
    throw HgrError("certificate order out of range");
  cert.conn = EltSet(cert.order);
  for (int x : j.at("connection_set").get<std::vector<int>>()) {
    if (x < 0 || x >= cert.order) throw HgrError("certificate connection set index out of range");
    cert.conn.add(x);
  }
  cert.aut_order = u128_from(j.at("aut_order"));
  cert.aut0_order = u128_from(j.at("aut0_order"));
  cert.is_hgr = j.at("is_hgr").get<bool>();
  cert.method = j.at("method").get<std::string>();
  cert.window = j.at("window").get<bool>();
  cert.verified = j.at("verified").get<bool>();
  return cert;
}

void save_certificate(const HgrCertificate& cert, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw HgrError("cannot open " + path + " for writing");
  out << certificate_to_json(cert);
}

HgrCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw HgrError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return certificate_from_json(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw HgrError(path + ": " + e.what());
  }
}

std::string haar_graph_to_json(const HaarGraph& H) {
  ordered_json j;
  j["n"] = H.n();
  j["S"] = H.conn.elements();
  std::vector<std::vector<int>> edges;
  for (int x = 0; x < H.n(); ++x)
    for (int y = H.n(); y < 2 * H.n(); ++y)
      if (H.graph.has(x, y)) edges.push_back({x, y});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string haar_graph_to_dot(const HaarGraph& H) {
  std::ostringstream out;
  int n = H.n();
  out << "graph haar {\n  rankdir=BT;\n  { rank=same;";
  for (int x = 0; x < n; ++x) out << " b" << x << ";";
  out << " }\n  { rank=same;";
  for (int y = 0; y < n; ++y) out << " t" << y << ";";
  out << " }\n";
  for (int x = 0; x < n; ++x)
    out << "  b" << x << " [label=\"(" << H.group.labels[x] << ",-1)\"];\n";
  for (int y = 0; y < n; ++y)
    out << "  t" << y << " [label=\"(" << H.group.labels[y] << ",+1)\"];\n";
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (H.graph.has(x, n + y)) out << "  b" << x << " -- t" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string poset_to_json(const Poset& P) {
  ordered_json j;
  j["elements"] = P.elements;
  std::vector<std::vector<int>> strict;
  for (int b = 0; b < P.elements; ++b)
    for (int a = 0; a < P.elements; ++a)
      if (a != b && P.leq(a, b)) strict.push_back({a, b});
  j["strict"] = strict;
  return j.dump(2) + "\n";
}

std::string poset_to_dot(const Poset& P) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n";
  for (int b = 0; b < P.elements; ++b)
    for (int a = 0; a < P.elements; ++a)
      if (a != b && P.leq(a, b)) out << "  e" << a << " -> e" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string group_info_to_json(const FiniteGroup& G) {
  ordered_json j;
  j["name"] = G.name;
  j["order"] = G.n;
  j["abelian"] = is_abelian(G);
  j["cyclic"] = is_cyclic(G);
  j["dihedral"] = is_dihedral(G);
  StructureInfo info = structure_queries(G);
  j["center_order"] = info.center.order();
  j["derived_order"] = info.derived.order();
  j["conjugacy_classes"] = conjugacy_classes(G).size();
  int expo = 1;
  for (int x = 0; x < G.n; ++x) expo = std::lcm(expo, element_order(G, x));
  j["exponent"] = expo;
  j["labels"] = G.labels;
  return j.dump(2) + "\n";
}

namespace {

ordered_json witness_field(const std::optional<EltSet>& w) {
  if (!w) return nullptr;
  return w->elements();
}

}  // namespace

std::string classification_to_json(const ClassificationReport& rep) {
  ordered_json j;
  j["group"] = rep.group;
  j["order"] = rep.order;
  j["admits_hgr"] = verdict_field(rep.admits_hgr);
  j["admits_rigid_bipartition"] = verdict_field(rep.admits_rigid_bipartition);
  j["hgr_witness"] = witness_field(rep.hgr_witness);
  j["rigid_witness"] = witness_field(rep.rigid_witness);
  j["class_count"] = rep.class_count;
  j["classes_failed"] = rep.classes_failed;
  j["exhaustive"] = rep.exhaustive;
  return j.dump(2) + "\n";
}

std::string cayley_report_to_json(const CayleyReport& rep) {
  ordered_json j;
  j["group"] = rep.group;
  j["order"] = rep.order;
  j["every_haar_is_cayley"] = verdict_field(rep.verdict);
  j["witness"] = witness_field(rep.witness);
  j["classes_total"] = rep.classes_total;
  j["classes_decided"] = rep.classes_decided;
  j["undecided"] = rep.undecided;
  return j.dump(2) + "\n";
}

std::string tables_to_json(const TablesReport& rep) {
  ordered_json rows = ordered_json::array();
  for (const TableRow& r : rep.rows) {
    ordered_json j;
    j["order"] = r.order;
    j["group"] = r.group;
    j["expected_t1"] = r.expected_t1;
    j["computed_t1"] = verdict_field(r.computed_t1);
    j["expected_t2"] = r.expected_t2;
    j["computed_t2"] = verdict_field(r.computed_t2);
    j["exhaustive"] = r.exhaustive;
    j["match"] = r.match;
    rows.push_back(std::move(j));
  }
  ordered_json j;
  j["rows"] = std::move(rows);
  j["all_match"] = rep.all_match;
  return j.dump(2) + "\n";
}

std::string tables_to_csv(const TablesReport& rep) {
  std::ostringstream out;
  out << "order,group,expected_t1,computed_t1,expected_t2,computed_t2,exhaustive,match\n";
  for (const TableRow& r : rep.rows) {
    out << r.order << ',' << r.group << ',' << (r.expected_t1 ? "yes" : "no") << ','
        << verdict_name(r.computed_t1) << ',' << (r.expected_t2 ? "yes" : "no") << ','
        << verdict_name(r.computed_t2) << ',' << (r.exhaustive ? "exhaustive" : "randomized")
        << ',' << (r.match ? "match" : "mismatch") << '\n';
  }
  return out.str();
}

std::string poset_report_to_json(const PosetReport& rep) {
  ordered_json j;
  j["aut_order"] = u128_field(rep.aut_order);
  j["semiregular"] = rep.semiregular;
  j["orbit_count"] = rep.orbit_count;
  return j.dump(2) + "\n";
}

std::string lattice_report_to_json(const LatticeBoundReport& rep) {
  ordered_json j;
  j["ideal_count"] = u128_field(rep.ideal_count);
  j["bound"] = u128_field(rep.bound);
  j["within"] = rep.within;
  j["window"] = rep.window;
  j["premise"] = rep.premise;
  j["footnote_bound"] = u128_field(rep.footnote_bound);
  j["footnote_within"] = rep.footnote_within;
  j["degenerate"] = rep.degenerate;
  return j.dump(2) + "\n";
}

}  // namespace hgr
