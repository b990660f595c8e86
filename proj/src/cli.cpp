// Command-line surface. Each subcommand binds library calls into one
// reproducible run: the same flags and seed produce byte-identical output.

#include "haarrep/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "haarrep/classify.hpp"
#include "haarrep/construct.hpp"
#include "haarrep/graph_aut.hpp"
#include "haarrep/haar.hpp"
#include "haarrep/json_io.hpp"
#include "haarrep/named.hpp"
#include "haarrep/poset.hpp"

namespace hgr {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitYes = 0;
constexpr int kExitNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

struct GlobalFlags {
  uint64_t seed = 0;
  long long budget = 0;
  int workers = 0;
  std::string output;
  std::string format;
};

// The primary artifact goes to --output when given, stdout otherwise.
void emit(const GlobalFlags& flags, const std::string& text) {
  if (flags.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(flags.output, std::ios::binary);
  if (!out) throw HgrError("cannot open output file " + flags.output);
  out << text;
}

std::string pick_format(const GlobalFlags& flags, const std::string& fallback,
                        const std::vector<std::string>& allowed) {
  std::string f = flags.format.empty() ? fallback : flags.format;
  if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
    throw HgrError("format " + f + " is not available for this command");
  return f;
}

ordered_json json_u128(u128 v) {
  if (v <= (u128(1) << 53)) return ordered_json(static_cast<uint64_t>(v));
  return ordered_json(u128_str(v));
}

EltSet set_from_indices(const FiniteGroup& G, const std::vector<int>& idx) {
  EltSet S(G.n);
  for (int v : idx) {
    if (v < 0 || v >= G.n)
      throw HgrError("--set index " + std::to_string(v) + " is outside 0.." +
                     std::to_string(G.n - 1));
    S.add(v);
  }
  return S;
}

ClassifyOptions options_from(const GlobalFlags& flags) {
  ClassifyOptions opts;
  opts.budget = flags.budget;
  opts.workers = flags.workers;
  opts.seed = flags.seed;
  return opts;
}

// Certificates name groups by catalog spelling; groups loaded from files need
// the --group override to be rebuilt.
FiniteGroup group_for_certificate(const HgrCertificate& cert, const std::string& override_source) {
  FiniteGroup G =
      override_source.empty() ? resolve_group(cert.group) : resolve_group(override_source);
  if (G.n != cert.order)
    throw HgrError("certificate order " + std::to_string(cert.order) +
                   " does not match group of order " + std::to_string(G.n));
  return G;
}

int run_group_show(const GlobalFlags& flags, const std::string& source) {
  pick_format(flags, "json", {"json"});
  emit(flags, group_info_to_json(resolve_group(source)));
  return kExitYes;
}

int run_haar_build(const GlobalFlags& flags, const std::string& source,
                   const std::vector<int>& idx) {
  FiniteGroup G = resolve_group(source);
  HaarGraph H = build_haar(G, set_from_indices(G, idx));
  std::string format = pick_format(flags, "json", {"json", "dot"});
  emit(flags, format == "dot" ? haar_graph_to_dot(H) : haar_graph_to_json(H));
  return kExitYes;
}

int run_haar_aut(const GlobalFlags& flags, const std::string& source,
                 const std::vector<int>& idx) {
  pick_format(flags, "json", {"json"});
  FiniteGroup G = resolve_group(source);
  EltSet S = set_from_indices(G, idx);
  HgrCheck check = is_hgr(G, S, flags.budget);
  ordered_json doc;
  doc["group"] = G.name;
  doc["order"] = G.n;
  doc["connection_set"] = S.elements();
  doc["aut_order"] = json_u128(check.aut_order);
  doc["aut0_order"] = json_u128(check.aut0_order);
  doc["is_hgr"] = check.is_hgr;
  emit(flags, doc.dump(2) + "\n");
  return kExitYes;
}

// Abelian groups cap at aut0_order = |G| with the part swap always present,
// so a nonempty verified set is the success condition, not is_hgr alone.
int run_construct(const GlobalFlags& flags, const std::string& source) {
  pick_format(flags, "json", {"json"});
  HgrCertificate cert = construct_hgr(resolve_group(source), flags.budget, flags.seed);
  emit(flags, certificate_to_json(cert));
  return cert.conn.empty() ? kExitNo : kExitYes;
}

int exit_for(Verdict v) {
  switch (v) {
    case Verdict::yes: return kExitYes;
    case Verdict::no: return kExitNo;
    default: return kExitUnknown;
  }
}

int run_classify_group(const GlobalFlags& flags, const std::string& source) {
  pick_format(flags, "json", {"json"});
  ClassificationReport rep = classify_group(resolve_group(source), options_from(flags));
  emit(flags, classification_to_json(rep));
  return exit_for(rep.admits_hgr);
}

std::pair<int, int> parse_order_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw HgrError("--orders expects a range a..b");
  int a = 0, b = 0;
  try {
    a = std::stoi(text.substr(0, dots));
    b = std::stoi(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw HgrError("--orders expects numeric bounds, got " + text);
  }
  if (a < 3 || b < a) throw HgrError("--orders range must satisfy 3 <= a <= b");
  return {a, b};
}

int run_classify_orders(const GlobalFlags& flags, const std::string& range) {
  auto [lo, hi] = parse_order_range(range);
  TablesReport full = reproduce_tables(hi, options_from(flags));
  TablesReport rep;
  rep.all_match = true;
  for (const TableRow& row : full.rows)
    if (row.order >= lo) {
      rep.rows.push_back(row);
      rep.all_match = rep.all_match && row.match;
    }
  std::string format = pick_format(flags, "csv", {"csv", "json"});
  emit(flags, format == "json" ? tables_to_json(rep) : tables_to_csv(rep));
  return rep.all_match ? kExitYes : kExitNo;
}

int run_tables(const GlobalFlags& flags, int max_order) {
  if (max_order < 3) throw HgrError("--max-order must be at least 3");
  TablesReport rep = reproduce_tables(max_order, options_from(flags));
  std::string format = pick_format(flags, "csv", {"csv", "json"});
  emit(flags, format == "json" ? tables_to_json(rep) : tables_to_csv(rep));
  return rep.all_match ? kExitYes : kExitNo;
}

int run_cayley_check(const GlobalFlags& flags, const std::string& source) {
  pick_format(flags, "json", {"json"});
  CayleyReport rep = every_haar_is_cayley(resolve_group(source), options_from(flags));
  emit(flags, cayley_report_to_json(rep));
  return exit_for(rep.verdict);
}

int run_poset(const GlobalFlags& flags, const std::string& cert_path,
              const std::string& group_source) {
  HgrCertificate cert = load_certificate(cert_path);
  FiniteGroup G = group_for_certificate(cert, group_source);
  Poset P = haar_to_poset(build_haar(G, cert.conn));
  std::string format = pick_format(flags, "json", {"json", "dot"});
  if (format == "dot") {
    emit(flags, poset_to_dot(P));
    return kExitYes;
  }
  emit(flags, poset_report_to_json(poset_representation_report(P, flags.budget)));
  return kExitYes;
}

int run_ideals(const GlobalFlags& flags, const std::string& cert_path,
               const std::string& group_source) {
  pick_format(flags, "json", {"json"});
  HgrCertificate cert = load_certificate(cert_path);
  FiniteGroup G = group_for_certificate(cert, group_source);
  LatticeBoundReport rep = lattice_bound_check(G, cert.conn);
  emit(flags, lattice_report_to_json(rep));
  return rep.within ? kExitYes : kExitNo;
}

// Positive certificates are re-verified by a fresh engine run. Negative ones
// summarize an exhaustive scan that a single set cannot witness, so only
// their structural shape is checked.
int run_verify(const GlobalFlags& flags, const std::string& cert_path,
               const std::string& group_source) {
  pick_format(flags, "json", {"json"});
  HgrCertificate cert = load_certificate(cert_path);
  FiniteGroup G = group_for_certificate(cert, group_source);
  std::vector<std::string> mismatches;
  bool negative = cert.conn.empty() && !cert.is_hgr;
  if (negative) {
    if (cert.aut_order != 0 || cert.aut0_order != 0)
      mismatches.push_back("negative certificate carries nonzero aut orders");
    if (cert.method != "exceptional" && cert.method != "trivial")
      mismatches.push_back("negative certificate has method " + cert.method);
    if (!cert.verified) mismatches.push_back("certificate is not marked verified");
  } else {
    HgrCheck check = is_hgr(G, cert.conn, flags.budget);
    if (check.is_hgr != cert.is_hgr)
      mismatches.push_back(std::string("is_hgr recomputes to ") +
                           (check.is_hgr ? "true" : "false"));
    if (check.aut_order != cert.aut_order)
      mismatches.push_back("aut_order stated " + u128_str(cert.aut_order) + ", recomputed " +
                           u128_str(check.aut_order));
    if (check.aut0_order != cert.aut0_order)
      mismatches.push_back("aut0_order stated " + u128_str(cert.aut0_order) + ", recomputed " +
                           u128_str(check.aut0_order));
    if (cert.window != window_holds(G.n, cert.conn.count()))
      mismatches.push_back("window flag disagrees with the set size");
    if (!cert.verified) mismatches.push_back("certificate is not marked verified");
  }
  ordered_json doc;
  doc["group"] = cert.group;
  doc["order"] = cert.order;
  doc["negative"] = negative;
  doc["consistent"] = mismatches.empty();
  doc["mismatches"] = mismatches;
  emit(flags, doc.dump(2) + "\n");
  return mismatches.empty() ? kExitYes : kExitNo;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Haar graphical representations of finite groups"};
  app.name("haarrep");
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--seed", flags.seed, "seed for randomized search paths");
  app.add_option("--budget", flags.budget, "search node budget, 0 for the default");
  app.add_option("--workers", flags.workers, "worker threads, 0 for the library default");
  app.add_option("--output", flags.output, "write the artifact to this file instead of stdout");
  app.add_option("--format", flags.format, "json, csv, or dot where the command supports it")
      ->check(CLI::IsMember({"json", "csv", "dot"}));

  int rc = kExitYes;
  std::string source, range, cert_path, group_source;
  std::vector<int> set_indices;
  int max_order = 12;

  CLI::App* group_cmd = app.add_subcommand("group", "inspect a group");
  group_cmd->require_subcommand(1);
  CLI::App* group_show = group_cmd->add_subcommand("show", "print group facts");
  group_show->add_option("source", source, "catalog name or group file")->required();
  group_show->callback([&] { rc = run_group_show(flags, source); });

  CLI::App* haar_cmd = app.add_subcommand("haar", "work with one Haar graph");
  haar_cmd->require_subcommand(1);
  CLI::App* haar_build = haar_cmd->add_subcommand("build", "emit the graph");
  haar_build->add_option("source", source, "catalog name or group file")->required();
  haar_build->add_option("--set", set_indices, "connection set as element indices")
      ->required()
      ->delimiter(',');
  haar_build->callback([&] { rc = run_haar_build(flags, source, set_indices); });
  CLI::App* haar_aut = haar_cmd->add_subcommand("aut", "automorphism orders");
  haar_aut->add_option("source", source, "catalog name or group file")->required();
  haar_aut->add_option("--set", set_indices, "connection set as element indices")
      ->required()
      ->delimiter(',');
  haar_aut->callback([&] { rc = run_haar_aut(flags, source, set_indices); });

  CLI::App* construct_cmd =
      app.add_subcommand("construct", "build a verified representation certificate");
  construct_cmd->add_option("source", source, "catalog name or group file")->required();
  construct_cmd->callback([&] { rc = run_construct(flags, source); });

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "exhaustive subset-class verdicts");
  CLI::Option* classify_source =
      classify_cmd->add_option("source", source, "catalog name or group file");
  CLI::Option* classify_orders =
      classify_cmd->add_option("--orders", range, "inclusive catalog order range a..b");
  classify_source->excludes(classify_orders);
  classify_cmd->callback([&] {
    if (!range.empty())
      rc = run_classify_orders(flags, range);
    else if (!source.empty())
      rc = run_classify_group(flags, source);
    else
      throw CLI::RequiredError("classify needs a group source or --orders");
  });

  CLI::App* tables_cmd = app.add_subcommand("tables", "reproduce the exception tables");
  tables_cmd->add_option("--max-order", max_order, "largest catalog order to include");
  tables_cmd->callback([&] { rc = run_tables(flags, max_order); });

  CLI::App* cayley_cmd =
      app.add_subcommand("cayley-check", "is every Haar graph over the group Cayley");
  cayley_cmd->add_option("source", source, "catalog name or group file")->required();
  cayley_cmd->callback([&] { rc = run_cayley_check(flags, source); });

  CLI::App* poset_cmd = app.add_subcommand("poset", "poset report for a certificate");
  poset_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();
  poset_cmd->add_option("--group", group_source, "rebuild the group from this source");
  poset_cmd->callback([&] { rc = run_poset(flags, cert_path, group_source); });

  CLI::App* ideals_cmd =
      app.add_subcommand("ideals", "order-ideal count against the lattice bound");
  ideals_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();
  ideals_cmd->add_option("--group", group_source, "rebuild the group from this source");
  ideals_cmd->callback([&] { rc = run_ideals(flags, cert_path, group_source); });

  CLI::App* verify_cmd = app.add_subcommand("verify", "recompute a stored certificate");
  verify_cmd->add_option("certificate", cert_path, "certificate JSON file")->required();
  verify_cmd->add_option("--group", group_source, "rebuild the group from this source");
  verify_cmd->callback([&] { rc = run_verify(flags, cert_path, group_source); });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitYes : kExitUsage;
  } catch (const ResourceLimit& e) {
    std::cerr << "unknown: " << e.what() << "\n";
    return kExitUnknown;
  } catch (const HgrError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}

}  // namespace hgr
