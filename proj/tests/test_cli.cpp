#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "haarrep/cli.hpp"

using namespace hgr;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/hgr_cli_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }

  std::string slurp() const {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  void write(const std::string& text) const {
    std::ofstream out(path);
    out << text;
  }
};

int cli(std::vector<std::string> args) { return run_cli(args); }

}  // namespace

TEST_CASE("group show") {
  TempFile out("group.json");
  CHECK(cli({"group", "show", "C12", "--output", out.path}) == 0);
  json j = json::parse(out.slurp());
  CHECK(j["name"] == "C12");
  CHECK(j["order"] == 12);
  CHECK(j["cyclic"] == true);

  CHECK(cli({"group", "show", "NoSuchGroup"}) == 64);
  CHECK(cli({"group", "show"}) == 64);
  CHECK(cli({"group"}) == 64);
}

TEST_CASE("haar build") {
  TempFile out("haar.json");
  CHECK(cli({"haar", "build", "C4", "--set", "0,1", "--output", out.path}) == 0);
  json j = json::parse(out.slurp());
  CHECK(j["n"] == 4);
  CHECK(j["edges"].size() == 8);

  TempFile dot("haar.dot");
  CHECK(cli({"haar", "build", "C4", "--set", "0,1", "--format", "dot", "--output", dot.path}) ==
        0);
  CHECK(dot.slurp().rfind("graph haar {", 0) == 0);

  CHECK(cli({"haar", "build", "C4", "--set", "0,9"}) == 64);
  CHECK(cli({"haar", "build", "C4", "--set", "0,1", "--format", "csv"}) == 64);
  CHECK(cli({"haar", "build", "C4"}) == 64);
  CHECK(cli({"haar"}) == 64);
}

TEST_CASE("haar aut") {
  TempFile out("aut.json");
  CHECK(cli({"haar", "aut", "C8", "--set", "0,1,2,5", "--output", out.path}) == 0);
  json j = json::parse(out.slurp());
  CHECK(j["group"] == "C8");
  CHECK(j["aut_order"] == 64);
  CHECK(j["aut0_order"] == 32);
  CHECK(j["is_hgr"] == false);
}

TEST_CASE("haar aut respects the node budget") {
  // The complete bipartite graph on 16+16 refines to nothing, so any honest
  // search needs far more than ten nodes.
  int rc = cli({"haar", "aut", "C16", "--set", "0,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15",
                "--budget", "10"});
  CHECK(rc == 2);
}

TEST_CASE("construct") {
  TempFile a("cert_a.json");
  TempFile b("cert_b.json");
  CHECK(cli({"construct", "C22", "--output", a.path}) == 0);
  CHECK(cli({"construct", "C22", "--output", b.path}) == 0);
  CHECK(a.slurp() == b.slurp());

  json j = json::parse(a.slurp());
  CHECK(j["order"] == 22);
  CHECK(j["connection_set"].size() == 8);
  CHECK(j["verified"] == true);

  TempFile neg("cert_neg.json");
  CHECK(cli({"construct", "D6", "--output", neg.path}) == 1);
  json nj = json::parse(neg.slurp());
  CHECK(nj["connection_set"].empty());
  CHECK(nj["method"] == "exceptional");
}

TEST_CASE("classify") {
  CHECK(cli({"classify", "D8"}) == 1);

  TempFile out("classify.json");
  CHECK(cli({"classify", "D16", "--output", out.path}) == 0);
  json j = json::parse(out.slurp());
  CHECK(j["admits_hgr"] == "yes");

  TempFile csv("orders.csv");
  CHECK(cli({"classify", "--orders", "3..6", "--output", csv.path}) == 0);
  std::string text = csv.slurp();
  int lines = 0;
  for (char c : text)
    if (c == '\n') ++lines;
  CHECK(lines == 7);
  CHECK(text.rfind("order,group,", 0) == 0);

  CHECK(cli({"classify"}) == 64);
  CHECK(cli({"classify", "D8", "--orders", "3..6"}) == 64);
  CHECK(cli({"classify", "--orders", "six"}) == 64);
  CHECK(cli({"classify", "--orders", "7..3"}) == 64);
}

TEST_CASE("tables") {
  TempFile out("tables.csv");
  CHECK(cli({"tables", "--max-order", "8", "--output", out.path}) == 0);
  std::string text = out.slurp();
  CHECK(text.rfind("order,group,", 0) == 0);
  CHECK(text.find("mismatch") == std::string::npos);

  TempFile js("tables.json");
  CHECK(cli({"tables", "--max-order", "6", "--format", "json", "--output", js.path}) == 0);
  CHECK(json::parse(js.slurp())["all_match"] == true);

  CHECK(cli({"tables", "--max-order", "2"}) == 64);
}

TEST_CASE("cayley check") {
  CHECK(cli({"cayley-check", "D6"}) == 0);

  TempFile out("cayley.json");
  CHECK(cli({"cayley-check", "A4", "--output", out.path}) == 1);
  json j = json::parse(out.slurp());
  CHECK(j["every_haar_is_cayley"] == "no");
  CHECK(j["witness"].is_array());

  CHECK(cli({"cayley-check", "C8"}) == 64);
}

TEST_CASE("verify") {
  TempFile cert("verify_cert.json");
  REQUIRE(cli({"construct", "C22", "--output", cert.path}) == 0);

  TempFile report("verify_report.json");
  CHECK(cli({"verify", cert.path, "--output", report.path}) == 0);
  json j = json::parse(report.slurp());
  CHECK(j["consistent"] == true);
  CHECK(j["negative"] == false);
  CHECK(j["mismatches"].empty());

  SUBCASE("a tampered count is caught") {
    json doc = json::parse(cert.slurp());
    doc["aut_order"] = doc["aut_order"].get<long long>() + 1;
    cert.write(doc.dump());
    CHECK(cli({"verify", cert.path, "--output", report.path}) == 1);
    json r = json::parse(report.slurp());
    CHECK(r["consistent"] == false);
    CHECK_FALSE(r["mismatches"].empty());
  }
  SUBCASE("a tampered window flag is caught") {
    json doc = json::parse(cert.slurp());
    doc["window"] = false;
    cert.write(doc.dump());
    CHECK(cli({"verify", cert.path}) == 1);
  }
  SUBCASE("negative certificates check structurally") {
    TempFile neg("verify_neg.json");
    REQUIRE(cli({"construct", "D6", "--output", neg.path}) == 1);
    TempFile nr("verify_neg_report.json");
    CHECK(cli({"verify", neg.path, "--output", nr.path}) == 0);
    CHECK(json::parse(nr.slurp())["negative"] == true);
  }
}

TEST_CASE("group files and the group override") {
  // A Klein four-group under a name the resolver cannot rebuild on its own.
  TempFile file("k4.json");
  file.write(R"({
    "kind": "table",
    "name": "K4file",
    "order": 4,
    "mul": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]
  })");

  TempFile cert("k4_cert.json");
  CHECK(cli({"construct", file.path, "--output", cert.path}) == 1);
  CHECK(json::parse(cert.slurp())["group"] == "K4file");

  CHECK(cli({"verify", cert.path}) == 64);
  CHECK(cli({"verify", cert.path, "--group", file.path}) == 0);
  CHECK(cli({"verify", cert.path, "--group", "C8"}) == 64);
}

TEST_CASE("poset and ideals") {
  TempFile cert("poset_cert.json");
  REQUIRE(cli({"construct", "D16", "--output", cert.path}) == 0);

  TempFile rep("poset_report.json");
  CHECK(cli({"poset", cert.path, "--output", rep.path}) == 0);
  json j = json::parse(rep.slurp());
  CHECK(j["aut_order"] == 16);
  CHECK(j["semiregular"] == true);
  CHECK(j["orbit_count"] == 2);

  TempFile dot("poset.dot");
  CHECK(cli({"poset", cert.path, "--format", "dot", "--output", dot.path}) == 0);
  CHECK(dot.slurp().rfind("digraph hasse {", 0) == 0);

  TempFile ideals("ideals.json");
  CHECK(cli({"ideals", cert.path, "--output", ideals.path}) == 0);
  json lj = json::parse(ideals.slurp());
  CHECK(lj["within"] == true);
  CHECK(lj["window"] == false);

  // An exceptional certificate has no poset to report on.
  TempFile neg("poset_neg.json");
  REQUIRE(cli({"construct", "D6", "--output", neg.path}) == 1);
  CHECK(cli({"poset", neg.path}) == 64);
}

TEST_CASE("worker count does not change the bytes") {
  TempFile one("workers_one.json");
  TempFile four("workers_four.json");
  CHECK(cli({"classify", "D12", "--workers", "1", "--output", one.path}) == 1);
  CHECK(cli({"classify", "D12", "--workers", "4", "--output", four.path}) == 1);
  CHECK(one.slurp() == four.slurp());
}

TEST_CASE("usage errors") {
  CHECK(cli({}) == 64);
  CHECK(cli({"frobnicate"}) == 64);
  CHECK(cli({"--help"}) == 0);
  CHECK(cli({"construct", "C22", "--format", "yaml"}) == 64);
  CHECK(cli({"construct", "C22", "--output", "/nonexistent-dir/x.json"}) == 64);
}
