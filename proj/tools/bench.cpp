// Benchmark of the parallel classifier against the serial reference path.
// Both paths must produce identical reports; the table shows the speedup.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "haarrep/classify.hpp"
#include "haarrep/named.hpp"

namespace {

double run_ms(const hgr::FiniteGroup& G, bool serial, hgr::ClassificationReport& out) {
  hgr::ClassifyOptions opts;
  opts.serial_reference = serial;
  auto start = std::chrono::steady_clock::now();
  out = hgr::classify_group(G, opts);
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

bool same_report(const hgr::ClassificationReport& a, const hgr::ClassificationReport& b) {
  return a.admits_hgr == b.admits_hgr && a.admits_rigid_bipartition == b.admits_rigid_bipartition &&
         a.hgr_witness == b.hgr_witness && a.rigid_witness == b.rigid_witness &&
         a.class_count == b.class_count && a.classes_failed == b.classes_failed;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> names(argv + 1, argv + argc);
  if (names.empty()) names = {"A4", "D12", "Dic12", "C2^4"};

  std::printf("%-10s %10s %12s %12s %8s\n", "group", "classes", "serial ms", "parallel ms",
              "speedup");
  bool ok = true;
  for (const std::string& name : names) {
    hgr::FiniteGroup G = hgr::resolve_group(name);
    hgr::ClassificationReport serial, parallel;
    double t_serial = run_ms(G, true, serial);
    double t_parallel = run_ms(G, false, parallel);
    bool agree = same_report(serial, parallel);
    ok = ok && agree;
    std::printf("%-10s %10llu %12.1f %12.1f %7.2fx%s\n", name.c_str(),
                static_cast<unsigned long long>(serial.class_count), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0, agree ? "" : "  MISMATCH");
  }
  if (!ok) {
    std::fprintf(stderr, "serial and parallel classifications disagree\n");
    return 1;
  }
  return 0;
}
