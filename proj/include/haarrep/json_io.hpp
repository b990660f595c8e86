// Serialization of certificates, graphs, posets, and reports. JSON output is
// byte-identical across runs for identical inputs; counts that can exceed
// 2^53 are emitted as decimal strings.
#pragma once

#include <string>

#include "haarrep/classify.hpp"
#include "haarrep/construct.hpp"
#include "haarrep/haar.hpp"
#include "haarrep/poset.hpp"

namespace hgr {

std::string certificate_to_json(const HgrCertificate& cert);
HgrCertificate certificate_from_json(const std::string& text);
void save_certificate(const HgrCertificate& cert, const std::string& path);
HgrCertificate load_certificate(const std::string& path);

std::string haar_graph_to_json(const HaarGraph& H);
std::string haar_graph_to_dot(const HaarGraph& H);

std::string poset_to_json(const Poset& P);
std::string poset_to_dot(const Poset& P);

std::string group_info_to_json(const FiniteGroup& G);

std::string classification_to_json(const ClassificationReport& rep);
std::string cayley_report_to_json(const CayleyReport& rep);
std::string tables_to_json(const TablesReport& rep);
std::string tables_to_csv(const TablesReport& rep);

std::string poset_report_to_json(const PosetReport& rep);
std::string lattice_report_to_json(const LatticeBoundReport& rep);

}  // namespace hgr
