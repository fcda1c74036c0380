#ifndef HC_IO_HPP
#define HC_IO_HPP

#include "hc/chambers.hpp"
#include "hc/cuts.hpp"
#include "hc/graphs.hpp"
#include "hc/poly.hpp"
#include "hc/wallcross.hpp"

#include <string>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace hc {

nlohmann::json graph_to_json(const XGraph& g);
XGraph graph_from_json(const nlohmann::json& j);
std::string graph_to_dot(const XGraph& g);

/// Sorted graded-lex list of {"exponents": [...], "coeff": "p/q"}.
nlohmann::json poly_to_json(const Multipoly& p);

nlohmann::json cut_poset_to_json(const CutPoset& poset);
nlohmann::json transport_to_json(const GmTransport& t);
nlohmann::json wall_report_to_json(const WallReport& rep);

std::string profile_to_string(const Profile& x);
Profile profile_from_string(const std::string& s);
EndSet subset_from_string(const std::string& s, int n);

} // namespace hc

#endif
