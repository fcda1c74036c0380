#include "hc/io.hpp"

#include <sstream>

namespace hc {

using nlohmann::json;

json graph_to_json(const XGraph& g) {
    json j;
    j["genus"] = g.genus;
    j["ends"] = json::array();
    for (int i = 0; i < g.num_ends(); ++i)
        j["ends"].push_back({{"label", i + 1}, {"vertex", g.end_vertex[i]}});
    j["edges"] = json::array();
    for (auto [a, b] : g.edges) j["edges"].push_back({{"tail", a}, {"head", b}});
    return j;
}

XGraph graph_from_json(const json& j) {
    int genus = j.at("genus").get<int>();
    std::vector<int> ends;
    for (auto& e : j.at("ends")) {
        int label = e.at("label").get<int>();
        if (label != static_cast<int>(ends.size()) + 1)
            throw std::invalid_argument("graph json: end labels must be 1..n in order");
        ends.push_back(e.at("vertex").get<int>());
    }
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j.at("edges"))
        edges.emplace_back(e.at("tail").get<int>(), e.at("head").get<int>());
    return XGraph::make(genus, ends, edges);
}

std::string graph_to_dot(const XGraph& g) {
    std::ostringstream os;
    os << "graph xgraph {\n";
    for (int v = 0; v < g.num_vertices; ++v) os << "  v" << v << " [shape=point];\n";
    for (int i = 0; i < g.num_ends(); ++i) {
        os << "  e" << (i + 1) << " [shape=plaintext,label=\"x" << (i + 1) << "\"];\n";
        os << "  e" << (i + 1) << " -- v" << g.end_vertex[i] << ";\n";
    }
    for (auto [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
    os << "}\n";
    return os.str();
}

json poly_to_json(const Multipoly& p) {
    json terms = json::array();
    for (auto& [e, c] : p.terms) terms.push_back({{"exponents", e}, {"coeff", rat_str(c)}});
    return terms;
}

json cut_poset_to_json(const CutPoset& poset) {
    json j;
    j["subset"] = [&] {
        std::vector<int> labels;
        for (int i = 0; i < poset.graph->num_ends(); ++i)
            if (poset.subset >> i & 1u) labels.push_back(i + 1);
        return labels;
    }();
    j["cuts"] = json::array();
    for (const Cut& c : poset.cuts) {
        std::vector<int> edges;
        for (int e = 0; e < poset.graph->num_edges(); ++e)
            if (c.edges >> e & 1u) edges.push_back(e);
        j["cuts"].push_back({{"edges", edges}, {"rank", c.rank}, {"components", c.ncomp}});
    }
    j["hasse"] = json::array();
    for (auto [a, b] : poset.hasse()) j["hasse"].push_back({a, b});
    return j;
}

json transport_to_json(const GmTransport& t) {
    json j;
    auto mask_list = [](const std::vector<OrientMask>& v) {
        std::vector<std::uint32_t> out(v.begin(), v.end());
        return out;
    };
    j["side1_chambers"] = mask_list(t.ch1);
    j["side2_chambers"] = mask_list(t.ch2);
    j["matrix"] = t.matrix;
    return j;
}

json wall_report_to_json(const WallReport& rep) {
    json j;
    j["genus"] = rep.g;
    j["ends"] = rep.n;
    std::vector<int> wall;
    for (int i = 0; i < rep.n; ++i)
        if (rep.subset >> i & 1u) wall.push_back(i + 1);
    j["wall"] = wall;
    j["witness_negative_side"] = rep.witness_c1;
    j["witness_positive_side"] = rep.witness_c2;
    j["wall_crossing_polynomial"] = poly_to_json(rep.wc);
    j["checks"] = json::array();
    for (auto& c : rep.checks)
        j["checks"].push_back({{"at", c.at},
                               {"route", c.route},
                               {"lhs", rat_str(c.lhs)},
                               {"other", rat_str(c.other)},
                               {"ok", c.ok}});
    j["pass"] = rep.pass;
    return j;
}

std::string profile_to_string(const Profile& x) {
    std::ostringstream os;
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    return os.str();
}

Profile profile_from_string(const std::string& s) {
    Profile x;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        x.push_back(std::stoll(tok));
    }
    return x;
}

EndSet subset_from_string(const std::string& s, int n) {
    EndSet I = 0;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        int label = std::stoi(tok);
        if (label < 1 || label > n) throw std::invalid_argument("wall label out of range");
        I |= EndSet{1} << (label - 1);
    }
    return I;
}

} // namespace hc
