#include "atlas/json_io.hpp"

#include <fstream>
#include <sstream>

namespace atlas {

json poset_to_json(const Poset& P) {
    json j;
    j["elements"] = json::array();
    for (int i = 0; i < P.size(); ++i) j["elements"].push_back(P.label(i));
    j["relations"] = json::array();
    for (auto& [a, b] : P.hasse_edges())
        j["relations"].push_back(json::array({P.label(a), P.label(b)}));
    j["mode"] = "covers";
    return j;
}

Poset poset_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("elements"))
            throw ParseError("poset document must contain \"elements\"");
        std::vector<std::string> labels;
        for (const auto& e : j.at("elements")) labels.push_back(e.get<std::string>());
        std::vector<std::pair<std::string, std::string>> relations;
        if (j.contains("relations"))
            for (const auto& r : j.at("relations")) {
                if (!r.is_array() || r.size() != 2)
                    throw ParseError("each relation must be a pair");
                relations.emplace_back(r[0].get<std::string>(), r[1].get<std::string>());
            }
        RelationMode mode = RelationMode::Covers;
        if (j.contains("mode")) {
            std::string m = j.at("mode").get<std::string>();
            if (m == "covers")
                mode = RelationMode::Covers;
            else if (m == "full")
                mode = RelationMode::Full;
            else
                throw ParseError("unknown mode: " + m);
        }
        return Poset::build(std::move(labels), relations, mode);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed poset document: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

json map_to_json(const Poset& P, const PlaneMap& mu) {
    json pts = json::object();
    for (int e = 0; e < P.size(); ++e)
        pts[P.label(e)] = json::array({mu.x(e), mu.y(e)});
    return json{{"points", pts}};
}

PlaneMap map_from_json(const Poset& P, const json& j) {
    try {
        const json& pts = j.at("points");
        PlaneMap mu;
        mu.pts.assign(size_t(P.size()), {0, 0});
        std::vector<bool> seen(size_t(P.size()), false);
        for (auto it = pts.begin(); it != pts.end(); ++it) {
            int e = P.index_of(it.key());
            if (e < 0) throw ParseError("map mentions unknown element: " + it.key());
            mu.pts[static_cast<size_t>(e)] = {it.value()[0].get<int64_t>(), it.value()[1].get<int64_t>()};
            seen[static_cast<size_t>(e)] = true;
        }
        for (int e = 0; e < P.size(); ++e)
            if (!seen[static_cast<size_t>(e)])
                throw ParseError("map missing element: " + P.label(e));
        return mu;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed map document: ") + e.what());
    }
}

json certificate_to_json(const Poset& P, const TightSetCertificate& cert) {
    json j;
    j["tight"] = json::array();
    cert.T.for_each([&](int e) { j["tight"].push_back(P.label(e)); });
    j["K"] = json::array();
    for (int e : cert.K) j["K"].push_back(P.label(e));
    j["L"] = json::array();
    for (int e : cert.L) j["L"].push_back(P.label(e));
    return j;
}

json bounds_to_json(const Bounds& b) {
    return json{{"dim_lower_from_at", b.dim_lower_from_at},
                {"at_lower_crown", b.at_lower_crown},
                {"at_lower_dim", b.at_lower_dim},
                {"at_upper_chain_pairing", b.at_upper_chain_pairing},
                {"dmap_lower_height", b.dmap_lower_height},
                {"dmap_lower_maxup", b.dmap_lower_maxup}};
}

json atlas_to_json(const Poset& P, const Atlas& atlas) {
    json j;
    j["poset"] = poset_to_json(P);
    j["maps"] = json::array();
    for (const auto& mu : atlas.maps) j["maps"].push_back(map_to_json(P, mu));
    json assign = json::object();
    for (int e = 0; e < P.size(); ++e)
        assign[P.label(e)] = atlas.assignment[static_cast<size_t>(e)];
    j["assignment"] = assign;
    j["certificates"] = json::array();
    for (const auto& cert : atlas.certificates)
        j["certificates"].push_back(certificate_to_json(P, cert));
    return j;
}

std::pair<Poset, Atlas> atlas_from_json(const json& j) {
    try {
        Poset P = poset_from_json(j.at("poset"));
        Atlas atlas;
        for (const auto& m : j.at("maps")) atlas.maps.push_back(map_from_json(P, m));
        atlas.assignment.assign(size_t(P.size()), -1);
        const json& assign = j.at("assignment");
        for (auto it = assign.begin(); it != assign.end(); ++it) {
            int e = P.index_of(it.key());
            if (e < 0) throw ParseError("assignment mentions unknown element: " + it.key());
            atlas.assignment[static_cast<size_t>(e)] = it.value().get<int>();
        }
        for (int e = 0; e < P.size(); ++e)
            if (atlas.assignment[static_cast<size_t>(e)] < 0)
                throw ParseError("assignment missing element: " + P.label(e));
        return {std::move(P), std::move(atlas)};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed atlas document: ") + e.what());
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_text_file(path));
    } catch (const json::exception& e) {
        throw ParseError("invalid JSON in " + path + ": " + e.what());
    }
}

} // namespace atlas
