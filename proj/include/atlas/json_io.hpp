#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include <json.hpp>

#include "atlas/plane_map.hpp"
#include "atlas/poset.hpp"
#include "atlas/solvers.hpp"

namespace atlas {

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

using nlohmann::json;

// {"elements": [...], "relations": [["a","ab"], ...], "mode": "covers"|"full"}
json poset_to_json(const Poset& P);
Poset poset_from_json(const json& j);

// {"points": {"a": [0, 5], ...}}
json map_to_json(const Poset& P, const PlaneMap& mu);
PlaneMap map_from_json(const Poset& P, const json& j);

json certificate_to_json(const Poset& P, const TightSetCertificate& cert);
json bounds_to_json(const Bounds& b);

// {"poset": {...}, "maps": [...], "assignment": {...}, "certificates": [...]}
json atlas_to_json(const Poset& P, const Atlas& atlas);
std::pair<Poset, Atlas> atlas_from_json(const json& j);

json parse_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

} // namespace atlas
