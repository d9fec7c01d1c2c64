#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "fusionkit/fusion_ring.hpp"
#include "fusionkit/hypergroup.hpp"
#include "fusionkit/perm_group.hpp"

namespace fusionkit::io {

// Malformed input file; the message names the offending location.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json read_json_file(const std::filesystem::path& path);

// {"degree": n, "generators": ["(1 2)", ...]}
nlohmann::json to_json(const PermGroup& group);
PermGroup perm_group_from_json(const nlohmann::json& j, const Limits& limits = {});

// {"rank": n, "labels": [...], "unit": i, "dual": [...], "N": [[x,y,z,v], ...]}
nlohmann::json to_json(const FusionRing& ring);
FusionRing fusion_ring_from_json(const nlohmann::json& j);

// {"rank": n, "involution": [...], "c": [[i,j,k,value], ...]}, plus
// optional "labels".
nlohmann::json to_json(const Hypergroup& h);
Hypergroup hypergroup_from_json(const nlohmann::json& j);

}  // namespace fusionkit::io
