#include "fusionkit/io.hpp"

#include <fstream>

namespace fusionkit::io {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object at top level");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(where + ": expected a nonnegative integer");
  }
  return v.get<std::size_t>();
}

std::vector<std::size_t> index_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ParseError(where + ": expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_index(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::string> label_list(const json& j, std::size_t rank) {
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& v = j["labels"];
    if (!v.is_array() || v.size() != rank) {
      throw ParseError("labels: expected an array of " + std::to_string(rank) + " strings");
    }
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!v[i].is_string()) throw ParseError("labels[" + std::to_string(i) + "]: expected a string");
      labels.push_back(v[i].get<std::string>());
    }
  } else {
    for (std::size_t i = 0; i < rank; ++i) labels.push_back(std::to_string(i));
  }
  return labels;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

json to_json(const PermGroup& group) {
  json gens = json::array();
  for (const auto& g : group.generators()) gens.push_back(g.to_cycle_string());
  return {{"degree", group.degree()}, {"generators", gens}};
}

PermGroup perm_group_from_json(const json& j, const Limits& limits) {
  auto degree = as_index(field(j, "degree"), "degree");
  const auto& gens = field(j, "generators");
  if (!gens.is_array()) throw ParseError("generators: expected an array");
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!gens[i].is_string()) {
      throw ParseError("generators[" + std::to_string(i) + "]: expected a cycle string");
    }
    try {
      perms.push_back(Perm::parse(gens[i].get<std::string>(), degree));
    } catch (const InvalidInput& e) {
      throw ParseError("generators[" + std::to_string(i) + "]: " + e.what());
    }
  }
  return generate(degree, std::move(perms), limits);
}

json to_json(const FusionRing& ring) {
  json n = json::array();
  for (const auto& e : ring.entries()) n.push_back({e.x, e.y, e.z, e.value});
  return {{"rank", ring.rank()},
          {"labels", ring.labels()},
          {"unit", ring.unit()},
          {"dual", ring.duals()},
          {"N", n}};
}

FusionRing fusion_ring_from_json(const json& j) {
  auto rank = as_index(field(j, "rank"), "rank");
  auto unit = as_index(field(j, "unit"), "unit");
  auto dual = index_list(field(j, "dual"), "dual");
  const auto& n = field(j, "N");
  if (!n.is_array()) throw ParseError("N: expected an array");
  std::vector<FusionEntry> entries;
  for (std::size_t i = 0; i < n.size(); ++i) {
    auto where = "N[" + std::to_string(i) + "]";
    if (!n[i].is_array() || n[i].size() != 4) throw ParseError(where + ": expected [x, y, z, value]");
    auto idx = index_list(n[i], where);
    entries.push_back({idx[0], idx[1], idx[2], static_cast<int>(idx[3])});
  }
  try {
    return FusionRing(label_list(j, rank), unit, std::move(dual), entries);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

json to_json(const Hypergroup& h) {
  json c = json::array();
  for (const auto& e : h.entries()) c.push_back({e.i, e.j, e.k, e.value});
  return {{"rank", h.rank()}, {"labels", h.labels()}, {"involution", h.involutions()}, {"c", c}};
}

Hypergroup hypergroup_from_json(const json& j) {
  auto rank = as_index(field(j, "rank"), "rank");
  auto involution = index_list(field(j, "involution"), "involution");
  const auto& c = field(j, "c");
  if (!c.is_array()) throw ParseError("c: expected an array");
  std::vector<HypergroupEntry> entries;
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto where = "c[" + std::to_string(i) + "]";
    if (!c[i].is_array() || c[i].size() != 4 || !c[i][3].is_number()) {
      throw ParseError(where + ": expected [i, j, k, value]");
    }
    entries.push_back({as_index(c[i][0], where), as_index(c[i][1], where),
                       as_index(c[i][2], where), c[i][3].get<double>()});
  }
  try {
    return Hypergroup(label_list(j, rank), std::move(involution), entries);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }
}

}  // namespace fusionkit::io
