#include "boxchrom/json_io.hpp"

#include <sstream>

namespace bxc {

Json arrangement_to_json(const Arrangement& a) {
  Json j;
  j["scale"] = a.scale;
  j["floor_axis"] = a.floor_axis;
  Json boxes = Json::array();
  for (const auto& b : a.boxes) {
    Json bj;
    bj["id"] = b.id;
    bj["x"] = {b.ext[0].lo, b.ext[0].hi};
    bj["y"] = {b.ext[1].lo, b.ext[1].hi};
    bj["z"] = {b.ext[2].lo, b.ext[2].hi};
    boxes.push_back(bj);
  }
  j["boxes"] = boxes;
  Json regions = Json::object();
  for (const auto& [name, ids] : a.regions) regions[name] = ids;
  j["regions"] = regions;
  return j;
}

Arrangement arrangement_from_json(const Json& j) {
  try {
    Arrangement a;
    a.scale = j.value("scale", 1);
    a.floor_axis = j.value("floor_axis", 2);
    for (const auto& bj : j.at("boxes")) {
      Box b;
      b.id = bj.at("id").get<std::string>();
      const char* axes[3] = {"x", "y", "z"};
      for (int d = 0; d < 3; ++d) {
        const auto& iv = bj.at(axes[d]);
        b.ext[d] = {iv.at(0).get<Coord>(), iv.at(1).get<Coord>()};
      }
      a.boxes.push_back(std::move(b));
    }
    if (j.contains("regions"))
      for (const auto& [name, ids] : j.at("regions").items()) {
        std::set<std::string> s;
        for (const auto& id : ids) s.insert(id.get<std::string>());
        a.regions[name] = std::move(s);
      }
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad arrangement JSON: ") + e.what());
  }
}

Json coloring_to_json(const ConflictGraph& g, const Coloring& c) {
  Json j;
  j["graph_hash"] = g.source_hash;
  Json colors = Json::object();
  for (const auto& [id, col] : c) colors[id] = col;
  j["colors"] = colors;
  return j;
}

Coloring coloring_from_json(const Json& j) {
  try {
    Coloring c;
    for (const auto& [id, col] : j.at("colors").items()) c[id] = col.get<int>();
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad coloring JSON: ") + e.what());
  }
}

Json zstructure_to_json(const ZStructure& zs) {
  Json j;
  j["bottom"] = zs.bottom_copies;
  j["top"] = zs.top_copies;
  Json copies = Json::object();
  for (const auto& [name, boxes] : zs.copy_boxes) {
    Json cj;
    cj["boxes"] = boxes;
    Json regions = Json::array();
    for (const auto& reg : zs.copy_regions.at(name)) regions.push_back(reg);
    cj["regions"] = regions;
    copies[name] = cj;
  }
  j["copies"] = copies;
  Json demands = Json::array();
  for (const auto& d : zs.demands)
    demands.push_back({d.top_copy, d.top_region, d.bottom_index, d.bottom_region});
  j["demands"] = demands;
  return j;
}

Json report_to_json(const StrategyReport& r) {
  Json j;
  j["strategy"] = r.strategy;
  j["ell"] = r.ell;
  j["measure"] = {{"name", r.measure_name}, {"value", r.measure_value}};
  j["palette"] = r.palette;
  j["cap_integer"] = r.cap_integer;
  j["cap_closed_form"] = r.cap_closed_form;
  j["closed_form_ok"] = r.closed_form_ok;
  Json parts = Json::array();
  for (const auto& p : r.parts)
    parts.push_back({{"name", p.name}, {"boxes", p.boxes}, {"colors", p.colors}});
  j["parts"] = parts;
  return j;
}

std::string content_hash(const std::string& text) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

std::string graph_hash(const ConflictGraph& g) {
  std::ostringstream os;
  for (const auto& v : g.vertices) os << "v:" << v << ";";
  for (const auto& [u, v] : g.edges) os << "e:" << u << "," << v << ";";
  return content_hash(os.str());
}

Json parse_json(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
  return j;
}

}  // namespace bxc
