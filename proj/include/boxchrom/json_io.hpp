#pragma once

#include <string>

#include "json.hpp"

#include "boxchrom/constructions.hpp"
#include "boxchrom/geometry.hpp"
#include "boxchrom/solver.hpp"
#include "boxchrom/bounds.hpp"

namespace bxc {

using Json = nlohmann::ordered_json;

// Arrangement JSON, field order fixed:
// {"scale": int, "floor_axis": int, "boxes": [{"id", "x", "y", "z"}...], "regions": {...}}
Json arrangement_to_json(const Arrangement& a);
Arrangement arrangement_from_json(const Json& j);

// Coloring JSON: {"graph_hash": str, "colors": {"id": int}}
Json coloring_to_json(const ConflictGraph& g, const Coloring& c);
Coloring coloring_from_json(const Json& j);

Json zstructure_to_json(const ZStructure& zs);

Json report_to_json(const StrategyReport& r);

/// FNV-1a 64-bit content hash, hex encoded.
std::string content_hash(const std::string& text);

std::string graph_hash(const ConflictGraph& g);

Json parse_json(const std::string& text);  // throws ParseError

}  // namespace bxc
