#pragma once

#include <dirhyp/boundary.hpp>
#include <dirhyp/hyperbolicity.hpp>

#include <json.hpp>

#include <string>

namespace dirhyp::cli {

using Json = nlohmann::ordered_json;

Json to_json(ExtNat e);  // number, or "inf"
Json to_json(const Rational& q);  // "p/q"
Json walk_json(const Digraph& g, const Walk& w);
Json triangle_json(const Digraph& g, const GeodesicTriangle& t);
Json profile_json(const BoundProfile& p);

// Canonical output is JSON; TSV flattens it to "path<TAB>value" rows.
std::string render(const Json& report, const std::string& format);

}  // namespace dirhyp::cli
