#include "report.hpp"

#include <sstream>

namespace dirhyp::cli {

Json to_json(ExtNat e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Json to_json(const Rational& q) { return format_rational(q); }

Json walk_json(const Digraph& g, const Walk& w) {
  Json out = Json::array();
  for (Vertex v : w.vertices) out.push_back(g.label(v));
  return out;
}

Json triangle_json(const Digraph& g, const GeodesicTriangle& t) {
  Json out;
  out["endpoints"] = Json::array();
  for (Vertex v : t.endpoints) out["endpoints"].push_back(g.label(v));
  out["pattern"] = t.pattern;
  out["sides"] = Json::array();
  for (const auto& s : t.sides) out["sides"].push_back(walk_json(g, s.walk));
  return out;
}

Json profile_json(const BoundProfile& p) {
  Json out = Json::array();
  for (auto v : p.values) out.push_back(to_json(v));
  return out;
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, os);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& v : j) {
      auto idx = std::to_string(i++);
      flatten(v, path.empty() ? idx : path + "." + idx, os);
    }
    if (j.empty()) os << path << "\t[]\n";
  } else if (j.is_string()) {
    os << path << '\t' << j.get<std::string>() << '\n';
  } else {
    os << path << '\t' << j.dump() << '\n';
  }
}

}  // namespace

std::string render(const Json& report, const std::string& format) {
  if (format == "tsv") {
    std::ostringstream os;
    flatten(report, "", os);
    return os.str();
  }
  return report.dump(2) + "\n";
}

}  // namespace dirhyp::cli
